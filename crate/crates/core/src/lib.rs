//! S-Motzkin paths, ternary trees and the frog walks of the region
//! `0 ≤ z ≤ y ≤ x ≤ y + 1`, with the bijection between paths and trees,
//! exact counting, and exhaustive enumerators used as oracles.

pub mod arity;
pub mod bijection;
pub mod cli;
pub mod combinat;
pub mod error;
pub mod lattice;
pub mod path;
pub mod tree;

pub use arity::Arity;
pub use bijection::{compose, decompose, path_to_tree, split_b, tree_to_path, Decomposition};
pub use combinat::{
    count_paths, count_walks_brute, enumerate_paths, enumerate_trees, enumerate_walks, BigCount,
};
pub use error::{Error, Result};
pub use lattice::{path_to_walk, walk_to_path, FrogWalk, Move};
pub use path::{
    classify, classify_with, Path, PathClassReport, PathViolation, SMotzkinChecks, Step,
};
pub use tree::TAryTree;
