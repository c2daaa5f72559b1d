use thiserror::Error;

use crate::path::PathViolation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity must be at least 2, got {0}")]
    InvalidArity(usize),

    #[error("unexpected character {found:?} at index {index}")]
    UnexpectedChar { index: usize, found: char },

    #[error("unexpected end of input at index {index}")]
    UnexpectedEnd { index: usize },

    #[error("trailing input at index {index}")]
    TrailingInput { index: usize },

    #[error("node at index {index} has {found} children, expected {expected}")]
    ChildCount {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("arity mismatch: expected {expected}, got {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("not an S-Motzkin path: {0}")]
    InvalidPath(PathViolation),

    #[error("cannot decompose the empty path")]
    EmptyPath,

    #[error("enumeration of length {length} exceeds the bound {bound}")]
    BoundExceeded { length: usize, bound: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
