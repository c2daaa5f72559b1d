use std::fmt;

use crate::error::{Error, Result};

/// Branching factor `t` shared by t-ary trees and t-generalized paths.
///
/// A path of the class with arity `t` has `(t - 2) * n` flat steps and `n`
/// up and down steps; a tree of arity `t` has exactly `t` child slots per node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arity(usize);

impl Arity {
    pub const BINARY: Arity = Arity(2);
    pub const TERNARY: Arity = Arity(3);

    pub fn new(t: usize) -> Result<Self> {
        if t < 2 {
            return Err(Error::InvalidArity(t));
        }
        Ok(Arity(t))
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// Number of flat steps preceding each up step in the block word.
    pub fn flats_per_block(self) -> usize {
        self.0 - 2
    }
}

impl Default for Arity {
    fn default() -> Self {
        Arity::TERNARY
    }
}

impl fmt::Display for Arity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl TryFrom<usize> for Arity {
    type Error = Error;

    fn try_from(t: usize) -> Result<Self> {
        Arity::new(t)
    }
}
