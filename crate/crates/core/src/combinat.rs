//! Exact counting and exhaustive enumeration of paths, trees and frog walks.
//!
//! The enumerators are lazy iterators driven by an explicit backtracking
//! stack. Their outputs are in lexicographic order of the text encodings and
//! serve as brute-force oracles for the closed-form counts and the bijection.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arity::Arity;
use crate::error::{Error, Result};
use crate::lattice::{FrogWalk, Move, Point};
use crate::path::{block_letter, Path, Step};
use crate::tree::TAryTree;

/// Default cap on `t * n` for path and tree enumeration.
pub const DEFAULT_BOUND: usize = 24;

/// Largest `n` accepted by the frog-walk brute force.
pub const MAX_WALK_N: usize = 5;

/// Exact nonnegative integer count.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigCount(BigUint);

impl BigCount {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        BigCount(v)
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<usize> for BigCount {
    fn from(v: usize) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl PartialEq<u64> for BigCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `C(n, k)` by the multiplicative formula; every intermediate quotient is exact.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Fuss–Catalan number `C(t n, n) / ((t - 1) n + 1)`: the number of
/// t-generalized S-Motzkin paths of length `t n`, and of t-ary trees with
/// `n` nodes.
pub fn count_paths(n: u64, arity: Arity) -> BigCount {
    let t = arity.get() as u64;
    let (q, r) = binomial(t * n, n).div_rem(&BigUint::from((t - 1) * n + 1));
    assert!(r.is_zero(), "Fuss-Catalan division left remainder {r}");
    BigCount(q)
}

/// A depth-first search over words built one letter at a time.
trait Search {
    type Item;

    /// Number of alternatives tried at every position, in output order.
    const BRANCHES: usize;

    fn is_complete(&self) -> bool;

    /// Appends alternative `branch` if the extended prefix is still feasible.
    fn try_push(&mut self, branch: usize) -> bool;

    fn pop(&mut self);

    fn emit(&self) -> Self::Item;
}

struct Backtrack<S> {
    state: S,
    /// Next alternative to try at each depth of the current prefix.
    next: Vec<usize>,
}

impl<S: Search> Backtrack<S> {
    fn new(state: S) -> Self {
        Backtrack {
            state,
            next: vec![0],
        }
    }

    fn retreat(&mut self) {
        self.next.pop();
        if !self.next.is_empty() {
            self.state.pop();
        }
    }
}

impl<S: Search> Iterator for Backtrack<S> {
    type Item = S::Item;

    fn next(&mut self) -> Option<S::Item> {
        loop {
            let depth = self.next.len().checked_sub(1)?;
            if self.state.is_complete() {
                let item = self.state.emit();
                self.retreat();
                return Some(item);
            }
            let branch = self.next[depth];
            if branch == S::BRANCHES {
                self.retreat();
                continue;
            }
            self.next[depth] += 1;
            if self.state.try_push(branch) {
                self.next.push(0);
            }
        }
    }
}

fn check_bound(n: usize, arity: Arity, bound: usize) -> Result<()> {
    let length = n.saturating_mul(arity.get());
    if length > bound {
        return Err(Error::BoundExceeded { length, bound });
    }
    Ok(())
}

struct PathSearch {
    arity: Arity,
    length: usize,
    word: Vec<Step>,
    flats_left: usize,
    ups_left: usize,
    downs_left: usize,
    height: usize,
    /// Letters of the `{F,U}` projection placed so far.
    projected: usize,
}

impl Search for PathSearch {
    type Item = Path;
    const BRANCHES: usize = 3;

    fn is_complete(&self) -> bool {
        self.word.len() == self.length
    }

    fn try_push(&mut self, branch: usize) -> bool {
        let step = Step::ALL[branch];
        match step {
            Step::D => {
                if self.downs_left == 0 || self.height == 0 {
                    return false;
                }
                self.downs_left -= 1;
                self.height -= 1;
            }
            Step::F => {
                if self.flats_left == 0 || block_letter(self.projected, self.arity) != Step::F {
                    return false;
                }
                self.flats_left -= 1;
                self.projected += 1;
            }
            Step::U => {
                if self.ups_left == 0 || block_letter(self.projected, self.arity) != Step::U {
                    return false;
                }
                self.ups_left -= 1;
                self.height += 1;
                self.projected += 1;
            }
        }
        self.word.push(step);
        true
    }

    fn pop(&mut self) {
        match self.word.pop() {
            Some(Step::D) => {
                self.downs_left += 1;
                self.height += 1;
            }
            Some(Step::F) => {
                self.flats_left += 1;
                self.projected -= 1;
            }
            Some(Step::U) => {
                self.ups_left += 1;
                self.height -= 1;
                self.projected -= 1;
            }
            None => {}
        }
    }

    fn emit(&self) -> Path {
        Path::from(self.word.clone())
    }
}

/// Lazily enumerates the t-generalized S-Motzkin paths of length `t n` in
/// lexicographic order of their text (`D < F < U`).
pub struct PathEnumerator(Backtrack<PathSearch>);

impl Iterator for PathEnumerator {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        self.0.next()
    }
}

pub fn enumerate_paths(n: usize, arity: Arity) -> Result<PathEnumerator> {
    enumerate_paths_bounded(n, arity, DEFAULT_BOUND)
}

pub fn enumerate_paths_bounded(n: usize, arity: Arity, bound: usize) -> Result<PathEnumerator> {
    check_bound(n, arity, bound)?;
    let length = n * arity.get();
    Ok(PathEnumerator(Backtrack::new(PathSearch {
        arity,
        length,
        word: Vec::with_capacity(length),
        flats_left: arity.flats_per_block() * n,
        ups_left: n,
        downs_left: n,
        height: 0,
        projected: 0,
    })))
}

/// Builds the preorder slot word of a tree: `true` for a node, `false` for
/// an empty slot.
struct TreeSearch {
    arity: Arity,
    word: Vec<bool>,
    nodes_left: usize,
    /// Slots opened but not yet filled.
    open: usize,
}

impl Search for TreeSearch {
    type Item = TAryTree;
    const BRANCHES: usize = 2;

    fn is_complete(&self) -> bool {
        self.open == 0
    }

    fn try_push(&mut self, branch: usize) -> bool {
        if branch == 0 {
            if self.nodes_left == 0 {
                return false;
            }
            self.nodes_left -= 1;
            self.open += self.arity.get() - 1;
            self.word.push(true);
        } else {
            if self.open == 1 && self.nodes_left > 0 {
                return false;
            }
            self.open -= 1;
            self.word.push(false);
        }
        true
    }

    fn pop(&mut self) {
        match self.word.pop() {
            Some(true) => {
                self.nodes_left += 1;
                self.open -= self.arity.get() - 1;
            }
            Some(false) => self.open += 1,
            None => {}
        }
    }

    fn emit(&self) -> TAryTree {
        TAryTree::from_preorder_slots(self.arity, &self.word)
    }
}

/// Lazily enumerates the t-ary trees with `n` nodes in ASCII order of their
/// canonical encoding.
///
/// A node (`(`) sorts before an empty slot (`.`), and `)` can never compete
/// with either at the first point two encodings differ, so the order is
/// that of the preorder slot words with nodes first.
pub struct TreeEnumerator(Backtrack<TreeSearch>);

impl Iterator for TreeEnumerator {
    type Item = TAryTree;

    fn next(&mut self) -> Option<TAryTree> {
        self.0.next()
    }
}

pub fn enumerate_trees(n: usize, arity: Arity) -> Result<TreeEnumerator> {
    enumerate_trees_bounded(n, arity, DEFAULT_BOUND)
}

pub fn enumerate_trees_bounded(n: usize, arity: Arity, bound: usize) -> Result<TreeEnumerator> {
    check_bound(n, arity, bound)?;
    Ok(TreeEnumerator(Backtrack::new(TreeSearch {
        arity,
        word: Vec::with_capacity(n * arity.get() + 1),
        nodes_left: n,
        open: 1,
    })))
}

struct WalkSearch {
    n: u64,
    moves: Vec<Move>,
    at: Vec<Point>,
}

impl Search for WalkSearch {
    type Item = FrogWalk;
    const BRANCHES: usize = 3;

    fn is_complete(&self) -> bool {
        self.moves.len() as u64 == 3 * self.n
    }

    fn try_push(&mut self, branch: usize) -> bool {
        let m = Move::ALL[branch];
        let here = *self.at.last().expect("origin is always present");
        let next = here.advance(m);
        if next.x > self.n || next.y > self.n || next.z > self.n || !next.in_omega() {
            return false;
        }
        self.moves.push(m);
        self.at.push(next);
        true
    }

    fn pop(&mut self) {
        self.moves.pop();
        self.at.pop();
    }

    fn emit(&self) -> FrogWalk {
        FrogWalk::from(self.moves.clone())
    }
}

/// Lazily enumerates the Ω-confined walks from the origin to `(n, n, n)`
/// in order `X < Y < Z`.
pub struct WalkEnumerator(Backtrack<WalkSearch>);

impl Iterator for WalkEnumerator {
    type Item = FrogWalk;

    fn next(&mut self) -> Option<FrogWalk> {
        self.0.next()
    }
}

pub fn enumerate_walks(n: usize) -> Result<WalkEnumerator> {
    if n > MAX_WALK_N {
        return Err(Error::BoundExceeded {
            length: 3 * n,
            bound: 3 * MAX_WALK_N,
        });
    }
    Ok(WalkEnumerator(Backtrack::new(WalkSearch {
        n: n as u64,
        moves: Vec::with_capacity(3 * n),
        at: vec![Point::ORIGIN],
    })))
}

/// Counts frog walks to `(n, n, n)` by exhaustive search.
pub fn count_walks_brute(n: usize) -> Result<BigCount> {
    Ok(BigCount::from(enumerate_walks(n)?.count()))
}
