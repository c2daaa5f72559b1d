//! Frog walks in Z³ confined to the region
//! `Ω = {(x, y, z) : 0 ≤ z ≤ y ≤ x ≤ y + 1}`.
//!
//! Relabelling `X → F`, `Y → U`, `Z → D` turns a walk into a path whose
//! prefix counts `(#F, #U, #D)` are exactly the frog's coordinates.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::path::{Path, Step};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Move {
    X,
    Y,
    Z,
}

impl Move {
    pub const ALL: [Move; 3] = [Move::X, Move::Y, Move::Z];

    pub fn as_char(self) -> char {
        match self {
            Move::X => 'X',
            Move::Y => 'Y',
            Move::Z => 'Z',
        }
    }

    pub fn from_char(c: char) -> Option<Move> {
        match c {
            'X' => Some(Move::X),
            'Y' => Some(Move::Y),
            'Z' => Some(Move::Z),
            _ => None,
        }
    }

    pub fn to_step(self) -> Step {
        match self {
            Move::X => Step::F,
            Move::Y => Step::U,
            Move::Z => Step::D,
        }
    }

    pub fn from_step(step: Step) -> Move {
        match step {
            Step::F => Move::X,
            Step::U => Move::Y,
            Step::D => Move::Z,
        }
    }
}

/// A lattice point `(x, y, z)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: u64,
    pub y: u64,
    pub z: u64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0, y: 0, z: 0 };

    pub fn advance(self, m: Move) -> Point {
        let mut p = self;
        match m {
            Move::X => p.x += 1,
            Move::Y => p.y += 1,
            Move::Z => p.z += 1,
        }
        p
    }

    /// `0 ≤ z ≤ y ≤ x ≤ y + 1`.
    pub fn in_omega(self) -> bool {
        self.z <= self.y && self.y <= self.x && self.x <= self.y + 1
    }

    pub fn is_diagonal(self) -> bool {
        self.x == self.y && self.y == self.z
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FrogWalk {
    moves: Vec<Move>,
}

impl FrogWalk {
    pub fn new() -> Self {
        FrogWalk::default()
    }

    pub fn parse(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(index, c)| Move::from_char(c).ok_or(Error::UnexpectedChar { index, found: c }))
            .collect::<Result<Vec<_>>>()
            .map(FrogWalk::from)
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Positions after each move, excluding the origin.
    pub fn positions(&self) -> impl Iterator<Item = Point> + '_ {
        self.moves.iter().scan(Point::ORIGIN, |p, &m| {
            *p = p.advance(m);
            Some(*p)
        })
    }

    pub fn endpoint(&self) -> Point {
        self.positions().last().unwrap_or(Point::ORIGIN)
    }

    /// Every lattice point visited lies in Ω.
    pub fn is_in_omega(&self) -> bool {
        self.first_omega_violation().is_none()
    }

    /// 1-based number of the first move that leaves Ω.
    pub fn first_omega_violation(&self) -> Option<usize> {
        self.positions().position(|p| !p.in_omega()).map(|i| i + 1)
    }

    /// In Ω throughout and ending at `(n, n, n)` with `n = len / 3`.
    pub fn is_frog_walk(&self) -> bool {
        self.is_in_omega() && self.endpoint().is_diagonal()
    }

    pub fn to_path(&self) -> Path {
        self.moves.iter().map(|m| m.to_step()).collect()
    }

    pub fn from_path(path: &Path) -> FrogWalk {
        path.iter().map(Move::from_step).collect()
    }
}

impl From<Vec<Move>> for FrogWalk {
    fn from(moves: Vec<Move>) -> Self {
        FrogWalk { moves }
    }
}

impl FromIterator<Move> for FrogWalk {
    fn from_iter<I: IntoIterator<Item = Move>>(iter: I) -> Self {
        FrogWalk {
            moves: iter.into_iter().collect(),
        }
    }
}

impl FromStr for FrogWalk {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FrogWalk::parse(s)
    }
}

impl fmt::Display for FrogWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: String = self.moves.iter().map(|m| m.as_char()).collect();
        f.write_str(&text)
    }
}

pub fn walk_to_path(walk: &FrogWalk) -> Path {
    walk.to_path()
}

pub fn path_to_walk(path: &Path) -> FrogWalk {
    FrogWalk::from_path(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> FrogWalk {
        FrogWalk::parse(s).unwrap()
    }

    #[test]
    fn omega_membership() {
        assert!(w("XYZ").is_in_omega());
        assert!(!w("YXZ").is_in_omega());
        assert!(!w("XXYZ").is_in_omega());
        assert!(w("").is_in_omega());
        assert_eq!(w("YXZ").first_omega_violation(), Some(1));
        assert_eq!(w("XXYZ").first_omega_violation(), Some(2));
        assert_eq!(w("XYZZ").first_omega_violation(), Some(4));
    }

    #[test]
    fn frog_walk_needs_diagonal_end() {
        assert!(w("XYZ").is_frog_walk());
        assert!(w("").is_frog_walk());
        assert!(!w("XY").is_frog_walk());
        assert_eq!(w("XYXYZZ").endpoint(), Point { x: 2, y: 2, z: 2 });
    }

    #[test]
    fn relabelling() {
        assert_eq!(walk_to_path(&w("XYZ")).to_string(), "FUD");
        assert_eq!(walk_to_path(&w("")).to_string(), "");
        assert_eq!(walk_to_path(&w("XYXYZZXYZ")).to_string(), "FUFUDDFUD");
        assert_eq!(path_to_walk(&Path::parse("FUD").unwrap()), w("XYZ"));
        assert_eq!(path_to_walk(&Path::new()), w(""));
        assert_eq!(path_to_walk(&Path::parse("FUFUDD").unwrap()), w("XYXYZZ"));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            FrogWalk::parse("XQZ"),
            Err(Error::UnexpectedChar {
                index: 1,
                found: 'Q'
            })
        );
        assert!(FrogWalk::parse("xyz").is_err());
    }

    proptest! {
        #[test]
        fn relabelling_is_invertible(s in "[XYZ]{0,30}") {
            let walk = w(&s);
            prop_assert_eq!(path_to_walk(&walk_to_path(&walk)), walk.clone());
            prop_assert_eq!(walk.to_string(), s);
            let path = walk_to_path(&walk);
            prop_assert_eq!(walk_to_path(&path_to_walk(&path)), path);
        }
    }
}
