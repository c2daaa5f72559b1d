//! Lattice paths built from flat, up and down steps.
//!
//! A [`Path`] is a raw step sequence; class membership (Motzkin, S-Motzkin,
//! t-generalized S-Motzkin) is decided by the predicates in this module.

use std::fmt;
use std::str::FromStr;

use crate::arity::Arity;
use crate::error::{Error, Result};

/// A single path step.
///
/// Variants are declared in the order `D < F < U` so that the derived `Ord`
/// agrees with the ASCII order of the text encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    /// Down, height delta -1.
    D,
    /// Flat, height delta 0.
    F,
    /// Up, height delta +1.
    U,
}

impl Step {
    pub const ALL: [Step; 3] = [Step::D, Step::F, Step::U];

    pub fn delta(self) -> i64 {
        match self {
            Step::D => -1,
            Step::F => 0,
            Step::U => 1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::D => 'D',
            Step::F => 'F',
            Step::U => 'U',
        }
    }

    pub fn from_char(c: char) -> Option<Step> {
        match c {
            'D' => Some(Step::D),
            'F' => Some(Step::F),
            'U' => Some(Step::U),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    steps: Vec<Step>,
}

impl Path {
    pub fn new() -> Self {
        Path::default()
    }

    pub fn with_capacity(capacity: usize) -> Self {
        Path {
            steps: Vec::with_capacity(capacity),
        }
    }

    /// Parses the `{F,U,D}` text encoding. Any other character is rejected
    /// with its (character) index.
    pub fn parse(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(index, c)| Step::from_char(c).ok_or(Error::UnexpectedChar { index, found: c }))
            .collect::<Result<Vec<_>>>()
            .map(Path::from)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn push(&mut self, step: Step) {
        self.steps.push(step);
    }

    pub fn extend_from_slice(&mut self, steps: &[Step]) {
        self.steps.extend_from_slice(steps);
    }

    pub fn iter(&self) -> impl Iterator<Item = Step> + '_ {
        self.steps.iter().copied()
    }

    pub fn count(&self, step: Step) -> usize {
        self.steps.iter().filter(|&&s| s == step).count()
    }

    /// Heights at every lattice point: `h[0] = 0` and `h[i] = h[i-1] + delta(step i-1)`.
    pub fn height_profile(&self) -> Vec<i64> {
        let mut heights = Vec::with_capacity(self.len() + 1);
        let mut h = 0;
        heights.push(h);
        for step in self.iter() {
            h += step.delta();
            heights.push(h);
        }
        heights
    }

    pub fn final_height(&self) -> i64 {
        self.iter().map(Step::delta).sum()
    }

    /// Nonnegative at every prefix and closed at height zero.
    pub fn is_motzkin(&self) -> bool {
        motzkin_violation(&self.steps).is_none()
    }

    pub fn is_smotzkin(&self, arity: Arity) -> bool {
        classify(self, arity).is_valid()
    }
}

impl From<Vec<Step>> for Path {
    fn from(steps: Vec<Step>) -> Self {
        Path { steps }
    }
}

impl From<&[Step]> for Path {
    fn from(steps: &[Step]) -> Self {
        Path {
            steps: steps.to_vec(),
        }
    }
}

impl FromIterator<Step> for Path {
    fn from_iter<I: IntoIterator<Item = Step>>(iter: I) -> Self {
        Path {
            steps: iter.into_iter().collect(),
        }
    }
}

impl FromStr for Path {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Path::parse(s)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: String = self.iter().map(Step::as_char).collect();
        f.write_str(&text)
    }
}

/// The first condition a path fails, checked in a fixed order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathViolation {
    NotNonnegative,
    NotClosed,
    WrongStepCounts,
    BadInitialBlock,
    BadFlatUpAlternation,
    DownTooEarly,
}

impl PathViolation {
    pub fn name(self) -> &'static str {
        match self {
            PathViolation::NotNonnegative => "NotNonnegative",
            PathViolation::NotClosed => "NotClosed",
            PathViolation::WrongStepCounts => "WrongStepCounts",
            PathViolation::BadInitialBlock => "BadInitialBlock",
            PathViolation::BadFlatUpAlternation => "BadFlatUpAlternation",
            PathViolation::DownTooEarly => "DownTooEarly",
        }
    }
}

impl fmt::Display for PathViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathClassReport {
    violation: Option<PathViolation>,
}

impl PathClassReport {
    pub const VALID: PathClassReport = PathClassReport { violation: None };

    pub fn invalid(violation: PathViolation) -> Self {
        PathClassReport {
            violation: Some(violation),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }

    pub fn violation(&self) -> Option<PathViolation> {
        self.violation
    }

    pub fn into_result(self) -> Result<()> {
        match self.violation {
            None => Ok(()),
            Some(v) => Err(Error::InvalidPath(v)),
        }
    }
}

impl fmt::Display for PathClassReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.violation {
            None => f.write_str("valid"),
            Some(v) => v.fmt(f),
        }
    }
}

/// Which of the S-Motzkin conditions to evaluate.
///
/// The down-ordering condition is implied by the others, but it is kept as a
/// separately switchable check so the implication can be verified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SMotzkinChecks {
    pub down_order: bool,
}

impl Default for SMotzkinChecks {
    fn default() -> Self {
        SMotzkinChecks { down_order: true }
    }
}

/// Classifies `path` against the t-generalized S-Motzkin class with all
/// conditions enabled. At arity 3 this is the plain S-Motzkin class.
pub fn classify(path: &Path, arity: Arity) -> PathClassReport {
    classify_with(path, arity, SMotzkinChecks::default())
}

pub fn classify_with(path: &Path, arity: Arity, checks: SMotzkinChecks) -> PathClassReport {
    let steps = path.steps();

    if let Some(v) = motzkin_violation(steps) {
        return PathClassReport::invalid(v);
    }

    let t = arity.get();
    if !steps.len().is_multiple_of(t) {
        return PathClassReport::invalid(PathViolation::WrongStepCounts);
    }
    let n = steps.len() / t;
    if path.count(Step::U) != n
        || path.count(Step::D) != n
        || path.count(Step::F) != arity.flats_per_block() * n
    {
        return PathClassReport::invalid(PathViolation::WrongStepCounts);
    }

    if !projection_is_block_word(steps, arity) {
        let initial = arity.flats_per_block();
        let violation = if t >= 4 && steps[..initial].iter().any(|&s| s != Step::F) {
            PathViolation::BadInitialBlock
        } else {
            PathViolation::BadFlatUpAlternation
        };
        return PathClassReport::invalid(violation);
    }

    if checks.down_order && !downs_follow_blocks(steps, arity) {
        return PathClassReport::invalid(PathViolation::DownTooEarly);
    }

    PathClassReport::VALID
}

fn motzkin_violation(steps: &[Step]) -> Option<PathViolation> {
    let mut h = 0i64;
    for step in steps {
        h += step.delta();
        if h < 0 {
            return Some(PathViolation::NotNonnegative);
        }
    }
    (h != 0).then_some(PathViolation::NotClosed)
}

/// Letter expected at position `k` of the block word `(F^(t-2) U)^n`.
pub(crate) fn block_letter(k: usize, arity: Arity) -> Step {
    if k % (arity.get() - 1) < arity.flats_per_block() {
        Step::F
    } else {
        Step::U
    }
}

/// The `{F,U}` subsequence of `steps` equals `(F^(t-2) U)^n` for some `n`.
fn projection_is_block_word(steps: &[Step], arity: Arity) -> bool {
    let mut k = 0;
    for &s in steps.iter().filter(|&&s| s != Step::D) {
        if s != block_letter(k, arity) {
            return false;
        }
        k += 1;
    }
    k % (arity.get() - 1) == 0
}

/// The k-th down step is preceded by at least k complete blocks of
/// `t - 2` flats followed by one up.
fn downs_follow_blocks(steps: &[Step], arity: Arity) -> bool {
    let need = arity.flats_per_block();
    let mut run = 0;
    let mut blocks = 0;
    let mut downs = 0;
    for &s in steps {
        match s {
            Step::F => run += 1,
            Step::U => {
                if run >= need {
                    blocks += 1;
                }
                run = 0;
            }
            Step::D => {
                downs += 1;
                if blocks < downs {
                    return false;
                }
            }
        }
    }
    true
}
