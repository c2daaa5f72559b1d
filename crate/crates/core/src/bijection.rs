//! The bijection between S-Motzkin paths and ternary trees.
//!
//! A nonempty S-Motzkin path `m` splits canonically into three smaller
//! S-Motzkin paths `(a, b, c)` plus one flat, one up and one down step. The
//! three parts become the left, middle and right subtrees of the root.
//! The inverse glues a node back together as `b1 a F b2 U c D`, where `b1`
//! is `b` up to and including its last up step and `b2` is the descending
//! tail that follows.

use crate::arity::Arity;
use crate::error::{Error, Result};
use crate::path::{classify, Path, Step};
use crate::tree::TAryTree;

/// Result of the canonical decomposition of a nonempty S-Motzkin path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// Left subtree path.
    pub left: Path,
    /// Middle subtree path, reassembled from the parts before `y` and between
    /// `x` and the penultimate return.
    pub middle: Path,
    /// Right subtree path, strictly inside the last arch.
    pub right: Path,
    /// Length of the prefix of `middle` that precedes `y` in the original path.
    pub middle_split: usize,
}

/// Step positions that drive a decomposition; exposed for tests and tracing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Landmarks {
    /// Penultimate return: the last index `< len` at height zero.
    pub penultimate_return: usize,
    /// The last flat step left of the penultimate return.
    pub x: usize,
    /// The farthest flat left of `x` that starts a Motzkin segment ending at `x`;
    /// equals `x` when there is none.
    pub y: usize,
}

fn ternary_class_check(path: &Path) -> Result<()> {
    classify(path, Arity::TERNARY).into_result()
}

/// Canonical decomposition of a nonempty S-Motzkin path.
pub fn decompose(m: &Path) -> Result<Decomposition> {
    if m.is_empty() {
        return Err(Error::EmptyPath);
    }
    ternary_class_check(m)?;
    Ok(decompose_unchecked(m.steps()))
}

/// Locates the penultimate return, `x` and `y` for a nonempty S-Motzkin path.
pub fn landmarks(m: &Path) -> Result<Landmarks> {
    if m.is_empty() {
        return Err(Error::EmptyPath);
    }
    ternary_class_check(m)?;
    Ok(find_landmarks(m.steps(), &m.height_profile()))
}

fn find_landmarks(steps: &[Step], heights: &[i64]) -> Landmarks {
    let len = steps.len();
    let penultimate_return = (0..len)
        .rev()
        .find(|&i| heights[i] == 0)
        .expect("height profile starts at zero");
    debug_assert_eq!(steps[penultimate_return], Step::U);
    debug_assert_eq!(steps[len - 1], Step::D);

    let x = (0..penultimate_return)
        .rev()
        .find(|&j| steps[j] == Step::F)
        .expect("an S-Motzkin path starts with a flat step");

    let level = heights[x];
    let mut y = x;
    let mut lowest = level;
    for j in (0..x).rev() {
        lowest = lowest.min(heights[j]);
        if lowest < level {
            break;
        }
        if steps[j] == Step::F && heights[j] == level {
            y = j;
        }
    }

    Landmarks {
        penultimate_return,
        x,
        y,
    }
}

pub(crate) fn decompose_unchecked(steps: &[Step]) -> Decomposition {
    let heights = height_profile(steps);
    let Landmarks {
        penultimate_return: p,
        x,
        y,
    } = find_landmarks(steps, &heights);

    let right = Path::from(&steps[p + 1..steps.len() - 1]);
    let left = Path::from(&steps[y..x]);
    let mut middle = Path::with_capacity(y + (p - x - 1));
    middle.extend_from_slice(&steps[..y]);
    middle.extend_from_slice(&steps[x + 1..p]);

    Decomposition {
        left,
        middle,
        right,
        middle_split: y,
    }
}

fn height_profile(steps: &[Step]) -> Vec<i64> {
    let mut heights = Vec::with_capacity(steps.len() + 1);
    let mut h = 0;
    heights.push(h);
    for s in steps {
        h += s.delta();
        heights.push(h);
    }
    heights
}

/// Splits `b` after its last up step. The tail contains only down steps
/// whenever `b` is an S-Motzkin path.
pub fn split_b(b: &Path) -> (Path, Path) {
    let (head, tail) = split_at_last_up(b.steps());
    (Path::from(head), Path::from(tail))
}

fn split_at_last_up(steps: &[Step]) -> (&[Step], &[Step]) {
    let cut = steps
        .iter()
        .rposition(|&s| s == Step::U)
        .map_or(0, |i| i + 1);
    steps.split_at(cut)
}

/// Assembles the path of a node from the paths of its three subtrees:
/// `b1 · a · F · b2 · U · c · D`.
pub fn compose(a: &Path, b: &Path, c: &Path) -> Result<Path> {
    ternary_class_check(a)?;
    ternary_class_check(b)?;
    ternary_class_check(c)?;
    Ok(compose_unchecked(a, b, c))
}

pub(crate) fn compose_unchecked(a: &Path, b: &Path, c: &Path) -> Path {
    let (b1, b2) = split_at_last_up(b.steps());
    let mut out = Path::with_capacity(a.len() + b.len() + c.len() + 3);
    out.extend_from_slice(b1);
    out.extend_from_slice(a.steps());
    out.push(Step::F);
    out.extend_from_slice(b2);
    out.push(Step::U);
    out.extend_from_slice(c.steps());
    out.push(Step::D);
    out
}

/// Maps an S-Motzkin path to its ternary tree by repeated decomposition.
pub fn path_to_tree(m: &Path) -> Result<TAryTree> {
    ternary_class_check(m)?;

    // Popping left before middle before right yields the preorder slot word.
    let mut word = Vec::with_capacity(m.len() + 1);
    let mut pending = vec![m.clone()];
    while let Some(path) = pending.pop() {
        if path.is_empty() {
            word.push(false);
            continue;
        }
        word.push(true);
        let d = decompose_unchecked(path.steps());
        debug_assert!(d.left.is_smotzkin(Arity::TERNARY));
        debug_assert!(d.middle.is_smotzkin(Arity::TERNARY));
        debug_assert!(d.right.is_smotzkin(Arity::TERNARY));
        debug_assert_eq!(
            d.left.len() + d.middle.len() + d.right.len() + 3,
            path.len()
        );
        pending.push(d.right);
        pending.push(d.middle);
        pending.push(d.left);
    }
    Ok(TAryTree::from_preorder_slots(Arity::TERNARY, &word))
}

/// Maps a ternary tree to its S-Motzkin path, building node paths bottom-up.
pub fn tree_to_path(tree: &TAryTree) -> Result<Path> {
    if tree.arity() != Arity::TERNARY {
        return Err(Error::ArityMismatch {
            expected: 3,
            found: tree.arity().get(),
        });
    }
    let n = tree.size();
    if n == 0 {
        return Ok(Path::new());
    }

    // Children always have larger preorder indices than their parent.
    let mut built: Vec<Option<Path>> = vec![None; n];
    let empty = Path::new();
    for node in (0..n).rev() {
        let mut parts = tree
            .child_slots(node)
            .iter()
            .map(|slot| slot.and_then(|child| built[child].take()));
        let a = parts.next().flatten();
        let b = parts.next().flatten();
        let c = parts.next().flatten();
        let path = compose_unchecked(
            a.as_ref().unwrap_or(&empty),
            b.as_ref().unwrap_or(&empty),
            c.as_ref().unwrap_or(&empty),
        );
        built[node] = Some(path);
    }
    Ok(built[0].take().expect("root path built"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::PathViolation;

    fn p(s: &str) -> Path {
        Path::parse(s).unwrap()
    }

    fn tree(s: &str) -> TAryTree {
        TAryTree::parse(s, Arity::TERNARY).unwrap()
    }

    fn parts(d: &Decomposition) -> (String, String, String) {
        (
            d.left.to_string(),
            d.middle.to_string(),
            d.right.to_string(),
        )
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(&p("FUFUFDUDFUDDFUFUDFDUD")).unwrap();
        assert_eq!(
            parts(&d),
            ("FUD".into(), "FUFUFDUDFUDDFUD".into(), "".into())
        );
        assert_eq!(
            parts(&decompose(&p("FUD")).unwrap()),
            ("".into(), "".into(), "".into())
        );
        assert_eq!(
            parts(&decompose(&p("FUFUFDUDFUDD")).unwrap()),
            ("".into(), "".into(), "FUFDUDFUD".into())
        );
    }

    #[test]
    fn decompose_rejects_bad_input() {
        assert_eq!(decompose(&Path::new()), Err(Error::EmptyPath));
        assert_eq!(
            decompose(&p("UFD")),
            Err(Error::InvalidPath(PathViolation::BadFlatUpAlternation))
        );
    }

    #[test]
    fn landmarks_of_worked_example() {
        let m = p("FUFUFDUDFUDDFUFUDFDUD");
        let marks = landmarks(&m).unwrap();
        assert_eq!(marks.penultimate_return, 19);
        assert_eq!(marks.x, 17);
        assert_eq!(marks.y, 14);
    }

    #[test]
    fn split_examples() {
        let s = |x: &str| {
            let (a, b) = split_b(&p(x));
            (a.to_string(), b.to_string())
        };
        assert_eq!(s("FUDFUD"), ("FUDFU".into(), "D".into()));
        assert_eq!(s(""), ("".into(), "".into()));
        assert_eq!(s("FUFUDD"), ("FUFU".into(), "DD".into()));
    }

    #[test]
    fn compose_examples() {
        let e = Path::new();
        assert_eq!(compose(&e, &e, &e).unwrap().to_string(), "FUD");
        assert_eq!(
            compose(&p("FUD"), &e, &p("FUD")).unwrap().to_string(),
            "FUDFUFUDD"
        );
        assert_eq!(
            compose(&e, &p("FUDFUD"), &e).unwrap().to_string(),
            "FUDFUFDUD"
        );
        assert_eq!(
            compose(&p("FU"), &e, &e),
            Err(Error::InvalidPath(PathViolation::NotClosed))
        );
    }

    #[test]
    fn path_to_tree_examples() {
        assert_eq!(
            path_to_tree(&p("FUDFUDFUD")).unwrap(),
            tree("(((...)..)..)")
        );
        assert_eq!(
            path_to_tree(&p("FUFUFUDDD")).unwrap(),
            tree("(..(..(...)))")
        );
        assert_eq!(
            path_to_tree(&p("FUFUFDUDFUDDFUFUDFDUD")).unwrap(),
            tree("((...)((..((.(...).)..))..).)")
        );
        assert_eq!(
            path_to_tree(&Path::new()).unwrap(),
            TAryTree::empty(Arity::TERNARY)
        );
        assert_eq!(
            path_to_tree(&p("FUDD")),
            Err(Error::InvalidPath(PathViolation::NotNonnegative))
        );
    }

    #[test]
    fn tree_to_path_examples() {
        assert_eq!(tree_to_path(&tree(".")).unwrap(), Path::new());
        assert_eq!(
            tree_to_path(&tree("(.(...)(...))")).unwrap().to_string(),
            "FUFDUFUDD"
        );
        assert_eq!(
            tree_to_path(&tree("((...)(...).)")).unwrap().to_string(),
            "FUFUDFDUD"
        );
        let quaternary = TAryTree::leaf(Arity::new(4).unwrap());
        assert_eq!(
            tree_to_path(&quaternary),
            Err(Error::ArityMismatch {
                expected: 3,
                found: 4
            })
        );
    }

    #[test]
    fn long_spines_roundtrip() {
        // right spine (..(..(...))) of depth n, and its left-spine mirror
        let n = 2_000;
        let right: String = "(..".repeat(n) + "." + &")".repeat(n);
        let left: String = "(".repeat(n) + "...)" + &"..)".repeat(n - 1);
        for text in [right, left] {
            let t = tree(&text);
            let path = tree_to_path(&t).unwrap();
            assert_eq!(path.len(), 3 * n);
            assert!(path.is_smotzkin(Arity::TERNARY));
            assert_eq!(path_to_tree(&path).unwrap(), t);
        }
    }
}
