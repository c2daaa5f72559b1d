//! Ordered t-ary tree shapes.
//!
//! Nodes live in a flat arena stored in preorder, so node `0` is the root and
//! two trees are equal exactly when their arenas are equal. Every traversal
//! in this module is iterative; trees of any depth are safe to build, print
//! and drop.

use std::fmt;
use std::iter;

use crate::arity::Arity;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TAryTree {
    arity: Arity,
    /// `slots[node * t + c]` holds child `c` of `node`.
    slots: Vec<Option<usize>>,
}

impl TAryTree {
    pub fn empty(arity: Arity) -> Self {
        TAryTree {
            arity,
            slots: Vec::new(),
        }
    }

    /// A single node with all child slots empty.
    pub fn leaf(arity: Arity) -> Self {
        TAryTree {
            arity,
            slots: vec![None; arity.get()],
        }
    }

    /// Builds a node whose children are `children`, left to right.
    pub fn from_children(arity: Arity, children: Vec<TAryTree>) -> Result<Self> {
        let t = arity.get();
        if children.len() != t {
            return Err(Error::ChildCount {
                index: 0,
                expected: t,
                found: children.len(),
            });
        }
        if let Some(bad) = children.iter().find(|c| c.arity != arity) {
            return Err(Error::ArityMismatch {
                expected: t,
                found: bad.arity.get(),
            });
        }

        let total = 1 + children.iter().map(TAryTree::size).sum::<usize>();
        let mut slots = Vec::with_capacity(total * t);
        slots.resize(t, None);
        let mut offset = 1;
        for (c, child) in children.iter().enumerate() {
            if child.is_empty() {
                continue;
            }
            slots[c] = Some(offset);
            slots.extend(child.slots.iter().map(|s| s.map(|i| i + offset)));
            offset += child.size();
        }
        Ok(TAryTree { arity, slots })
    }

    /// Builds a tree from its preorder slot word: `true` for a node, `false`
    /// for an empty slot. The word must be a complete, well-formed tree.
    pub(crate) fn from_preorder_slots(arity: Arity, word: &[bool]) -> Self {
        let t = arity.get();
        let nodes = word.iter().filter(|&&b| b).count();
        let mut slots: Vec<Option<usize>> = Vec::with_capacity(nodes * t);
        // (node, next child slot to fill)
        let mut stack: Vec<(usize, usize)> = Vec::new();
        for &is_node in word {
            let target = stack.last_mut().map(|(node, next)| {
                let slot = *node * t + *next;
                *next += 1;
                slot
            });
            if is_node {
                let index = slots.len() / t;
                slots.extend(iter::repeat_n(None, t));
                if let Some(slot) = target {
                    slots[slot] = Some(index);
                }
                stack.push((index, 0));
            }
            while matches!(stack.last(), Some(&(_, next)) if next == t) {
                stack.pop();
            }
        }
        debug_assert!(stack.is_empty());
        TAryTree { arity, slots }
    }

    /// Preorder slot word, the inverse of `from_preorder_slots`.
    #[cfg(test)]
    pub(crate) fn preorder_slots(&self) -> Vec<bool> {
        let mut word = Vec::with_capacity(self.slots.len() + 1);
        let mut stack = vec![self.root().map(|r| r.index)];
        while let Some(slot) = stack.pop() {
            word.push(slot.is_some());
            if let Some(node) = slot {
                stack.extend(self.child_slots(node).iter().rev().copied());
            }
        }
        word
    }

    pub fn parse(s: &str, arity: Arity) -> Result<Self> {
        let t = arity.get();
        let mut word = Vec::new();
        // children seen so far for each open node
        let mut open: Vec<usize> = Vec::new();
        let mut complete = false;

        for (index, c) in s.chars().enumerate() {
            if complete {
                return Err(Error::TrailingInput { index });
            }
            match c {
                '(' | '.' => {
                    if let Some(seen) = open.last_mut() {
                        if *seen == t {
                            return Err(Error::ChildCount {
                                index,
                                expected: t,
                                found: t + 1,
                            });
                        }
                        *seen += 1;
                    }
                    if c == '(' {
                        word.push(true);
                        open.push(0);
                    } else {
                        word.push(false);
                        complete = open.is_empty();
                    }
                }
                ')' => match open.pop() {
                    Some(seen) if seen == t => complete = open.is_empty(),
                    Some(seen) => {
                        return Err(Error::ChildCount {
                            index,
                            expected: t,
                            found: seen,
                        })
                    }
                    None => return Err(Error::UnexpectedChar { index, found: c }),
                },
                _ => return Err(Error::UnexpectedChar { index, found: c }),
            }
        }
        if !complete {
            return Err(Error::UnexpectedEnd {
                index: s.chars().count(),
            });
        }
        Ok(TAryTree::from_preorder_slots(arity, &word))
    }

    pub fn arity(&self) -> Arity {
        self.arity
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        self.slots.len() / self.arity.get()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn root(&self) -> Option<NodeRef<'_>> {
        (!self.is_empty()).then_some(NodeRef {
            tree: self,
            index: 0,
        })
    }

    pub(crate) fn child_slots(&self, node: usize) -> &[Option<usize>] {
        let t = self.arity.get();
        &self.slots[node * t..(node + 1) * t]
    }

    /// Preorder walk yielding `(depth, child position, node)`; the root has
    /// no child position.
    pub fn preorder(&self) -> impl Iterator<Item = (usize, Option<usize>, NodeRef<'_>)> + '_ {
        let mut stack: Vec<(usize, Option<usize>, usize)> = Vec::new();
        if !self.is_empty() {
            stack.push((0, None, 0));
        }
        iter::from_fn(move || {
            let (depth, position, index) = stack.pop()?;
            for (c, child) in self.child_slots(index).iter().enumerate().rev() {
                if let Some(child) = child {
                    stack.push((depth + 1, Some(c), *child));
                }
            }
            Some((depth, position, NodeRef { tree: self, index }))
        })
    }
}

impl fmt::Display for TAryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::with_capacity(self.slots.len() * 2 + 1);
        // None = close a node, Some(slot) = emit a slot
        let mut stack: Vec<Option<Option<usize>>> = vec![Some(self.root().map(|r| r.index))];
        while let Some(item) = stack.pop() {
            match item {
                None => out.push(')'),
                Some(None) => out.push('.'),
                Some(Some(node)) => {
                    out.push('(');
                    stack.push(None);
                    stack.extend(self.child_slots(node).iter().rev().map(|&s| Some(s)));
                }
            }
        }
        f.write_str(&out)
    }
}

/// Borrowed handle to one node of a tree.
#[derive(Debug, Clone, Copy)]
pub struct NodeRef<'a> {
    tree: &'a TAryTree,
    index: usize,
}

impl<'a> NodeRef<'a> {
    /// Preorder index of this node within its tree.
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn child(&self, position: usize) -> Option<NodeRef<'a>> {
        self.tree.child_slots(self.index)[position].map(|index| NodeRef {
            tree: self.tree,
            index,
        })
    }

    pub fn children(&self) -> impl Iterator<Item = Option<NodeRef<'a>>> + 'a {
        let tree = self.tree;
        tree.child_slots(self.index)
            .iter()
            .map(move |s| s.map(|index| NodeRef { tree, index }))
    }

    /// Copy of the subtree rooted here.
    pub fn subtree(&self) -> TAryTree {
        let t = self.tree.arity.get();
        // Preorder makes the subtree a contiguous index range.
        let mut count = 0;
        let mut stack = vec![self.index];
        while let Some(node) = stack.pop() {
            count += 1;
            stack.extend(self.tree.child_slots(node).iter().flatten());
        }
        let base = self.index;
        let slots = self.tree.slots[base * t..(base + count) * t]
            .iter()
            .map(|s| s.map(|i| i - base))
            .collect();
        TAryTree {
            arity: self.tree.arity,
            slots,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const T3: Arity = Arity::TERNARY;

    fn tree(s: &str) -> TAryTree {
        TAryTree::parse(s, T3).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(tree("."), TAryTree::empty(T3));
        assert_eq!(tree("(...)"), TAryTree::leaf(T3));
        let t = tree("((...)..)");
        let root = t.root().unwrap();
        assert!(root.child(0).is_some());
        assert!(root.child(1).is_none() && root.child(2).is_none());
        assert_eq!(root.child(0).unwrap().subtree(), TAryTree::leaf(T3));
    }

    #[test]
    fn format_examples() {
        assert_eq!(TAryTree::empty(T3).to_string(), ".");
        assert_eq!(TAryTree::leaf(T3).to_string(), "(...)");
        let middle = TAryTree::from_children(
            T3,
            vec![TAryTree::empty(T3), TAryTree::leaf(T3), TAryTree::empty(T3)],
        )
        .unwrap();
        assert_eq!(middle.to_string(), "(.(...).)");
    }

    #[test]
    fn sizes() {
        assert_eq!(tree(".").size(), 0);
        assert_eq!(tree("(...)").size(), 1);
        assert_eq!(tree("(((...)..)..)").size(), 3);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            TAryTree::parse("", T3),
            Err(Error::UnexpectedEnd { index: 0 })
        );
        assert_eq!(
            TAryTree::parse("(..", T3),
            Err(Error::UnexpectedEnd { index: 3 })
        );
        assert_eq!(
            TAryTree::parse("..", T3),
            Err(Error::TrailingInput { index: 1 })
        );
        assert_eq!(
            TAryTree::parse("(...).", T3),
            Err(Error::TrailingInput { index: 5 })
        );
        assert_eq!(
            TAryTree::parse("(..)", T3),
            Err(Error::ChildCount {
                index: 3,
                expected: 3,
                found: 2
            })
        );
        assert_eq!(
            TAryTree::parse("(....)", T3),
            Err(Error::ChildCount {
                index: 4,
                expected: 3,
                found: 4
            })
        );
        // a binary node nested inside a ternary tree
        assert_eq!(
            TAryTree::parse("((..)..)", T3),
            Err(Error::ChildCount {
                index: 4,
                expected: 3,
                found: 2
            })
        );
        assert_eq!(
            TAryTree::parse("(.x.)", T3),
            Err(Error::UnexpectedChar {
                index: 2,
                found: 'x'
            })
        );
        assert_eq!(
            TAryTree::parse(")", T3),
            Err(Error::UnexpectedChar {
                index: 0,
                found: ')'
            })
        );
        assert_eq!(
            TAryTree::parse("( ...)", T3),
            Err(Error::UnexpectedChar {
                index: 1,
                found: ' '
            })
        );
    }

    #[test]
    fn other_arities() {
        let t4 = Arity::new(4).unwrap();
        let t = TAryTree::parse("(.(....)..)", t4).unwrap();
        assert_eq!(t.size(), 2);
        assert_eq!(t.to_string(), "(.(....)..)");
        assert!(TAryTree::parse("(...)", t4).is_err());
        assert_eq!(
            TAryTree::from_children(
                T3,
                vec![
                    TAryTree::empty(t4),
                    TAryTree::empty(T3),
                    TAryTree::empty(T3)
                ]
            ),
            Err(Error::ArityMismatch {
                expected: 3,
                found: 4
            })
        );
    }

    #[test]
    fn preorder_walk() {
        let t = tree("((...)((..((.(...).)..))..).)");
        let visited: Vec<(usize, Option<usize>)> = t.preorder().map(|(d, p, _)| (d, p)).collect();
        assert_eq!(
            visited,
            vec![
                (0, None),
                (1, Some(0)),
                (1, Some(1)),
                (2, Some(0)),
                (3, Some(2)),
                (4, Some(0)),
                (5, Some(1)),
            ]
        );
        let indices: Vec<usize> = t.preorder().map(|(_, _, n)| n.index()).collect();
        assert_eq!(indices, (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn deep_tree_does_not_overflow() {
        let n = 200_000;
        let mut text = String::new();
        for _ in 0..n {
            text.push_str("(..");
        }
        text.push('.');
        for _ in 0..n {
            text.push(')');
        }
        let t = tree(&text);
        assert_eq!(t.size(), n);
        assert_eq!(t.to_string(), text);
    }

    fn arb_tree(arity: Arity) -> impl Strategy<Value = TAryTree> {
        let t = arity.get();
        let leaf = Just(TAryTree::empty(arity));
        leaf.prop_recursive(6, 64, t as u32, move |inner| {
            prop::collection::vec(inner, t)
                .prop_map(move |children| TAryTree::from_children(arity, children).unwrap())
        })
    }

    proptest! {
        #[test]
        fn text_roundtrip(
            value in (2usize..6).prop_flat_map(|t| arb_tree(Arity::new(t).unwrap()))
        ) {
            let arity = value.arity();
            let t = arity.get();
            let text = value.to_string();
            let parsed = TAryTree::parse(&text, arity).unwrap();
            prop_assert_eq!(&parsed, &value);

            let n = value.size();
            if n == 0 {
                prop_assert_eq!(text.as_str(), ".");
            } else {
                prop_assert_eq!(text.matches('(').count(), n);
                prop_assert_eq!(text.matches(')').count(), n);
                prop_assert_eq!(text.matches('.').count(), n * (t - 1) + 1);
            }
            prop_assert_eq!(TAryTree::from_preorder_slots(arity, &value.preorder_slots()), value);
        }

        #[test]
        fn subtrees_reassemble(value in arb_tree(Arity::TERNARY)) {
            if let Some(root) = value.root() {
                let children: Vec<TAryTree> = root
                    .children()
                    .map(|c| c.map_or(TAryTree::empty(T3), |c| c.subtree()))
                    .collect();
                prop_assert_eq!(TAryTree::from_children(T3, children).unwrap(), value);
            }
        }
    }
}
