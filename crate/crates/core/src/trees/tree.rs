use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A full binary tree. Leaves are numbered `1..=leaf_count` from the left;
/// the gaps around them are numbered `0..=leaf_count`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

/// Leaf span of one caret (internal node), 1-based and inclusive.
///
/// `split` is the last leaf of the left subtree, so the caret separates gap
/// `first - 1`, gap `split` and gap `last`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Caret {
    pub first: usize,
    pub split: usize,
    pub last: usize,
}

impl BinaryTree {
    pub fn leaf() -> Self {
        BinaryTree::Leaf
    }

    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    /// The two-leaf tree `(LL)`.
    pub fn caret() -> Self {
        Self::node(Self::Leaf, Self::Leaf)
    }

    /// Right comb (right vine) with `leaves` leaves: `(L(L(...(LL))))`.
    pub fn right_comb(leaves: usize) -> Self {
        assert!(leaves >= 1, "a tree has at least one leaf");
        (1..leaves).fold(Self::Leaf, |acc, _| Self::node(Self::Leaf, acc))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, BinaryTree::Leaf)
    }

    pub fn children(&self) -> Option<(&BinaryTree, &BinaryTree)> {
        match self {
            BinaryTree::Leaf => None,
            BinaryTree::Node(l, r) => Some((l, r)),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            BinaryTree::Leaf => 1,
            BinaryTree::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    pub fn caret_count(&self) -> usize {
        self.leaf_count() - 1
    }

    pub fn depth(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    /// All carets in preorder.
    pub fn carets(&self) -> Vec<Caret> {
        fn walk(t: &BinaryTree, offset: usize, out: &mut Vec<Caret>) -> usize {
            match t {
                BinaryTree::Leaf => 1,
                BinaryTree::Node(l, r) => {
                    let slot = out.len();
                    out.push(Caret {
                        first: offset + 1,
                        split: 0,
                        last: 0,
                    });
                    let nl = walk(l, offset, out);
                    let nr = walk(r, offset + nl, out);
                    out[slot].split = offset + nl;
                    out[slot].last = offset + nl + nr;
                    nl + nr
                }
            }
        }
        let mut out = Vec::with_capacity(self.caret_count());
        walk(self, 0, &mut out);
        out
    }

    /// Leaf indices `i` such that leaves `i` and `i + 1` hang from a common
    /// caret, in increasing order.
    pub fn cherries(&self) -> Vec<usize> {
        self.carets()
            .into_iter()
            .filter(|c| c.split == c.first && c.last == c.first + 1)
            .map(|c| c.first)
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// Replaces leaf `leaf` (1-based) with `sub`.
    pub fn replace_leaf(&self, leaf: usize, sub: &BinaryTree) -> Result<BinaryTree> {
        let leaves = self.leaf_count();
        if leaf == 0 || leaf > leaves {
            return Err(Error::LeafOutOfRange { leaf, leaves });
        }
        fn go(t: &BinaryTree, leaf: usize, sub: &BinaryTree) -> BinaryTree {
            match t {
                BinaryTree::Leaf => sub.clone(),
                BinaryTree::Node(l, r) => {
                    let nl = l.leaf_count();
                    if leaf <= nl {
                        BinaryTree::node(go(l, leaf, sub), (**r).clone())
                    } else {
                        BinaryTree::node((**l).clone(), go(r, leaf - nl, sub))
                    }
                }
            }
        }
        Ok(go(self, leaf, sub))
    }

    /// Collapses the subtree whose leaf span is exactly `first..first + len`
    /// into a single leaf. Returns `None` when no node has that span.
    pub fn collapse_span(&self, first: usize, len: usize) -> Option<BinaryTree> {
        fn go(t: &BinaryTree, offset: usize, first: usize, len: usize) -> Option<BinaryTree> {
            let n = t.leaf_count();
            if offset + 1 == first && n == len {
                return Some(BinaryTree::Leaf);
            }
            let (l, r) = t.children()?;
            let nl = l.leaf_count();
            if first + len - 1 <= offset + nl {
                Some(BinaryTree::node(go(l, offset, first, len)?, r.clone()))
            } else if first > offset + nl {
                Some(BinaryTree::node(l.clone(), go(r, offset + nl, first, len)?))
            } else {
                None
            }
        }
        if len == 0 {
            return None;
        }
        go(self, 0, first, len)
    }

    /// Least common refinement: the tree whose caret set is the union of the
    /// caret sets of `self` and `other` (carets addressed by position).
    pub fn union(&self, other: &BinaryTree) -> BinaryTree {
        match (self, other) {
            (BinaryTree::Leaf, t) | (t, BinaryTree::Leaf) => t.clone(),
            (BinaryTree::Node(a, b), BinaryTree::Node(c, d)) => {
                BinaryTree::node(a.union(c), b.union(d))
            }
        }
    }

    /// If `finer` refines `self`, returns for every leaf of `self` the
    /// subtree of `finer` sitting at that leaf's position.
    pub fn expansion_forest(&self, finer: &BinaryTree) -> Option<Vec<BinaryTree>> {
        fn go(coarse: &BinaryTree, fine: &BinaryTree, out: &mut Vec<BinaryTree>) -> bool {
            match (coarse, fine) {
                (BinaryTree::Leaf, f) => {
                    out.push(f.clone());
                    true
                }
                (BinaryTree::Node(..), BinaryTree::Leaf) => false,
                (BinaryTree::Node(a, b), BinaryTree::Node(c, d)) => go(a, c, out) && go(b, d, out),
            }
        }
        let mut out = Vec::with_capacity(self.leaf_count());
        go(self, finer, &mut out).then_some(out)
    }

    /// Replaces leaf `i` by `forest[i - 1]` for every leaf simultaneously.
    pub fn substitute_leaves(&self, forest: &[BinaryTree]) -> BinaryTree {
        assert_eq!(
            forest.len(),
            self.leaf_count(),
            "forest must cover every leaf"
        );
        fn go<'a>(t: &BinaryTree, it: &mut impl Iterator<Item = &'a BinaryTree>) -> BinaryTree {
            match t {
                BinaryTree::Leaf => it.next().expect("forest length checked").clone(),
                BinaryTree::Node(l, r) => {
                    let l = go(l, it);
                    BinaryTree::node(l, go(r, it))
                }
            }
        }
        go(self, &mut forest.iter())
    }

    fn write_into(&self, out: &mut String) {
        match self {
            BinaryTree::Leaf => out.push('L'),
            BinaryTree::Node(l, r) => {
                out.push('(');
                l.write_into(out);
                r.write_into(out);
                out.push(')');
            }
        }
    }
}

/// Parses `T ::= "L" | "(" T T ")"`. ASCII whitespace between tokens is
/// ignored.
pub fn parse_tree(text: &str) -> Result<BinaryTree> {
    enum Frame {
        Open(usize),
        Tree(BinaryTree),
    }
    let syntax = |offset: usize, message: &str| Error::Syntax {
        offset,
        message: message.to_string(),
    };
    let mut stack: Vec<Frame> = Vec::new();
    let mut done: Option<BinaryTree> = None;
    for (offset, byte) in text.bytes().enumerate() {
        if byte.is_ascii_whitespace() {
            continue;
        }
        if done.is_some() {
            return Err(syntax(offset, "trailing input after complete tree"));
        }
        let finished = match byte {
            b'(' => {
                stack.push(Frame::Open(offset));
                None
            }
            b'L' => Some(BinaryTree::Leaf),
            b')' => {
                let right = match stack.pop() {
                    Some(Frame::Tree(t)) => t,
                    _ => return Err(syntax(offset, "expected two subtrees before ')'")),
                };
                let left = match stack.pop() {
                    Some(Frame::Tree(t)) => t,
                    _ => return Err(syntax(offset, "expected two subtrees before ')'")),
                };
                match stack.pop() {
                    Some(Frame::Open(_)) => Some(BinaryTree::node(left, right)),
                    _ => return Err(syntax(offset, "a caret has exactly two children")),
                }
            }
            _ => {
                return Err(syntax(
                    offset,
                    &format!("unexpected character {:?}", byte as char),
                ))
            }
        };
        if let Some(t) = finished {
            if stack.is_empty() {
                done = Some(t);
            } else if let [.., Frame::Tree(_), Frame::Tree(_)] = stack.as_slice() {
                return Err(syntax(offset, "a caret has exactly two children"));
            } else {
                stack.push(Frame::Tree(t));
            }
        }
    }
    match done {
        Some(t) => Ok(t),
        None => {
            let offset = stack
                .iter()
                .find_map(|f| match f {
                    Frame::Open(o) => Some(*o),
                    Frame::Tree(_) => None,
                })
                .unwrap_or(text.len());
            if text.trim().is_empty() {
                Err(syntax(0, "empty input"))
            } else {
                Err(syntax(offset, "unclosed '('"))
            }
        }
    }
}

impl FromStr for BinaryTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_tree(s)
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::with_capacity(4 * self.leaf_count());
        self.write_into(&mut s);
        f.write_str(&s)
    }
}

impl fmt::Debug for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryTree({self})")
    }
}
