use std::fmt;
use std::str::FromStr;

use crate::trees::BinaryTree;
use crate::{Error, Result};

/// A fixed tree `X` with `N >= 2` leaves whose grafts generate `Alg(X)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Pattern {
    tree: BinaryTree,
    arity: usize,
}

/// A sequence of graft positions. Graft `j` replaces leaf `k_j + 1` of the
/// current tree by a copy of the pattern.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct GraftWord {
    pub positions: Vec<usize>,
}

impl GraftWord {
    pub fn new(positions: Vec<usize>) -> Self {
        GraftWord { positions }
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn concat(&self, other: &GraftWord) -> GraftWord {
        let mut positions = self.positions.clone();
        positions.extend_from_slice(&other.positions);
        GraftWord { positions }
    }
}

impl fmt::Display for GraftWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.positions.iter().map(|k| k.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Comma-separated integers, e.g. `0,2,4`; blank is the empty word.
impl FromStr for GraftWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(GraftWord::default());
        }
        let mut positions = Vec::new();
        let mut offset = 0;
        for part in s.split(',') {
            let lead = part.len() - part.trim_start().len();
            let k = part.trim().parse().map_err(|_| Error::Syntax {
                offset: offset + lead,
                message: "expected a non-negative graft position".into(),
            })?;
            positions.push(k);
            offset += part.len() + 1;
        }
        Ok(GraftWord { positions })
    }
}

impl Pattern {
    pub fn new(tree: BinaryTree) -> Result<Self> {
        let arity = tree.leaf_count();
        if arity < 2 {
            return Err(Error::PatternTooSmall(arity));
        }
        Ok(Pattern { tree, arity })
    }

    /// `(L(LL))`, the pattern of the Jones subgroup.
    pub fn vecf() -> Self {
        Pattern::new(BinaryTree::right_comb(3)).expect("three leaves")
    }

    /// `((LL)(LL))`, the pattern of the 3-colorable subgroup.
    pub fn three_col() -> Self {
        Pattern::new(BinaryTree::node(BinaryTree::caret(), BinaryTree::caret()))
            .expect("four leaves")
    }

    pub fn right_comb(arity: usize) -> Result<Self> {
        if arity < 2 {
            return Err(Error::InvalidArity(arity));
        }
        Pattern::new(BinaryTree::right_comb(arity))
    }

    /// `vecf`, `3col`, or inline tree text.
    pub fn from_name(name: &str) -> Result<Self> {
        match name.trim() {
            "vecf" => Ok(Pattern::vecf()),
            "3col" => Ok(Pattern::three_col()),
            text => Pattern::new(text.parse()?),
        }
    }

    pub fn tree(&self) -> &BinaryTree {
        &self.tree
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Replaces leaf `k + 1` of `t` by a copy of the pattern.
    pub fn graft(&self, t: &BinaryTree, k: usize) -> Result<BinaryTree> {
        t.replace_leaf(k + 1, &self.tree)
            .map_err(|_| Error::GraftOutOfRange {
                position: k,
                leaves: t.leaf_count(),
            })
    }

    /// Folds `graft` over `w` starting from `base`.
    pub fn realize_from(&self, base: &BinaryTree, w: &GraftWord) -> Result<BinaryTree> {
        let mut t = base.clone();
        for (step, &k) in w.positions.iter().enumerate() {
            let leaves = t.leaf_count();
            if k >= leaves {
                return Err(Error::NotComposable {
                    step,
                    position: k,
                    leaves,
                });
            }
            t = self.graft(&t, k)?;
        }
        Ok(t)
    }

    /// The tree of a composable word, grown from a single leaf.
    pub fn realize(&self, w: &GraftWord) -> Result<BinaryTree> {
        self.realize_from(&BinaryTree::Leaf, w)
    }

    /// Fewest strands on which every graft of `w` lands on an existing
    /// strand.
    pub fn min_width(&self, w: &GraftWord) -> usize {
        w.positions
            .iter()
            .enumerate()
            .map(|(j, &k)| (k + 1).saturating_sub(j * (self.arity - 1)))
            .max()
            .unwrap_or(1)
            .max(1)
    }

    /// Realizes `w` as a morphism on `min_width(w)` strands. The resulting
    /// forest is returned hung off a right comb with one leaf per strand, so
    /// two words act equally on strands iff these trees are equal. For a
    /// composable word this is [`Pattern::realize`].
    pub fn realize_strands(&self, w: &GraftWord) -> BinaryTree {
        let base = BinaryTree::right_comb(self.min_width(w));
        self.realize_from(&base, w)
            .expect("min_width makes every graft land")
    }

    /// If `t` has the pattern at its root, the `N` subtrees hanging at the
    /// pattern's leaves, left to right.
    pub fn match_root<'a>(&self, t: &'a BinaryTree) -> Option<Vec<&'a BinaryTree>> {
        fn go<'a>(x: &BinaryTree, t: &'a BinaryTree, out: &mut Vec<&'a BinaryTree>) -> bool {
            match (x, t) {
                (BinaryTree::Leaf, _) => {
                    out.push(t);
                    true
                }
                (BinaryTree::Node(xl, xr), BinaryTree::Node(tl, tr)) => {
                    go(xl, tl, out) && go(xr, tr, out)
                }
                _ => false,
            }
        }
        let mut out = Vec::with_capacity(self.arity);
        go(&self.tree, t, &mut out).then_some(out)
    }

    /// Membership in `Alg(X)`: `t` is a leaf, or the pattern sits at the root
    /// with decomposable subtrees below it.
    pub fn is_decomposable(&self, t: &BinaryTree) -> bool {
        match self.match_root(t) {
            _ if t.is_leaf() => true,
            Some(subs) => subs.into_iter().all(|s| self.is_decomposable(s)),
            None => false,
        }
    }

    /// The canonical graft word of `t`, or `None` when `t` is not in
    /// `Alg(X)`. Decomposition is unique, so the word is the block preorder,
    /// which is also the sorted form of [`Pattern::vertical_commute`].
    pub fn decompose(&self, t: &BinaryTree) -> Option<GraftWord> {
        let mut positions = Vec::new();
        self.decompose_into(t, 0, &mut positions)?;
        Some(GraftWord { positions })
    }

    fn decompose_into(&self, t: &BinaryTree, offset: usize, out: &mut Vec<usize>) -> Option<()> {
        if t.is_leaf() {
            return Some(());
        }
        let subs = self.match_root(t)?;
        out.push(offset);
        let mut at = offset;
        for s in subs {
            self.decompose_into(s, at, out)?;
            at += s.leaf_count();
        }
        Some(())
    }

    /// First leaves (1-based) of the blocks all of whose strands end in
    /// leaves of `t`. `None` when `t` is not in `Alg(X)`.
    pub fn leaf_blocks(&self, t: &BinaryTree) -> Option<Vec<usize>> {
        fn go(x: &Pattern, t: &BinaryTree, offset: usize, out: &mut Vec<usize>) -> Option<()> {
            if t.is_leaf() {
                return Some(());
            }
            let subs = x.match_root(t)?;
            if subs.iter().all(|s| s.is_leaf()) {
                out.push(offset + 1);
                return Some(());
            }
            let mut at = offset;
            for s in subs {
                go(x, s, at, out)?;
                at += s.leaf_count();
            }
            Some(())
        }
        let mut out = Vec::new();
        go(self, t, 0, &mut out)?;
        Some(out)
    }

    /// Rewrites `(.., n, k, ..)` to `(.., k, n+N-1, ..)` for `k < n` until
    /// the positions are non-decreasing.
    pub fn vertical_commute(&self, w: &GraftWord) -> GraftWord {
        let shift = self.arity - 1;
        let mut p = w.positions.clone();
        while let Some(i) = (0..p.len().saturating_sub(1)).find(|&i| p[i] > p[i + 1]) {
            let (n, k) = (p[i], p[i + 1]);
            p[i] = k;
            p[i + 1] = n + shift;
        }
        GraftWord { positions: p }
    }

    /// `S_n = [0, N-1, 2(N-1), .., n(N-1)]`, a right comb of `n + 1` blocks.
    pub fn basic_form(&self, n: usize) -> GraftWord {
        GraftWord {
            positions: (0..=n).map(|j| j * (self.arity - 1)).collect(),
        }
    }

    /// Writes `t = S_alpha . rest` with `alpha` maximal, i.e. `alpha + 1` is
    /// the number of blocks on the right spine of `t`.
    pub fn decompose_basic(&self, t: &BinaryTree) -> Result<(usize, GraftWord)> {
        if !self.is_decomposable(t) {
            return Err(Error::NotDecomposable(t.to_string()));
        }
        if t.is_leaf() {
            return Err(Error::NoBasicPrefix);
        }
        // Walk the spine, collecting the subtrees hanging off it left to right.
        let mut hanging: Vec<&BinaryTree> = Vec::new();
        let mut spine = t;
        let mut alpha = 0;
        loop {
            let subs = self.match_root(spine).expect("decomposable");
            let (last, rest) = subs.split_last().expect("arity >= 2");
            hanging.extend_from_slice(rest);
            if last.is_leaf() {
                hanging.push(last);
                break;
            }
            spine = last;
            alpha += 1;
        }
        let mut positions = Vec::new();
        let mut at = 0;
        for s in hanging {
            self.decompose_into(s, at, &mut positions)
                .expect("decomposable");
            at += s.leaf_count();
        }
        Ok((alpha, GraftWord { positions }))
    }

    /// Every leaf grafted `depth` times: the complete tree of `depth` layers
    /// of blocks. It refines every tree of `Alg(X)` with at most `depth`
    /// blocks on any root-to-leaf path.
    pub fn complete(&self, depth: usize) -> BinaryTree {
        let mut t = BinaryTree::Leaf;
        for _ in 0..depth {
            let forest = vec![self.tree.clone(); t.leaf_count()];
            t = t.substitute_leaves(&forest);
        }
        t
    }

    /// Largest number of blocks on a root-to-leaf path of `t`.
    pub fn block_depth(&self, t: &BinaryTree) -> Option<usize> {
        if t.is_leaf() {
            return Some(0);
        }
        let subs = self.match_root(t)?;
        let mut best = 0;
        for s in subs {
            best = best.max(self.block_depth(s)?);
        }
        Some(best + 1)
    }

    /// The least tree of `Alg(X)` refining `t`.
    pub fn completion(&self, t: &BinaryTree) -> BinaryTree {
        if t.is_leaf() {
            return BinaryTree::Leaf;
        }
        fn overlay(x: &Pattern, shape: &BinaryTree, t: Option<&BinaryTree>) -> BinaryTree {
            match shape {
                BinaryTree::Leaf => t.map_or(BinaryTree::Leaf, |s| x.completion(s)),
                BinaryTree::Node(l, r) => {
                    let (tl, tr) = match t {
                        Some(BinaryTree::Node(a, b)) => (Some(&**a), Some(&**b)),
                        _ => (None, None),
                    };
                    BinaryTree::node(overlay(x, l, tl), overlay(x, r, tr))
                }
            }
        }
        overlay(self, &self.tree, Some(t))
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tree)
    }
}
