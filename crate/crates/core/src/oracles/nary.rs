//! `F_N` as pairs of `N`-ary trees. Written from scratch so that it shares
//! nothing with the binary-tree and grafting code it is used to check.

use crate::presentations::FNWord;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NaryTree {
    Leaf,
    Node(Vec<NaryTree>),
}

impl NaryTree {
    pub fn leaves(&self) -> usize {
        match self {
            NaryTree::Leaf => 1,
            NaryTree::Node(kids) => kids.iter().map(NaryTree::leaves).sum(),
        }
    }

    /// Right comb with `carets` internal nodes.
    fn comb(arity: usize, carets: usize) -> NaryTree {
        let mut t = NaryTree::Leaf;
        for _ in 0..carets {
            let mut kids = vec![NaryTree::Leaf; arity - 1];
            kids.push(t);
            t = NaryTree::Node(kids);
        }
        t
    }

    /// Replaces leaf number `k` (0-based) by an `N`-caret.
    fn expand(&self, arity: usize, k: usize) -> NaryTree {
        let mut counter = 0;
        self.expand_at(arity, k, &mut counter)
    }

    fn expand_at(&self, arity: usize, k: usize, counter: &mut usize) -> NaryTree {
        match self {
            NaryTree::Leaf => {
                *counter += 1;
                if *counter - 1 == k {
                    NaryTree::Node(vec![NaryTree::Leaf; arity])
                } else {
                    NaryTree::Leaf
                }
            }
            NaryTree::Node(kids) => NaryTree::Node(
                kids.iter()
                    .map(|c| c.expand_at(arity, k, counter))
                    .collect(),
            ),
        }
    }

    fn union(&self, other: &NaryTree) -> NaryTree {
        match (self, other) {
            (NaryTree::Leaf, t) | (t, NaryTree::Leaf) => t.clone(),
            (NaryTree::Node(a), NaryTree::Node(b)) => {
                NaryTree::Node(a.iter().zip(b).map(|(x, y)| x.union(y)).collect())
            }
        }
    }

    /// Subtrees of `finer` sitting under each leaf of `self`.
    fn forest(&self, finer: &NaryTree, out: &mut Vec<NaryTree>) {
        match (self, finer) {
            (NaryTree::Leaf, t) => out.push(t.clone()),
            (NaryTree::Node(a), NaryTree::Node(b)) => {
                for (x, y) in a.iter().zip(b) {
                    x.forest(y, out);
                }
            }
            (NaryTree::Node(_), NaryTree::Leaf) => panic!("finer tree does not refine"),
        }
    }

    fn graft_forest(&self, forest: &mut std::slice::Iter<'_, NaryTree>) -> NaryTree {
        match self {
            NaryTree::Leaf => forest.next().expect("one tree per leaf").clone(),
            NaryTree::Node(kids) => {
                NaryTree::Node(kids.iter().map(|c| c.graft_forest(forest)).collect())
            }
        }
    }

    /// Leaf offsets (0-based) of internal nodes all of whose children are
    /// leaves.
    fn bottom_carets(&self, offset: usize, out: &mut Vec<usize>) {
        if let NaryTree::Node(kids) = self {
            if kids.iter().all(|c| *c == NaryTree::Leaf) {
                out.push(offset);
                return;
            }
            let mut at = offset;
            for c in kids {
                c.bottom_carets(at, out);
                at += c.leaves();
            }
        }
    }

    /// Collapses the bottom caret whose first leaf is `k`.
    fn collapse(&self, k: usize, offset: usize) -> NaryTree {
        match self {
            NaryTree::Leaf => NaryTree::Leaf,
            NaryTree::Node(kids) => {
                if offset == k && kids.iter().all(|c| *c == NaryTree::Leaf) {
                    return NaryTree::Leaf;
                }
                let mut at = offset;
                let mut out = Vec::with_capacity(kids.len());
                for c in kids {
                    out.push(c.collapse(k, at));
                    at += c.leaves();
                }
                NaryTree::Node(out)
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NaryTreePair {
    pub arity: usize,
    pub plus: NaryTree,
    pub minus: NaryTree,
}

impl NaryTreePair {
    pub fn identity(arity: usize) -> Self {
        NaryTreePair {
            arity,
            plus: NaryTree::Leaf,
            minus: NaryTree::Leaf,
        }
    }

    /// `t_n = (C_a with leaf n expanded, C_{a+1})`, `C_c` the right comb of
    /// `c + 1` carets and `a = floor(n / (N - 1))`.
    pub fn generator(arity: usize, n: usize) -> Self {
        let a = n / (arity - 1);
        NaryTreePair {
            arity,
            plus: NaryTree::comb(arity, a + 1).expand(arity, n),
            minus: NaryTree::comb(arity, a + 2),
        }
        .reduced()
    }

    pub fn inverse(&self) -> Self {
        NaryTreePair {
            arity: self.arity,
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }

    pub fn reduced(&self) -> Self {
        let mut plus = self.plus.clone();
        let mut minus = self.minus.clone();
        loop {
            let (mut a, mut b) = (Vec::new(), Vec::new());
            plus.bottom_carets(0, &mut a);
            minus.bottom_carets(0, &mut b);
            let Some(&k) = a.iter().find(|k| b.contains(k)) else {
                break;
            };
            plus = plus.collapse(k, 0);
            minus = minus.collapse(k, 0);
        }
        NaryTreePair {
            arity: self.arity,
            plus,
            minus,
        }
    }

    /// `self * other`: apply `other`, then `self`.
    pub fn multiply(&self, other: &Self) -> Self {
        let z = self.minus.union(&other.plus);
        let (mut f, mut g) = (Vec::new(), Vec::new());
        self.minus.forest(&z, &mut f);
        other.plus.forest(&z, &mut g);
        NaryTreePair {
            arity: self.arity,
            plus: self.plus.graft_forest(&mut f.iter()),
            minus: other.minus.graft_forest(&mut g.iter()),
        }
        .reduced()
    }

    pub fn from_word(w: &FNWord) -> Self {
        let mut acc = NaryTreePair::identity(w.arity());
        for &(k, e) in w.letters() {
            let x = NaryTreePair::generator(w.arity(), k);
            let step = if e > 0 { x } else { x.inverse() };
            for _ in 0..e.unsigned_abs() {
                acc = acc.multiply(&step);
            }
        }
        acc
    }
}

/// Decides `w1 = w2` in `F_N` by comparing reduced `N`-ary tree pairs.
pub fn nary_word_equal(w1: &FNWord, w2: &FNWord) -> Result<bool> {
    if w1.arity() != w2.arity() {
        return Err(Error::ArityMismatch {
            left: w1.arity(),
            right: w2.arity(),
        });
    }
    Ok(NaryTreePair::from_word(w1) == NaryTreePair::from_word(w2))
}
