use std::fmt;

use super::Pattern;
use crate::presentations::FNWord;
use crate::trees::{BinaryTree, TreePair};
use crate::{Error, Result};

/// An element of `G_X`: a pair of `Alg(X)` trees with equal leaf counts,
/// stored with every common leaf block removed. That form is unique per
/// element, so derived equality is group equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GXElement {
    pattern: Pattern,
    plus: BinaryTree,
    minus: BinaryTree,
}

impl GXElement {
    pub fn new(pattern: &Pattern, plus: BinaryTree, minus: BinaryTree) -> Result<Self> {
        for t in [&plus, &minus] {
            if !pattern.is_decomposable(t) {
                return Err(Error::NotDecomposable(t.to_string()));
            }
        }
        let (p, m) = (plus.leaf_count(), minus.leaf_count());
        if p != m {
            return Err(Error::LeafCountMismatch { plus: p, minus: m });
        }
        Ok(Self::x_reduced(pattern, plus, minus))
    }

    fn x_reduced(pattern: &Pattern, mut plus: BinaryTree, mut minus: BinaryTree) -> Self {
        let n = pattern.arity();
        loop {
            let theirs = pattern.leaf_blocks(&minus).expect("decomposable");
            let common = pattern
                .leaf_blocks(&plus)
                .expect("decomposable")
                .into_iter()
                .find(|b| theirs.contains(b));
            let Some(first) = common else { break };
            plus = plus.collapse_span(first, n).expect("leaf block");
            minus = minus.collapse_span(first, n).expect("leaf block");
        }
        GXElement {
            pattern: pattern.clone(),
            plus,
            minus,
        }
    }

    pub fn identity(pattern: &Pattern) -> Self {
        GXElement {
            pattern: pattern.clone(),
            plus: BinaryTree::Leaf,
            minus: BinaryTree::Leaf,
        }
    }

    pub fn pattern(&self) -> &Pattern {
        &self.pattern
    }

    pub fn plus(&self) -> &BinaryTree {
        &self.plus
    }

    pub fn minus(&self) -> &BinaryTree {
        &self.minus
    }

    pub fn is_identity(&self) -> bool {
        self.plus.is_leaf()
    }

    /// The stored pair, not reduced in `F`.
    pub fn to_tree_pair(&self) -> TreePair {
        TreePair::new(self.plus.clone(), self.minus.clone()).expect("equal leaf counts")
    }

    /// The image in `F`, reduced.
    pub fn f_image(&self) -> TreePair {
        self.to_tree_pair().reduce()
    }

    pub fn inverse(&self) -> GXElement {
        GXElement {
            pattern: self.pattern.clone(),
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }

    /// `self * other` via the least common refinement of `self.minus` and
    /// `other.plus`, which stays in `Alg(X)` because both trees carry the
    /// pattern at every block they share.
    pub fn multiply(&self, other: &GXElement) -> Result<GXElement> {
        self.check_pattern(other)?;
        let z = self.minus.union(&other.plus);
        Ok(self.compose_through(other, &z))
    }

    /// `self * other` via the complete layered tree deep enough to refine
    /// both middle trees. Slower; used to cross-check [`GXElement::multiply`].
    pub fn multiply_via_layers(&self, other: &GXElement) -> Result<GXElement> {
        self.check_pattern(other)?;
        let x = &self.pattern;
        let depth = x
            .block_depth(&self.minus)
            .max(x.block_depth(&other.plus))
            .expect("decomposable");
        Ok(self.compose_through(other, &x.complete(depth)))
    }

    fn compose_through(&self, other: &GXElement, z: &BinaryTree) -> GXElement {
        let left = self
            .to_tree_pair()
            .lift_minus(z)
            .expect("z refines the middle tree");
        let right = other
            .to_tree_pair()
            .lift_plus(z)
            .expect("z refines the middle tree");
        let (plus, _) = left.into_parts();
        let (_, minus) = right.into_parts();
        GXElement::new(&self.pattern, plus, minus).expect("lifts stay in Alg(X)")
    }

    fn check_pattern(&self, other: &GXElement) -> Result<()> {
        if self.pattern != other.pattern {
            return Err(Error::PatternMismatch);
        }
        Ok(())
    }
}

impl fmt::Display for GXElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.plus, self.minus)
    }
}

impl fmt::Debug for GXElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GXElement[{}]({self})", self.pattern)
    }
}

/// `a(n) = floor(n / (N - 1))`.
pub fn basic_index(n: usize, arity: usize) -> usize {
    n / (arity - 1)
}

/// `x_n = (S_a . X_n, S_{a+1})` with `a = a(n)`.
pub fn gx_generator(n: usize, pattern: &Pattern) -> GXElement {
    let a = basic_index(n, pattern.arity());
    let mut top = pattern.basic_form(a);
    top.positions.push(n);
    let plus = pattern
        .realize(&top)
        .expect("n < (a+1)(N-1) keeps the graft in range");
    let minus = pattern
        .realize(&pattern.basic_form(a + 1))
        .expect("basic forms compose");
    GXElement::new(pattern, plus, minus).expect("generator trees are in Alg(X)")
}

pub fn gx_multiply(g: &GXElement, h: &GXElement) -> Result<GXElement> {
    g.multiply(h)
}

pub fn gx_inverse(g: &GXElement) -> GXElement {
    g.inverse()
}

/// The homomorphism `F_N -> G_X` sending `t_k` to `x_k`.
pub fn phi(w: &FNWord, pattern: &Pattern) -> Result<GXElement> {
    if w.arity() != pattern.arity() {
        return Err(Error::ArityMismatch {
            left: w.arity(),
            right: pattern.arity(),
        });
    }
    let mut g = GXElement::identity(pattern);
    for (k, e) in w.syllables() {
        let x = gx_generator(k, pattern);
        let step = if e > 0 { x } else { x.inverse() };
        g = g.multiply(&step)?;
    }
    Ok(g)
}

/// Factors `(t, S_m)` into generators by peeling, each time, the leaf block
/// with the largest first leaf among those not holding the rightmost leaf:
/// `(T . X_k, S_m) = (T, S_{m-1}) * x_k`.
fn positive_word(pattern: &Pattern, t: &BinaryTree) -> Vec<(usize, i64)> {
    let n = pattern.arity();
    let mut t = t.clone();
    let mut letters = Vec::new();
    loop {
        let leaves = t.leaf_count();
        let peel = pattern
            .leaf_blocks(&t)
            .expect("decomposable")
            .into_iter()
            .filter(|&first| first + n - 1 < leaves)
            .max();
        let Some(first) = peel else { break };
        letters.push((first - 1, 1));
        t = t.collapse_span(first, n).expect("leaf block");
    }
    letters.reverse();
    letters
}

/// Writes `g` as a word in the `t_k`: `g = (T+, S_m) * (T-, S_m)^-1`, each
/// positive half factored by [`positive_word`].
pub fn gx_to_word(g: &GXElement) -> FNWord {
    let x = g.pattern();
    let mut letters = positive_word(x, g.plus());
    let neg = positive_word(x, g.minus());
    letters.extend(neg.into_iter().rev().map(|(k, e)| (k, -e)));
    FNWord::new(x.arity(), letters).expect("pattern arity >= 2")
}

/// Looks for a representative of `p` with both trees in `Alg(X)`. Starting
/// from the reduced pair, each side is replaced in turn by its least
/// `Alg(X)` refinement and the other side lifted along. Every such
/// representative refines all the iterates, so the search finds one exactly
/// when `p` lies in the image of `G_X`; the leaf bound stops it otherwise.
pub fn search_representative(
    p: &TreePair,
    pattern: &Pattern,
    max_leaves: usize,
) -> Result<GXElement> {
    let mut pair = p.reduce();
    loop {
        if pattern.is_decomposable(pair.plus()) && pattern.is_decomposable(pair.minus()) {
            let (plus, minus) = pair.into_parts();
            return GXElement::new(pattern, plus, minus);
        }
        if pair.leaf_count() > max_leaves {
            return Err(Error::BudgetExceeded(format!(
                "no Alg(X) representative of {p} with at most {max_leaves} leaves"
            )));
        }
        let plus = pattern.completion(pair.plus());
        pair = pair.lift_plus(&plus).expect("completion refines");
        let minus = pattern.completion(pair.minus());
        pair = pair.lift_minus(&minus).expect("completion refines");
    }
}
