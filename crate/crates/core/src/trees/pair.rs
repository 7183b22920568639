use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::{BinaryTree, Dyadic};
use crate::{Error, Result};

/// An element of Thompson's group `F` as a pair of trees with equal leaf
/// counts.
///
/// The pair maps the standard dyadic partition of `minus` (domain) linearly
/// onto that of `plus` (range), interval `i` to interval `i`. With that
/// orientation [`TreePair::multiply`] is composition of maps: `g * h` applies
/// `h` first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TreePair {
    plus: BinaryTree,
    minus: BinaryTree,
}

/// JSON form `{"plus": "...", "minus": "..."}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreePairRecord {
    pub plus: String,
    pub minus: String,
}

impl TreePair {
    pub fn new(plus: BinaryTree, minus: BinaryTree) -> Result<Self> {
        let (p, m) = (plus.leaf_count(), minus.leaf_count());
        if p != m {
            return Err(Error::LeafCountMismatch { plus: p, minus: m });
        }
        Ok(TreePair { plus, minus })
    }

    pub fn identity() -> Self {
        TreePair {
            plus: BinaryTree::Leaf,
            minus: BinaryTree::Leaf,
        }
    }

    pub fn plus(&self) -> &BinaryTree {
        &self.plus
    }

    pub fn minus(&self) -> &BinaryTree {
        &self.minus
    }

    pub fn into_parts(self) -> (BinaryTree, BinaryTree) {
        (self.plus, self.minus)
    }

    pub fn leaf_count(&self) -> usize {
        self.plus.leaf_count()
    }

    /// True when no leaf pair `(i, i + 1)` forms a caret in both trees.
    pub fn is_reduced(&self) -> bool {
        let minus = self.minus.cherries();
        self.plus
            .cherries()
            .iter()
            .all(|i| minus.binary_search(i).is_err())
    }

    /// Removes common carets until none remain. The result is the unique
    /// reduced representative of the element.
    pub fn reduce(&self) -> TreePair {
        let mut plus = self.plus.clone();
        let mut minus = self.minus.clone();
        loop {
            let theirs = minus.cherries();
            let common = plus
                .cherries()
                .into_iter()
                .find(|i| theirs.binary_search(i).is_ok());
            let Some(i) = common else {
                return TreePair { plus, minus };
            };
            plus = plus.collapse_span(i, 2).expect("cherry spans a caret");
            minus = minus.collapse_span(i, 2).expect("cherry spans a caret");
        }
    }

    pub fn is_identity(&self) -> bool {
        self.reduce().plus.is_leaf()
    }

    pub fn inverse(&self) -> TreePair {
        TreePair {
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }

    /// Lifts `self` so that its minus tree becomes `finer`, which must refine
    /// the current minus tree. The element is unchanged.
    pub fn lift_minus(&self, finer: &BinaryTree) -> Option<TreePair> {
        let forest = self.minus.expansion_forest(finer)?;
        Some(TreePair {
            plus: self.plus.substitute_leaves(&forest),
            minus: finer.clone(),
        })
    }

    /// Lifts `self` so that its plus tree becomes `finer`.
    pub fn lift_plus(&self, finer: &BinaryTree) -> Option<TreePair> {
        let forest = self.plus.expansion_forest(finer)?;
        Some(TreePair {
            plus: finer.clone(),
            minus: self.minus.substitute_leaves(&forest),
        })
    }

    /// `self * other` without the final reduction: both factors are lifted
    /// to the least common refinement of `self.minus` and `other.plus`.
    pub fn multiply_unreduced(&self, other: &TreePair) -> TreePair {
        let z = self.minus.union(&other.plus);
        let left = self.lift_minus(&z).expect("union refines both trees");
        let right = other.lift_plus(&z).expect("union refines both trees");
        TreePair {
            plus: left.plus,
            minus: right.minus,
        }
    }

    /// Group product `self * other` (apply `other`, then `self`), reduced.
    pub fn multiply(&self, other: &TreePair) -> TreePair {
        self.multiply_unreduced(other).reduce()
    }

    /// Replaces leaf `leaf` (1-based) by a caret in both trees. The element
    /// is unchanged.
    pub fn insert_caret(&self, leaf: usize) -> Result<TreePair> {
        let caret = BinaryTree::caret();
        Ok(TreePair {
            plus: self.plus.replace_leaf(leaf, &caret)?,
            minus: self.minus.replace_leaf(leaf, &caret)?,
        })
    }

    /// Evaluates the piecewise-linear homeomorphism at `x`.
    pub fn eval(&self, x: &Dyadic) -> Result<Dyadic> {
        if *x > Dyadic::one() {
            return Err(Error::OutOfUnitInterval(x.to_string()));
        }
        let domain = leaf_intervals(&self.minus);
        let range = leaf_intervals(&self.plus);
        let i = domain
            .iter()
            .position(|(start, depth)| *x <= start.add(&Dyadic::from_index(1u32.into(), *depth)))
            .expect("intervals cover [0, 1]");
        let (d_start, d_depth) = &domain[i];
        let (r_start, r_depth) = &range[i];
        let offset = x.sub(d_start);
        Ok(r_start.add(&offset.mul_pow2(*d_depth as i64 - *r_depth as i64)))
    }

    pub fn to_record(&self) -> TreePairRecord {
        TreePairRecord {
            plus: self.plus.to_string(),
            minus: self.minus.to_string(),
        }
    }

    pub fn from_record(record: &TreePairRecord) -> Result<TreePair> {
        TreePair::new(record.plus.parse()?, record.minus.parse()?)
    }
}

/// Left endpoint and depth of every leaf interval, left to right.
fn leaf_intervals(t: &BinaryTree) -> Vec<(Dyadic, u32)> {
    fn go(t: &BinaryTree, index: BigUint, depth: u32, out: &mut Vec<(Dyadic, u32)>) {
        match t {
            BinaryTree::Leaf => out.push((Dyadic::from_index(index, depth), depth)),
            BinaryTree::Node(l, r) => {
                let left = index << 1usize;
                let right = &left + 1u32;
                go(l, left, depth + 1, out);
                go(r, right, depth + 1, out);
            }
        }
    }
    let mut out = Vec::with_capacity(t.leaf_count());
    go(t, BigUint::from(0u32), 0, &mut out);
    out
}

/// Breakpoints `0 = b_0 < ... < b_n = 1` of the standard dyadic partition
/// encoded by `t`.
pub fn partition_of(t: &BinaryTree) -> Vec<Dyadic> {
    let mut points: Vec<Dyadic> = leaf_intervals(t)
        .into_iter()
        .map(|(start, _)| start)
        .collect();
    points.push(Dyadic::one());
    points
}

/// Generator `x_i` of `F` (0-based): `x_0 = ((LL)L) | (L(LL))`, and `x_i`
/// hangs `x_{i-1}` off the right of a new root caret in both trees.
pub fn x_generator(i: usize) -> TreePair {
    let mut plus: BinaryTree = BinaryTree::node(BinaryTree::caret(), BinaryTree::Leaf);
    let mut minus: BinaryTree = BinaryTree::right_comb(3);
    for _ in 0..i {
        plus = BinaryTree::node(BinaryTree::Leaf, plus);
        minus = BinaryTree::node(BinaryTree::Leaf, minus);
    }
    TreePair { plus, minus }
}

pub fn eval_pl(g: &TreePair, x: &Dyadic) -> Result<Dyadic> {
    g.eval(x)
}

impl fmt::Display for TreePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.plus, self.minus)
    }
}

impl fmt::Debug for TreePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TreePair({self})")
    }
}

/// Parses `<tree>|<tree>`; syntax offsets refer to the whole input.
impl FromStr for TreePair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let Some(bar) = s.find('|') else {
            return Err(Error::Syntax {
                offset: s.len(),
                message: "expected '|' between the two trees".into(),
            });
        };
        let plus = s[..bar].parse::<BinaryTree>()?;
        let minus = s[bar + 1..].parse::<BinaryTree>().map_err(|e| match e {
            Error::Syntax { offset, message } => Error::Syntax {
                offset: offset + bar + 1,
                message,
            },
            other => other,
        })?;
        TreePair::new(plus, minus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> TreePair {
        s.parse().unwrap()
    }

    fn d(s: &str) -> Dyadic {
        s.parse().unwrap()
    }

    #[test]
    fn partitions() {
        let show = |t: &str| -> Vec<String> {
            partition_of(&t.parse().unwrap())
                .iter()
                .map(|x| x.to_string())
                .collect()
        };
        assert_eq!(show("L"), ["0", "1"]);
        assert_eq!(show("((LL)L)"), ["0", "1/2^2", "1/2^1", "1"]);
        assert_eq!(show("(L(LL))"), ["0", "1/2^1", "3/2^2", "1"]);
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(p("((LL)L)|((LL)L)").reduce(), TreePair::identity());
        assert_eq!(
            p("((L(LL))(LL))|(L(L(L(LL))))").reduce(),
            p("((L(LL))L)|(L(L(LL)))")
        );
        let x0 = p("((LL)L)|(L(LL))");
        assert!(x0.is_reduced());
        assert_eq!(x0.reduce(), x0);
    }

    #[test]
    fn multiply_examples() {
        let x0 = x_generator(0);
        assert_eq!(x0.multiply(&x0.inverse()), TreePair::identity());
        assert_eq!(
            x0.multiply(&p("(L((LL)L))|(L(L(LL)))")),
            p("((L(LL))L)|(L(L(LL)))")
        );
        assert_eq!(TreePair::identity().multiply(&x0), x0);
    }

    #[test]
    fn inverse_swaps() {
        assert_eq!(TreePair::identity().inverse(), TreePair::identity());
        assert_eq!(x_generator(0).inverse(), p("(L(LL))|((LL)L)"));
    }

    #[test]
    fn eval_matches_displayed_map() {
        let g = x_generator(0);
        assert_eq!(g.eval(&d("3/4")).unwrap(), d("1/2"));
        assert_eq!(g.eval(&d("7/8")).unwrap(), d("3/4"));
        assert_eq!(g.eval(&d("1/2")).unwrap(), d("1/4"));
        assert_eq!(g.eval(&d("0")).unwrap(), d("0"));
        assert_eq!(g.eval(&d("1")).unwrap(), d("1"));
        assert_eq!(TreePair::identity().eval(&d("5/8")).unwrap(), d("5/8"));
        assert!(g.eval(&Dyadic::unchecked(3u32.into(), 1)).is_err());
    }

    #[test]
    fn generators() {
        assert_eq!(x_generator(0), p("((LL)L)|(L(LL))"));
        assert_eq!(x_generator(1), p("(L((LL)L))|(L(L(LL)))"));
        let lhs = x_generator(1)
            .inverse()
            .multiply(&x_generator(2))
            .multiply(&x_generator(1));
        assert_eq!(lhs, x_generator(3));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "LL".parse::<TreePair>(),
            Err(Error::Syntax { offset: 2, .. })
        ));
        assert!(matches!(
            "L|(Lx)".parse::<TreePair>(),
            Err(Error::Syntax { offset: 4, .. })
        ));
        assert!(matches!(
            "L|(LL)".parse::<TreePair>(),
            Err(Error::LeafCountMismatch { plus: 1, minus: 2 })
        ));
    }

    #[test]
    fn insert_caret_keeps_element() {
        let g = p("((L(LL))L)|(L(L(LL)))");
        let h = g.insert_caret(4).unwrap();
        assert_eq!(h, p("((L(LL))(LL))|(L(L(L(LL))))"));
        assert_eq!(h.reduce(), g);
        assert!(g.insert_caret(5).is_err());
        assert_eq!(
            TreePair::identity().insert_caret(1).unwrap(),
            p("(LL)|(LL)")
        );
    }
}
