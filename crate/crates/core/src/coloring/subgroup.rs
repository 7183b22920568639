use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use super::{chromatic, gamma_3col, gamma_vecf, three_color, two_color, Coloring, GammaGraph};
use crate::grafting::{gx_to_word, search_representative, Pattern};
use crate::presentations::FNWord;
use crate::trees::TreePair;
use crate::{Error, Result};

/// The two vacuum stabilizers: the Jones subgroup (`vecf`) and the
/// 3-colorable subgroup (`3col`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Subgroup {
    Vecf,
    ThreeCol,
}

impl Subgroup {
    pub const ALL: [Subgroup; 2] = [Subgroup::Vecf, Subgroup::ThreeCol];

    /// The grafting pattern whose group maps onto the subgroup.
    pub fn pattern(self) -> Pattern {
        match self {
            Subgroup::Vecf => Pattern::vecf(),
            Subgroup::ThreeCol => Pattern::three_col(),
        }
    }

    pub fn gamma(self, p: &TreePair) -> GammaGraph {
        match self {
            Subgroup::Vecf => gamma_vecf(p),
            Subgroup::ThreeCol => gamma_3col(p),
        }
    }

    /// Color of vertex `i` in the canonical pattern: alternating `0 1 0 1 ..`
    /// for `vecf`, and `a c b a c b ..` with `a, b, c = 0, 1, 2` for `3col`.
    pub fn canonical_color(self, i: usize) -> u8 {
        match self {
            Subgroup::Vecf => (i % 2) as u8,
            Subgroup::ThreeCol => [0, 2, 1][i % 3],
        }
    }

    pub fn is_canonical(self, c: &Coloring) -> bool {
        c.colors
            .iter()
            .enumerate()
            .all(|(i, &x)| x == self.canonical_color(i))
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Subgroup::Vecf => "vecf",
            Subgroup::ThreeCol => "3col",
        })
    }
}

impl FromStr for Subgroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vecf" => Ok(Subgroup::Vecf),
            "3col" => Ok(Subgroup::ThreeCol),
            _ => Err(Error::Syntax {
                offset: 0,
                message: format!("unknown subgroup {s:?}; expected vecf or 3col"),
            }),
        }
    }
}

/// Whether `p` fixes the vacuum: `gamma_vecf(p)` bipartite, or
/// `gamma_3col(p)` 3-colorable.
pub fn membership(p: &TreePair, subgroup: Subgroup) -> bool {
    let g = subgroup.gamma(p);
    match subgroup {
        Subgroup::Vecf => two_color(&g).is_ok(),
        Subgroup::ThreeCol => three_color(&g).is_some(),
    }
}

/// The vacuum coefficient, normalized to a colorability indicator.
pub fn coefficient(p: &TreePair, subgroup: Subgroup) -> u8 {
    u8::from(membership(p, subgroup))
}

/// Half the number of proper 2-colorings of `gamma_vecf(p)`. The two outer
/// gaps are separate vertices here, so the identity gives 2, not 1.
pub fn raw_vecf_coefficient(p: &TreePair) -> BigUint {
    let count = chromatic(&gamma_vecf(p), 2).expect("gamma graphs of small pairs");
    count / 2u32
}

pub fn insert_caret(p: &TreePair, leaf: usize) -> Result<TreePair> {
    p.insert_caret(leaf)
}

/// A representative of a member together with a proper coloring of its
/// gamma graph in the canonical pattern.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Normalized {
    pub pair: TreePair,
    pub coloring: Coloring,
    pub insertions: usize,
}

/// Default insertion budget for [`normalize_coloring`].
pub fn normalize_budget(p: &TreePair) -> usize {
    2 * p.leaf_count()
}

pub fn normalize_coloring(p: &TreePair, subgroup: Subgroup) -> Result<Normalized> {
    normalize_coloring_within(p, subgroup, normalize_budget(p))
}

/// Inserts carets in both trees at pattern violations, scanning gaps left
/// to right. A caret on leaf `i + 1` adds a gap vertex adjacent only to
/// gaps `i` and (for `3col`) the old `i + 1`, so it can take the color the
/// pattern wants there while every other color is kept.
pub fn normalize_coloring_within(
    p: &TreePair,
    subgroup: Subgroup,
    budget: usize,
) -> Result<Normalized> {
    let mut coloring = initial_coloring(p, subgroup)?;
    let mut pair = p.clone();
    let mut insertions = 0;
    let mut i = 0;
    while i + 1 < coloring.colors.len() {
        let want = subgroup.canonical_color(i + 1);
        if coloring.colors[i + 1] != want {
            if insertions == budget {
                return Err(Error::BudgetExceeded(format!(
                    "normalizing {p} needs more than {budget} caret insertions"
                )));
            }
            pair = pair.insert_caret(i + 1)?;
            coloring.colors.insert(i + 1, want);
            insertions += 1;
        }
        i += 1;
    }
    Ok(Normalized {
        pair,
        coloring,
        insertions,
    })
}

/// `vecf`: each component is oriented so that its smallest vertex gets its
/// canonical color. `3col`: the lexicographically first coloring, permuted
/// so that gap 0 is `a` and the last gap (adjacent to it) is `c`.
fn initial_coloring(p: &TreePair, subgroup: Subgroup) -> Result<Coloring> {
    let g = subgroup.gamma(p);
    let not_member = || Error::NotAMember(p.to_string());
    match subgroup {
        Subgroup::Vecf => {
            let base = two_color(&g).map_err(|_| not_member())?;
            let adj = g.adjacency();
            let mut colors: Vec<Option<u8>> = vec![None; g.vertex_count()];
            for root in 0..colors.len() {
                if colors[root].is_some() {
                    continue;
                }
                let flip = base.colors[root] ^ subgroup.canonical_color(root);
                let mut stack = vec![root];
                colors[root] = Some(base.colors[root] ^ flip);
                while let Some(u) = stack.pop() {
                    for &v in &adj[u] {
                        if colors[v].is_none() {
                            colors[v] = Some(base.colors[v] ^ flip);
                            stack.push(v);
                        }
                    }
                }
            }
            Ok(Coloring {
                colors: colors
                    .into_iter()
                    .map(|c| c.expect("all visited"))
                    .collect(),
            })
        }
        Subgroup::ThreeCol => {
            let base = three_color(&g).ok_or_else(not_member)?;
            let (first, last) = (
                base.colors[0],
                *base.colors.last().expect("n + 1 >= 2 vertices"),
            );
            let mut sigma = [1u8; 3];
            sigma[first as usize] = 0;
            sigma[last as usize] = 2;
            Ok(Coloring {
                colors: base.colors.iter().map(|&c| sigma[c as usize]).collect(),
            })
        }
    }
}

/// Default representative-search bound for [`factor_member`], in leaves.
pub fn factor_budget(p: &TreePair) -> usize {
    4 * p.leaf_count() + 4
}

/// Writes a member as a word in the generators of `F_3` (`vecf`) or `F_4`
/// (`3col`): finds a representative with both trees in `Alg(X)` and reads
/// off its word. `phi` of the result maps back to `p` in `F`.
pub fn factor_member(p: &TreePair, subgroup: Subgroup) -> Result<FNWord> {
    if !membership(p, subgroup) {
        return Err(Error::NotAMember(p.to_string()));
    }
    let g = search_representative(p, &subgroup.pattern(), factor_budget(p))?;
    Ok(gx_to_word(&g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grafting::phi;
    use crate::trees::x_generator;

    fn pair(s: &str) -> TreePair {
        s.parse().unwrap()
    }

    #[test]
    fn membership_examples() {
        for s in Subgroup::ALL {
            assert!(membership(&TreePair::identity(), s));
            assert_eq!(coefficient(&TreePair::identity(), s), 1);
        }
        assert!(!membership(&x_generator(0), Subgroup::Vecf));
        assert!(!membership(&x_generator(0), Subgroup::ThreeCol));
        assert!(membership(&pair("((L(LL))L)|(L(L(LL)))"), Subgroup::Vecf));
        assert_eq!(coefficient(&x_generator(0), Subgroup::Vecf), 0);
        assert_eq!(
            raw_vecf_coefficient(&TreePair::identity()),
            BigUint::from(2u32)
        );
        assert_eq!(raw_vecf_coefficient(&x_generator(0)), BigUint::from(0u32));
    }

    #[test]
    fn normalizing() {
        let n = normalize_coloring(&TreePair::identity(), Subgroup::Vecf).unwrap();
        assert_eq!(n.pair, TreePair::identity());
        assert_eq!(n.insertions, 0);
        let p = pair("((L(LL))L)|(L(L(LL)))");
        let n = normalize_coloring(&p, Subgroup::Vecf).unwrap();
        assert_eq!(n.pair.reduce(), p);
        assert!(n.coloring.is_proper(&gamma_vecf(&n.pair)));
        assert!(Subgroup::Vecf.is_canonical(&n.coloring));
        let q = phi(&FNWord::parse("t1", 4).unwrap(), &Pattern::three_col())
            .unwrap()
            .f_image();
        let n = normalize_coloring(&q, Subgroup::ThreeCol).unwrap();
        assert_eq!(n.pair.reduce(), q);
        assert!(n.coloring.is_proper(&gamma_3col(&n.pair)));
        assert!(Subgroup::ThreeCol.is_canonical(&n.coloring));
        assert!(matches!(
            normalize_coloring(&x_generator(0), Subgroup::Vecf),
            Err(Error::NotAMember(_))
        ));
    }

    #[test]
    fn factoring() {
        assert!(factor_member(&TreePair::identity(), Subgroup::Vecf)
            .unwrap()
            .is_empty());
        let p = pair("((L(LL))L)|(L(L(LL)))");
        assert_eq!(factor_member(&p, Subgroup::Vecf).unwrap().to_string(), "t0");
        let y = Pattern::three_col();
        let w = FNWord::parse("t0 t3", 4).unwrap();
        let q = phi(&w, &y).unwrap().f_image();
        let back = factor_member(&q, Subgroup::ThreeCol).unwrap();
        assert!(crate::presentations::words_equal(&back, &w).unwrap());
        assert!(matches!(
            factor_member(&x_generator(0), Subgroup::ThreeCol),
            Err(Error::NotAMember(_))
        ));
    }

    #[test]
    fn subgroup_names() {
        assert_eq!("3col".parse::<Subgroup>().unwrap(), Subgroup::ThreeCol);
        assert_eq!(Subgroup::Vecf.to_string(), "vecf");
        assert!("jones".parse::<Subgroup>().is_err());
    }
}
