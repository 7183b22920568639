//! Gap graphs of tree pairs, their 2/3-colorings and chromatic counts, and
//! the membership, normalization and factorization procedures for the
//! Jones subgroup and the 3-colorable subgroup.
//!
//! Gaps `0..n` of an `n`-leaf pair are the vertices. A caret with leaves
//! `first..=last` whose left subtree ends at leaf `split` separates gap
//! `first - 1` from gap `split`, and (in the cubic dual) gap `split` from
//! gap `last`.

mod graph;
mod solve;
mod subgroup;

pub use graph::{gamma_3col, gamma_vecf, GammaGraph};
pub use solve::{chromatic, colorings_lex, three_color, two_color, Coloring, OddCycle};
pub use subgroup::{
    coefficient, factor_budget, factor_member, insert_caret, membership, normalize_budget,
    normalize_coloring, normalize_coloring_within, raw_vecf_coefficient, Normalized, Subgroup,
};
