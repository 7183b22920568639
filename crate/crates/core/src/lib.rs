//! Exact combinatorics for Thompson's group `F` and its skein-theoretic
//! subgroups.
//!
//! * [`trees`]: binary trees, standard dyadic partitions and reduced tree
//!   pairs as elements of `F`, with exact group arithmetic.
//! * [`presentations`]: words in the infinite presentation of `F_N` and
//!   positive normal forms.
//! * [`grafting`]: the group `G_X` of pairs of `X`-grafted trees for a fixed
//!   `N`-leaf pattern `X`, and the isomorphism `F_N -> G_X`.
//! * [`coloring`]: the region graphs of a tree pair, 2/3-coloring and
//!   chromatic counts, membership in the Jones subgroup and the 3-colorable
//!   subgroup, and factorization of members into `F_3` / `F_4` generators.
//! * [`oracles`]: deliberately naive, independent reference implementations
//!   used to cross-check everything above.
//!
//! Everything is immutable and integer-exact; no floating point is used.

pub mod coloring;
mod error;
pub mod grafting;
pub mod oracles;
pub mod presentations;
pub mod trees;

pub use error::{Error, Result};
