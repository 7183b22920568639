//! The algebra `Alg(X)` of trees grown by grafting a fixed pattern `X`, the
//! group `G_X` of pairs of such trees, and the isomorphism `F_N -> G_X`.
//!
//! Every tree of `Alg(X)` decomposes uniquely into blocks (copies of `X`),
//! read top-down from the root, so decomposition needs no search.

mod group;
mod pattern;

pub use group::{
    basic_index, gx_generator, gx_inverse, gx_multiply, gx_to_word, phi, search_representative,
    GXElement,
};
pub use pattern::{GraftWord, Pattern};
