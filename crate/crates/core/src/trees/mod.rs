//! Binary trees, standard dyadic partitions, and tree pairs as elements of
//! Thompson's group `F`.
//!
//! Text formats: trees use `T ::= "L" | "(" T T ")"`, pairs are written
//! `<plus>|<minus>`, dyadics `a/2^p` (or `0`, `1`).

mod dyadic;
mod pair;
mod tree;

pub use dyadic::Dyadic;
pub use pair::{eval_pl, partition_of, x_generator, TreePair, TreePairRecord};
pub use tree::{parse_tree, BinaryTree, Caret};
