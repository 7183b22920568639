#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thompson_core::presentations::FNWord;
use thompson_core::trees::{BinaryTree, TreePair};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform split at every node; not uniform over shapes, which is fine here.
pub fn random_tree(rng: &mut impl Rng, leaves: usize) -> BinaryTree {
    if leaves <= 1 {
        return BinaryTree::Leaf;
    }
    let left = rng.gen_range(1..leaves);
    BinaryTree::node(random_tree(rng, left), random_tree(rng, leaves - left))
}

pub fn random_pair(rng: &mut impl Rng, max_leaves: usize) -> TreePair {
    let n = rng.gen_range(1..=max_leaves);
    TreePair::new(random_tree(rng, n), random_tree(rng, n))
        .unwrap()
        .reduce()
}

pub fn random_word(rng: &mut impl Rng, arity: usize, max_len: usize, max_index: usize) -> FNWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            (
                rng.gen_range(0..=max_index),
                if rng.gen_bool(0.5) { 1 } else { -1 },
            )
        })
        .collect();
    FNWord::new(arity, letters).unwrap()
}

pub fn random_positive_word(
    rng: &mut impl Rng,
    arity: usize,
    max_len: usize,
    max_index: usize,
) -> FNWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| (rng.gen_range(0..=max_index), 1))
        .collect();
    FNWord::new(arity, letters).unwrap()
}

/// `p` with `count` carets inserted at random leaves of both trees.
pub fn random_representative(rng: &mut impl Rng, p: &TreePair, count: usize) -> TreePair {
    let mut q = p.clone();
    for _ in 0..count {
        let leaf = rng.gen_range(1..=q.leaf_count());
        q = q.insert_caret(leaf).unwrap();
    }
    q
}

/// Inserts the relator `t_k^-1 t_n t_k t_{n+N-1}^-1` at a random spot.
pub fn with_relator(rng: &mut impl Rng, w: &FNWord, max_index: usize) -> FNWord {
    let n_arity = w.arity();
    let n = rng.gen_range(1..=max_index.max(1));
    let k = rng.gen_range(0..n);
    let mut letters = w.letters().to_vec();
    let at = rng.gen_range(0..=letters.len());
    let relator = [(k, -1), (n, 1), (k, 1), (n + n_arity - 1, -1)];
    letters.splice(at..at, relator);
    FNWord::new(n_arity, letters).unwrap()
}
