mod common;

use std::collections::HashMap;

use rand::Rng;
use thompson_core::grafting::{
    basic_index, gx_generator, gx_to_word, phi, GXElement, GraftWord, Pattern,
};
use thompson_core::presentations::{sort_positive, FNWord};
use thompson_core::trees::BinaryTree;

fn patterns() -> Vec<Pattern> {
    let mut rng = common::rng(31);
    let mut out = vec![Pattern::vecf(), Pattern::three_col()];
    for n in [3, 4, 5] {
        out.push(Pattern::new(common::random_tree(&mut rng, n)).unwrap());
    }
    out
}

fn random_graft_word(rng: &mut impl Rng, x: &Pattern, max_len: usize) -> GraftWord {
    let mut leaves = 1;
    let mut positions = Vec::new();
    for _ in 0..rng.gen_range(0..=max_len) {
        positions.push(rng.gen_range(0..leaves));
        leaves += x.arity() - 1;
    }
    GraftWord::new(positions)
}

#[test]
fn vertical_isotopy_for_several_patterns() {
    let mut rng = common::rng(32);
    for x in patterns() {
        let shift = x.arity() - 1;
        for n in 1..=8 {
            for k in 0..n {
                for _ in 0..5 {
                    let mut leaves = n + 1 + 2 * shift;
                    let mut suffix = Vec::new();
                    for _ in 0..rng.gen_range(0..=3) {
                        suffix.push(rng.gen_range(0..leaves));
                        leaves += shift;
                    }
                    let lhs = GraftWord::new([vec![n, k], suffix.clone()].concat());
                    let rhs = GraftWord::new([vec![k, n + shift], suffix].concat());
                    let base = BinaryTree::right_comb(n + 1);
                    assert_eq!(
                        x.realize_from(&base, &lhs).unwrap(),
                        x.realize_from(&base, &rhs).unwrap()
                    );
                }
            }
        }
    }
}

#[test]
fn basic_index_steps() {
    for arity in 2..=5 {
        for n in 0..=100 {
            assert_eq!(basic_index(n + arity - 1, arity), basic_index(n, arity) + 1);
            assert!(n % (arity - 1) < arity);
        }
    }
}

#[test]
fn decompose_inverts_realize() {
    let mut rng = common::rng(33);
    let xs = patterns();
    for i in 0..500 {
        let x = &xs[i % xs.len()];
        let w = random_graft_word(&mut rng, x, 6);
        let t = x.realize(&w).unwrap();
        assert_eq!(x.decompose(&t).unwrap(), x.vertical_commute(&w), "{x}: {w}");
        assert_eq!(t.leaf_count(), 1 + w.len() * (x.arity() - 1));
        if !t.is_leaf() {
            let (alpha, rest) = x.decompose_basic(&t).unwrap();
            assert_eq!(x.realize(&x.basic_form(alpha).concat(&rest)).unwrap(), t);
        }
    }
}

#[test]
fn relations_in_the_grafting_group() {
    for x in [
        Pattern::vecf(),
        Pattern::three_col(),
        Pattern::right_comb(2).unwrap(),
    ] {
        let n_ar = x.arity();
        for n in 1..=7 {
            for k in 0..n {
                let w = FNWord::new(n_ar, vec![(k, -1), (n, 1), (k, 1)]).unwrap();
                assert_eq!(phi(&w, &x).unwrap(), gx_generator(n + n_ar - 1, &x));
            }
        }
    }
}

/// Distinct sorted positive words have distinct images.
#[test]
fn positive_words_are_faithful() {
    for x in [Pattern::vecf(), Pattern::three_col()] {
        let mut seen: HashMap<GXElement, FNWord> = HashMap::new();
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..5 {
            words = words
                .into_iter()
                .flat_map(|w| {
                    (0..4).map(move |k| {
                        let mut v = w.clone();
                        v.push(k);
                        v
                    })
                })
                .collect();
            for w in &words {
                let word = FNWord::new(x.arity(), w.iter().map(|&k| (k, 1)).collect()).unwrap();
                let sorted = sort_positive(&word).unwrap();
                let image = phi(&word, &x).unwrap();
                if let Some(prev) = seen.insert(image.clone(), sorted.clone()) {
                    assert_eq!(prev, sorted, "{x}: {word} collides");
                }
            }
        }
    }
}

#[test]
fn multiplication_agrees_with_trees() {
    let mut rng = common::rng(34);
    let mut layered = 0;
    for x in [Pattern::vecf(), Pattern::three_col()] {
        for _ in 0..200 {
            let g = phi(&common::random_word(&mut rng, x.arity(), 5, 6), &x).unwrap();
            let h = phi(&common::random_word(&mut rng, x.arity(), 5, 6), &x).unwrap();
            let gh = g.multiply(&h).unwrap();
            assert_eq!(gh.f_image(), g.f_image().multiply(&h.f_image()));
            let depth = x
                .block_depth(g.minus())
                .max(x.block_depth(h.plus()))
                .unwrap();
            if depth <= 4 {
                assert_eq!(gh, g.multiply_via_layers(&h).unwrap());
                layered += 1;
            }
            assert_eq!(gh.f_image() == g.f_image(), h.is_identity());
        }
    }
    assert!(
        layered >= 100,
        "only {layered} products checked through layers"
    );
}

#[test]
fn words_round_trip() {
    let mut rng = common::rng(35);
    for x in patterns() {
        for _ in 0..100 {
            let w = common::random_word(&mut rng, x.arity(), 6, 7);
            let g = phi(&w, &x).unwrap();
            let back = gx_to_word(&g);
            assert_eq!(phi(&back, &x).unwrap(), g, "{x}: {w} -> {back}");
        }
    }
}
