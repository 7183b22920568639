mod common;

use proptest::prelude::*;
use thompson_core::oracles::trees_with_leaves;
use thompson_core::trees::{parse_tree, partition_of, x_generator, BinaryTree, Dyadic, TreePair};

fn tree_strategy(max_leaves: usize) -> impl Strategy<Value = BinaryTree> {
    (1..=max_leaves, any::<u64>())
        .prop_map(|(n, seed)| common::random_tree(&mut common::rng(seed), n))
}

fn pair_strategy(max_leaves: usize) -> impl Strategy<Value = TreePair> {
    any::<u64>().prop_map(move |seed| common::random_pair(&mut common::rng(seed), max_leaves))
}

#[test]
fn text_round_trip_up_to_ten_leaves() {
    for n in 1..=10 {
        for t in trees_with_leaves(n) {
            let text = t.to_string();
            assert_eq!(parse_tree(&text).unwrap(), t);
            assert_eq!(t.leaf_count(), n);
            assert_eq!(t.caret_count(), n - 1);
        }
    }
}

#[test]
fn every_internal_gap_is_split_once() {
    for n in 1..=8 {
        for t in trees_with_leaves(n) {
            let mut splits: Vec<usize> = t.carets().iter().map(|c| c.split).collect();
            splits.sort_unstable();
            assert_eq!(splits, (1..n).collect::<Vec<_>>(), "{t}");
        }
    }
}

#[test]
fn generator_relations() {
    for n in 1..=8 {
        for k in 0..n {
            let xk = x_generator(k);
            let lhs = xk.inverse().multiply(&x_generator(n)).multiply(&xk);
            assert_eq!(lhs, x_generator(n + 1), "k={k} n={n}");
        }
    }
}

#[test]
fn group_axioms_on_random_triples() {
    let mut rng = common::rng(11);
    let e = TreePair::identity();
    for _ in 0..1000 {
        let (a, b, c) = (
            common::random_pair(&mut rng, 8),
            common::random_pair(&mut rng, 8),
            common::random_pair(&mut rng, 8),
        );
        assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
        assert_eq!(a.multiply(&e), a);
        assert_eq!(e.multiply(&a), a);
        assert_eq!(a.multiply(&a.inverse()), e);
    }
}

#[test]
fn eval_is_a_homomorphism() {
    let mut rng = common::rng(12);
    let grid = Dyadic::grid(6);
    for _ in 0..200 {
        let g = common::random_pair(&mut rng, 9);
        let h = common::random_pair(&mut rng, 9);
        let gh = g.multiply(&h);
        for x in &grid {
            assert_eq!(gh.eval(x).unwrap(), g.eval(&h.eval(x).unwrap()).unwrap());
        }
    }
}

#[test]
fn displayed_example_map() {
    let g = x_generator(0);
    let cases = [
        ("1/4", "1/8"),
        ("1/2", "1/4"),
        ("5/8", "3/8"),
        ("3/4", "1/2"),
        ("7/8", "3/4"),
    ];
    for (x, y) in cases {
        assert_eq!(
            g.eval(&x.parse().unwrap()).unwrap().to_string(),
            y.parse::<Dyadic>().unwrap().to_string()
        );
    }
}

proptest! {
    #[test]
    fn partitions_are_increasing(t in tree_strategy(12)) {
        let points = partition_of(&t);
        prop_assert_eq!(points.len(), t.leaf_count() + 1);
        prop_assert_eq!(points.first().unwrap(), &Dyadic::zero());
        prop_assert_eq!(points.last().unwrap(), &Dyadic::one());
        prop_assert!(points.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn reduction_is_confluent(p in pair_strategy(8), seed in any::<u64>(), count in 1..6usize) {
        let mut rng = common::rng(seed);
        let q = common::random_representative(&mut rng, &p, count);
        prop_assert!(p.is_reduced());
        prop_assert_eq!(q.reduce(), p.clone());
        prop_assert_eq!(q.reduce().reduce(), q.reduce());
    }

    #[test]
    fn inverse_is_an_involution(p in pair_strategy(10)) {
        prop_assert_eq!(p.inverse().inverse(), p);
    }

    #[test]
    fn pair_text_round_trip(p in pair_strategy(10)) {
        prop_assert_eq!(p.to_string().parse::<TreePair>().unwrap(), p.clone());
        prop_assert_eq!(TreePair::from_record(&p.to_record()).unwrap(), p);
    }
}
