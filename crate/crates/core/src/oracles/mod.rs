//! Naive reference implementations used only to cross-check the main
//! modules: an `N`-ary tree-pair model of `F_N`, exhaustive enumeration of
//! reduced tree pairs, and brute-force coloring counts.

mod nary;

pub use nary::{nary_word_equal, NaryTree, NaryTreePair};

use crate::coloring::GammaGraph;
use crate::trees::{BinaryTree, TreePair};
use crate::{Error, Result};

/// Largest leaf count accepted by [`enumerate_elements`].
pub const MAX_CORPUS_LEAVES: usize = 9;

/// Largest vertex count accepted by [`count_colorings`].
pub const MAX_BRUTE_FORCE_VERTICES: usize = 16;

/// All trees with `n` leaves, sorted by their text form.
pub fn trees_with_leaves(n: usize) -> Vec<BinaryTree> {
    let mut table: Vec<Vec<BinaryTree>> = vec![Vec::new(), vec![BinaryTree::Leaf]];
    for m in 2..=n {
        let mut row = Vec::new();
        for i in 1..m {
            for l in &table[i] {
                for r in &table[m - i] {
                    row.push(BinaryTree::node(l.clone(), r.clone()));
                }
            }
        }
        table.push(row);
    }
    if n == 0 {
        return Vec::new();
    }
    let mut out = table.swap_remove(n);
    out.sort_by_cached_key(|t| t.to_string());
    out
}

/// Leaf numbers `i` such that leaves `i, i + 1` form a caret, read off the
/// text form: every `(LL)` is one, numbered by the `L`s before it.
fn text_cherries(text: &str) -> Vec<usize> {
    let mut out = Vec::new();
    let mut leaves = 0;
    for (i, b) in text.bytes().enumerate() {
        if b == b'L' {
            leaves += 1;
        }
        if text[i..].starts_with("(LL)") {
            out.push(leaves + 1);
        }
    }
    out
}

/// Every reduced tree pair with at most `max_leaves` leaves, exactly once,
/// ordered by leaf count, then plus text, then minus text.
pub fn enumerate_elements(max_leaves: usize) -> Result<impl Iterator<Item = TreePair>> {
    if max_leaves > MAX_CORPUS_LEAVES {
        return Err(Error::BoundExceeded(format!(
            "enumeration supports at most {MAX_CORPUS_LEAVES} leaves, got {max_leaves}"
        )));
    }
    Ok((1..=max_leaves).flat_map(|n| {
        let trees: Vec<(BinaryTree, Vec<usize>)> = trees_with_leaves(n)
            .into_iter()
            .map(|t| {
                let c = text_cherries(&t.to_string());
                (t, c)
            })
            .collect();
        let mut out = Vec::new();
        for (p, pc) in &trees {
            for (m, mc) in &trees {
                if pc.iter().all(|i| !mc.contains(i)) {
                    out.push(TreePair::new(p.clone(), m.clone()).expect("equal leaf counts"));
                }
            }
        }
        out
    }))
}

/// The corpus as sorted `<tree>|<tree>` lines.
pub fn corpus_lines(max_leaves: usize) -> Result<Vec<String>> {
    let mut lines: Vec<String> = enumerate_elements(max_leaves)?
        .map(|p| p.to_string())
        .collect();
    lines.sort();
    Ok(lines)
}

/// Number of proper `q`-colorings by exhaustive assignment, vertex by
/// vertex, checking every edge back to earlier vertices.
pub fn count_colorings(g: &GammaGraph, q: u32) -> Result<u64> {
    let n = g.vertex_count();
    if n > MAX_BRUTE_FORCE_VERTICES {
        return Err(Error::BoundExceeded(format!(
            "brute-force coloring supports at most {MAX_BRUTE_FORCE_VERTICES} vertices, got {n}"
        )));
    }
    let mut back: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(i, j) in g.edges() {
        back[i.max(j)].push(i.min(j));
    }
    fn go(v: usize, q: u32, back: &[Vec<usize>], colors: &mut Vec<u32>) -> u64 {
        if v == back.len() {
            return 1;
        }
        let mut total = 0;
        for c in 0..q {
            if back[v].iter().all(|&u| colors[u] != c) {
                colors.push(c);
                total += go(v + 1, q, back, colors);
                colors.pop();
            }
        }
        total
    }
    Ok(go(0, q, &back, &mut Vec::with_capacity(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::gamma_vecf;

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| trees_with_leaves(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 5, 14, 42, 132, 429]);
        assert_eq!(trees_with_leaves(3)[0].to_string(), "((LL)L)");
    }

    #[test]
    fn small_corpora() {
        let one: Vec<_> = enumerate_elements(1).unwrap().collect();
        assert_eq!(one, [TreePair::identity()]);
        assert_eq!(enumerate_elements(2).unwrap().count(), 1);
        let three: Vec<String> = enumerate_elements(3)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(three, ["L|L", "((LL)L)|(L(LL))", "(L(LL))|((LL)L)"]);
        assert!(enumerate_elements(10).is_err());
    }

    #[test]
    fn cherries_from_text() {
        assert_eq!(text_cherries("((L(LL))(LL))"), [2, 4]);
        assert_eq!(text_cherries("L"), Vec::<usize>::new());
    }

    #[test]
    fn brute_force_counts() {
        let one = GammaGraph::new(1, vec![]).unwrap();
        assert_eq!(count_colorings(&one, 2).unwrap(), 2);
        let tri = GammaGraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(count_colorings(&tri, 2).unwrap(), 0);
        let p = "((L(LL))L)|(L(L(LL)))".parse().unwrap();
        assert_eq!(count_colorings(&gamma_vecf(&p), 2).unwrap(), 4);
        let big = GammaGraph::new(17, vec![]).unwrap();
        assert!(count_colorings(&big, 2).is_err());
    }
}
