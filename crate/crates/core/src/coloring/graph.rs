use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::trees::{BinaryTree, TreePair};
use crate::{Error, Result};

/// An undirected loopless multigraph on vertices `0..vertex_count`.
///
/// JSON form: `{"vertices": n, "edges": [[i, j], ...]}` with one entry per
/// parallel edge.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "GraphRecord", into = "GraphRecord")]
pub struct GammaGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct GraphRecord {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<GraphRecord> for GammaGraph {
    type Error = Error;

    fn try_from(r: GraphRecord) -> Result<Self> {
        GammaGraph::new(r.vertices, r.edges)
    }
}

impl From<GammaGraph> for GraphRecord {
    fn from(g: GammaGraph) -> Self {
        GraphRecord {
            vertices: g.vertex_count,
            edges: g.edges,
        }
    }
}

impl GammaGraph {
    /// Edges are stored with the smaller endpoint first.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        for (i, j) in edges {
            if i == j {
                return Err(Error::InvalidGraph(format!("loop at vertex {i}")));
            }
            if i.max(j) >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge ({i}, {j}) leaves the vertex range 0..{vertex_count}"
                )));
            }
            normalized.push((i.min(j), i.max(j)));
        }
        Ok(GammaGraph {
            vertex_count,
            edges: normalized,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted, de-duplicated neighbor lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    /// Multi-edges collapsed, each pair listed once, sorted.
    pub fn simple_edges(&self) -> Vec<(usize, usize)> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e.dedup();
        e
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph gamma {\n");
        for v in 0..self.vertex_count {
            writeln!(out, "  {v};").unwrap();
        }
        for &(i, j) in &self.edges {
            writeln!(out, "  {i} -- {j};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

fn gap_graph(
    p: &TreePair,
    per_caret: impl Fn(usize, usize, usize) -> Vec<(usize, usize)>,
) -> Vec<(usize, usize)> {
    let trees: [&BinaryTree; 2] = [p.plus(), p.minus()];
    trees
        .iter()
        .flat_map(|t| t.carets())
        .flat_map(|c| per_caret(c.first, c.split, c.last))
        .collect()
}

/// One edge `{first - 1, split}` for every caret of either tree.
pub fn gamma_vecf(p: &TreePair) -> GammaGraph {
    let edges = gap_graph(p, |first, split, _| vec![(first - 1, split)]);
    GammaGraph::new(p.leaf_count() + 1, edges).expect("gaps are in range")
}

/// Two edges `{first - 1, split}` and `{split, last}` for every caret of
/// either tree, plus the closing edge `{0, n}`.
pub fn gamma_3col(p: &TreePair) -> GammaGraph {
    let n = p.leaf_count();
    let mut edges = gap_graph(p, |first, split, last| {
        vec![(first - 1, split), (split, last)]
    });
    edges.push((0, n));
    GammaGraph::new(n + 1, edges).expect("gaps are in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(s: &str) -> TreePair {
        s.parse().unwrap()
    }

    fn sorted(g: &GammaGraph) -> Vec<(usize, usize)> {
        let mut e = g.edges().to_vec();
        e.sort_unstable();
        e
    }

    #[test]
    fn vecf_examples() {
        let g = gamma_vecf(&TreePair::identity());
        assert_eq!((g.vertex_count(), g.edges().len()), (2, 0));
        let g = gamma_vecf(&pair("((LL)L)|(L(LL))"));
        assert_eq!(sorted(&g), [(0, 1), (0, 1), (0, 2), (1, 2)]);
        let g = gamma_vecf(&pair("((L(LL))L)|(L(L(LL)))"));
        assert_eq!(sorted(&g), [(0, 1), (0, 1), (0, 3), (1, 2), (1, 2), (2, 3)]);
    }

    #[test]
    fn three_col_examples() {
        let g = gamma_3col(&TreePair::identity());
        assert_eq!(sorted(&g), [(0, 1)]);
        let g = gamma_3col(&pair("(LL)|(LL)"));
        assert_eq!(sorted(&g), [(0, 1), (0, 1), (0, 2), (1, 2), (1, 2)]);
        let g = gamma_3col(&pair("((LL)L)|(L(LL))"));
        assert_eq!(
            sorted(&g),
            [
                (0, 1),
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 2),
                (1, 3),
                (2, 3),
                (2, 3)
            ]
        );
    }

    #[test]
    fn json_and_dot() {
        let g = gamma_vecf(&pair("((LL)L)|(L(LL))"));
        let text = g.to_json();
        assert_eq!(text, r#"{"vertices":4,"edges":[[0,2],[0,1],[0,1],[1,2]]}"#);
        assert_eq!(serde_json::from_str::<GammaGraph>(&text).unwrap(), g);
        assert!(serde_json::from_str::<GammaGraph>(r#"{"vertices":2,"edges":[[1,1]]}"#).is_err());
        assert!(serde_json::from_str::<GammaGraph>(r#"{"vertices":2,"edges":[[0,2]]}"#).is_err());
        let dot = GammaGraph::new(2, vec![(1, 0)]).unwrap().to_dot();
        assert_eq!(dot, "graph gamma {\n  0;\n  1;\n  0 -- 1;\n}\n");
    }
}
