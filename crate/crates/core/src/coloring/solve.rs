use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;

use super::GammaGraph;
use crate::{Error, Result};

/// A color index per vertex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Coloring {
    pub colors: Vec<u8>,
}

impl Coloring {
    pub fn is_proper(&self, g: &GammaGraph) -> bool {
        self.colors.len() == g.vertex_count()
            && g.edges()
                .iter()
                .all(|&(i, j)| self.colors[i] != self.colors[j])
    }
}

/// A closed walk of odd length: consecutive vertices (and last to first)
/// are adjacent.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OddCycle {
    pub walk: Vec<usize>,
}

/// Breadth-first 2-coloring; each component starts at its smallest vertex
/// with color 0.
pub fn two_color(g: &GammaGraph) -> std::result::Result<Coloring, OddCycle> {
    let adj = g.adjacency();
    let n = g.vertex_count();
    let mut color: Vec<Option<u8>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].expect("queued vertices are colored");
            for &v in &adj[u] {
                match color[v] {
                    None => {
                        color[v] = Some(1 - cu);
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return Err(odd_cycle(u, v, &parent, &depth)),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(Coloring {
        colors: color.into_iter().map(|c| c.expect("all visited")).collect(),
    })
}

/// Tree paths from `u` and `v` up to their common ancestor, joined by the
/// edge `u v`. Equal colors at `u` and `v` make the total length odd.
fn odd_cycle(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> OddCycle {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left.reverse();
    OddCycle { walk: left }
}

/// Proper `q`-colorings in lexicographic order (vertex 0 most significant),
/// at most `limit` of them. Backtracking with forward checking: each
/// assignment removes its color from the neighbors' domains, and vertices
/// left with a single color are assigned at once.
pub fn colorings_lex(g: &GammaGraph, q: u8, limit: usize) -> Vec<Coloring> {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut out = Vec::new();
    if limit == 0 || q == 0 && n > 0 || q > 8 {
        return out;
    }
    let full: u8 = if q == 8 { u8::MAX } else { (1u8 << q) - 1 };
    let mut state = Search {
        adj: &adj,
        assigned: vec![None; n],
        domains: vec![full; n],
    };
    state.dfs(0, limit, &mut out);
    out
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    assigned: Vec<Option<u8>>,
    domains: Vec<u8>,
}

impl Search<'_> {
    fn dfs(&mut self, v: usize, limit: usize, out: &mut Vec<Coloring>) {
        if out.len() >= limit {
            return;
        }
        if v == self.assigned.len() {
            out.push(Coloring {
                colors: self.assigned.iter().map(|c| c.expect("complete")).collect(),
            });
            return;
        }
        if self.assigned[v].is_some() {
            self.dfs(v + 1, limit, out);
            return;
        }
        for c in 0..8u8 {
            if self.domains[v] & (1 << c) == 0 {
                continue;
            }
            let saved = (self.assigned.clone(), self.domains.clone());
            if self.assign(v, c) {
                self.dfs(v + 1, limit, out);
            }
            (self.assigned, self.domains) = saved;
            if out.len() >= limit {
                return;
            }
        }
    }

    /// Assigns `v = c` and propagates forced moves; false on a wipe-out.
    fn assign(&mut self, v: usize, c: u8) -> bool {
        let mut stack = vec![(v, c)];
        while let Some((v, c)) = stack.pop() {
            match self.assigned[v] {
                Some(d) if d == c => continue,
                Some(_) => return false,
                None => {}
            }
            self.assigned[v] = Some(c);
            self.domains[v] = 1 << c;
            for &u in &self.adj[v] {
                if self.assigned[u] == Some(c) {
                    return false;
                }
                if self.assigned[u].is_some() {
                    continue;
                }
                self.domains[u] &= !(1 << c);
                match self.domains[u].count_ones() {
                    0 => return false,
                    1 => stack.push((u, self.domains[u].trailing_zeros() as u8)),
                    _ => {}
                }
            }
        }
        true
    }
}

/// The lexicographically first proper 3-coloring, or `None` when there is
/// none.
pub fn three_color(g: &GammaGraph) -> Option<Coloring> {
    colorings_lex(g, 3, 1).pop()
}

/// Number of proper `q`-colorings, by deletion-contraction on the
/// underlying simple graph with memoization, splitting into components and
/// closing forests and cliques directly.
pub fn chromatic(g: &GammaGraph, q: u32) -> Result<BigUint> {
    let n = g.vertex_count();
    if n > 64 {
        return Err(Error::BoundExceeded(format!(
            "deletion-contraction supports at most 64 vertices, got {n}"
        )));
    }
    let mut adj = vec![0u64; n];
    for (i, j) in g.simple_edges() {
        adj[i] |= 1 << j;
        adj[j] |= 1 << i;
    }
    let mut memo = HashMap::new();
    Ok(count(adj, q, &mut memo))
}

fn count(adj: Vec<u64>, q: u32, memo: &mut HashMap<Vec<u64>, BigUint>) -> BigUint {
    let n = adj.len();
    let q_big = BigUint::from(q);
    let edges: u32 = adj.iter().map(|m| m.count_ones()).sum::<u32>() / 2;
    if edges == 0 {
        return q_big.pow(n as u32);
    }
    let components = components(&adj);
    if components.len() > 1 {
        return components
            .into_iter()
            .map(|mask| count(induced(&adj, mask), q, memo))
            .product();
    }
    if edges as usize == n - 1 {
        return q_big * BigUint::from(q.saturating_sub(1)).pow(n as u32 - 1);
    }
    if edges as usize == n * (n - 1) / 2 {
        return (0..n as u32)
            .map(|i| BigUint::from(q.saturating_sub(i)))
            .product();
    }
    if let Some(hit) = memo.get(&adj) {
        return hit.clone();
    }
    // Contract along an edge at a vertex of least positive degree.
    let u = (0..n)
        .filter(|&v| adj[v] != 0)
        .min_by_key(|&v| adj[v].count_ones())
        .expect("graph has edges");
    let v = adj[u].trailing_zeros() as usize;
    let mut deleted = adj.clone();
    deleted[u] &= !(1 << v);
    deleted[v] &= !(1 << u);
    let mut merged = adj.clone();
    merged[u] |= merged[v];
    merged[u] &= !((1 << u) | (1 << v));
    for (w, row) in merged.iter_mut().enumerate() {
        if *row & (1 << v) != 0 && w != u {
            *row |= 1 << u;
        }
    }
    let contracted = remove_vertex(&merged, v);
    let result = count(deleted, q, memo) - count(contracted, q, memo);
    memo.insert(adj, result.clone());
    result
}

fn components(adj: &[u64]) -> Vec<u64> {
    let n = adj.len();
    let mut seen = 0u64;
    let mut out = Vec::new();
    for s in 0..n {
        if seen & (1 << s) != 0 {
            continue;
        }
        let mut comp = 1u64 << s;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        seen |= comp;
        out.push(comp);
    }
    out
}

fn induced(adj: &[u64], mask: u64) -> Vec<u64> {
    let keep: Vec<usize> = (0..adj.len()).filter(|&v| mask & (1 << v) != 0).collect();
    keep.iter()
        .map(|&v| {
            keep.iter()
                .enumerate()
                .filter(|&(_, &w)| adj[v] & (1 << w) != 0)
                .fold(0u64, |m, (i, _)| m | (1 << i))
        })
        .collect()
}

fn remove_vertex(adj: &[u64], v: usize) -> Vec<u64> {
    let low = (1u64 << v) - 1;
    adj.iter()
        .enumerate()
        .filter(|&(w, _)| w != v)
        .map(|(_, &m)| (m & low) | ((m >> 1) & !low))
        .collect()
}
