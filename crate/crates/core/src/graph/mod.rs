//! Simple undirected graphs on the dense vertex set `0..n`, plus the
//! structural routines the embedders branch on: degree peeling,
//! path/cycle decomposition, forbidden-subgraph search and matchings in the
//! complement.

mod forbidden;
mod matching;
mod peel;
pub mod random;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{precondition, Result};

pub use forbidden::{find_forbidden, FindingSet, NearClique, SEARCH_NODE_LIMIT};
pub use matching::complement_matching;
pub use peel::{decompose_degree2, degeneracy, peel_exact_degree3, peel_min_degree, Component, PeelResult};

/// Simple undirected graph. Adjacency sets are kept sorted so that every
/// traversal is deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds the edge `uv`. Re-adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(precondition(format!("edge ({u}, {v}) out of range for n = {n}")));
        }
        if u == v {
            return Err(precondition(format!("self-loop at {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n() && v < self.n() {
            self.adj[u].remove(&v);
            self.adj[v].remove(&u);
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.range(u + 1..).map(move |&v| (u, v)))
            .collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// Number of neighbours of `v` inside `set`.
    pub fn degree_into(&self, v: usize, set: &BTreeSet<usize>) -> usize {
        self.adj[v].iter().filter(|u| set.contains(u)).count()
    }

    /// Induced subgraph on `verts`; vertex `i` of the result is `verts[i]`.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut h = Graph::new(verts.len());
        for (i, &v) in verts.iter().enumerate() {
            for &u in &self.adj[v] {
                let j = index[u];
                if j != usize::MAX && j > i {
                    h.adj[i].insert(j);
                    h.adj[j].insert(i);
                }
            }
        }
        h
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut h = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    h.adj[u].insert(v);
                    h.adj[v].insert(u);
                }
            }
        }
        h
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|s| s.iter().map(|&u| u + off).collect()));
        Graph { adj }
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.adj[v - 1].insert(v);
            g.adj[v].insert(v - 1);
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.adj[0].insert(n - 1);
        g.adj[n - 1].insert(0);
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        g
    }

    /// Circulant graph `C_n(offsets)`: `i ~ i ± k (mod n)` for each offset.
    pub fn circulant(n: usize, offsets: &[usize]) -> Graph {
        let mut g = Graph::new(n);
        for i in 0..n {
            for &k in offsets {
                let j = (i + k) % n;
                if j != i {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        g
    }

    /// The 3-cube `Q_3`, vertices as bit strings.
    pub fn cube() -> Graph {
        let mut g = Graph::new(8);
        for v in 0..8usize {
            for b in 0..3 {
                let u = v ^ (1 << b);
                g.adj[v].insert(u);
            }
        }
        g
    }

    pub fn petersen() -> Graph {
        let mut g = Graph::new(10);
        for i in 0..5 {
            let outer = [(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)];
            for (u, v) in outer {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        g
    }

    /// Graph of the `d`-dimensional cross-polytope: `K_{2d}` minus a perfect
    /// matching `{i, i + d}`.
    pub fn cross_polytope(d: usize) -> Graph {
        let mut g = Graph::complete(2 * d);
        for i in 0..d {
            g.remove_edge(i, i + d);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// Maximum vertex degree, 0 for edgeless graphs.
pub fn max_degree(g: &Graph) -> usize {
    g.max_degree()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn max_degree_examples() {
        assert_eq!(max_degree(&Graph::new(3)), 0);
        assert_eq!(max_degree(&Graph::cycle(5)), 2);
        assert_eq!(max_degree(&Graph::complete(4)), 3);
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        let mut g = Graph::new(3);
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 3).is_err());
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 0).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn families_have_expected_sizes() {
        assert_eq!(Graph::petersen().edge_count(), 15);
        assert!((0..10).all(|v| Graph::petersen().degree(v) == 3));
        assert_eq!(Graph::cube().edge_count(), 12);
        assert_eq!(Graph::circulant(8, &[1, 2]).max_degree(), 4);
        assert_eq!(Graph::circulant(12, &[1, 2, 3]).max_degree(), 6);
        assert_eq!(Graph::circulant(12, &[1, 2, 6]).edge_count(), 30);
        assert_eq!(Graph::cross_polytope(4).edge_count(), 24);
    }

    #[test]
    fn induced_and_complement() {
        let g = Graph::cycle(5);
        let h = g.induced(&[0, 1, 2]);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
        let c = g.complement();
        assert_eq!(c.edge_count(), 5);
        assert!(c.has_edge(0, 2) && !c.has_edge(0, 1));
    }

    #[test]
    fn handshake() {
        let g = Graph::petersen().disjoint_union(&Graph::path(4));
        let deg_sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        assert_eq!(deg_sum, 2 * g.edge_count());
        assert_eq!(g.components().len(), 2);
    }
}
