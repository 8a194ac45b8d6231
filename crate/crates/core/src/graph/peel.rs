use std::collections::BTreeSet;

use super::Graph;
use crate::error::{internal, precondition, Result};

/// Outcome of a peeling run. Vertex ids refer to the input graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelResult {
    /// Removed vertices, in removal order.
    pub order: Vec<usize>,
    /// Remaining vertices, sorted.
    pub core: Vec<usize>,
    /// `removed_neighbors[i]` is the neighbourhood of `order[i]` among the
    /// vertices still present when it was removed.
    pub removed_neighbors: Vec<Vec<usize>>,
}

impl PeelResult {
    pub fn core_graph(&self, g: &Graph) -> Graph {
        g.induced(&self.core)
    }

    pub fn core_is_empty(&self) -> bool {
        self.core.is_empty()
    }
}

fn peel_by<F>(g: &Graph, mut removable: F) -> PeelResult
where
    F: FnMut(usize) -> bool,
{
    let n = g.n();
    let mut alive: BTreeSet<usize> = (0..n).collect();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut order = Vec::new();
    let mut removed_neighbors = Vec::new();
    while let Some(v) = alive.iter().copied().find(|&v| removable(deg[v])) {
        alive.remove(&v);
        let nbrs: Vec<usize> = g.neighbors(v).iter().copied().filter(|u| alive.contains(u)).collect();
        for &u in &nbrs {
            deg[u] -= 1;
        }
        order.push(v);
        removed_neighbors.push(nbrs);
    }
    PeelResult {
        order,
        core: alive.into_iter().collect(),
        removed_neighbors,
    }
}

/// Removes vertices of current degree at most `t` (smallest id first) until
/// none is left. The core is empty iff `g` is `t`-degenerate.
pub fn peel_min_degree(g: &Graph, t: usize) -> PeelResult {
    peel_by(g, |d| d <= t)
}

/// Removes vertices of current degree exactly 3 (smallest id first). On a
/// graph of maximum degree 3 the removed set is independent, every removed
/// vertex keeps its three neighbours in the core, and the core has maximum
/// degree at most 2.
pub fn peel_exact_degree3(g: &Graph) -> Result<PeelResult> {
    if g.max_degree() > 3 {
        return Err(precondition(format!("max degree {} > 3", g.max_degree())));
    }
    let res = peel_by(g, |d| d == 3);
    let core: BTreeSet<usize> = res.core.iter().copied().collect();
    for (i, &w) in res.order.iter().enumerate() {
        if res.removed_neighbors[i].len() != 3 || !g.neighbors(w).iter().all(|u| core.contains(u)) {
            return Err(internal(format!(
                "peeled vertex {w} does not keep 3 neighbours in the core"
            )));
        }
    }
    if res.core.iter().any(|&v| g.degree_into(v, &core) > 2) {
        return Err(internal("core of degree-3 peeling has a vertex of degree > 2"));
    }
    Ok(res)
}

/// Smallest `t` such that `g` is `t`-degenerate.
pub fn degeneracy(g: &Graph) -> usize {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut best = 0;
    for _ in 0..n {
        let v = (0..n).filter(|&v| alive[v]).min_by_key(|&v| deg[v]).unwrap();
        best = best.max(deg[v]);
        alive[v] = false;
        for &u in g.neighbors(v) {
            if alive[u] {
                deg[u] -= 1;
            }
        }
    }
    best
}

/// A connected component of a graph of maximum degree at most 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Component {
    /// Vertex sequence of a path; a single vertex is a path of length 0.
    Path(Vec<usize>),
    /// Vertex sequence of a cycle, the closing edge joins last and first.
    Cycle(Vec<usize>),
}

impl Component {
    pub fn vertices(&self) -> &[usize] {
        match self {
            Component::Path(v) | Component::Cycle(v) => v,
        }
    }

    pub fn len(&self) -> usize {
        self.vertices().len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices().is_empty()
    }
}

/// Splits a graph of maximum degree at most 2 into its paths and cycles.
pub fn decompose_degree2(g: &Graph) -> Result<Vec<Component>> {
    if g.max_degree() > 2 {
        return Err(precondition(format!("max degree {} > 2", g.max_degree())));
    }
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let walk = |start: usize, seen: &mut Vec<bool>| {
        let mut seq = vec![start];
        seen[start] = true;
        let mut cur = start;
        while let Some(&next) = g.neighbors(cur).iter().find(|&&u| !seen[u]) {
            seen[next] = true;
            seq.push(next);
            cur = next;
        }
        seq
    };
    for v in 0..n {
        if !seen[v] && g.degree(v) <= 1 {
            out.push(Component::Path(walk(v, &mut seen)));
        }
    }
    for v in 0..n {
        if !seen[v] {
            out.push(Component::Cycle(walk(v, &mut seen)));
        }
    }
    out.sort_by_key(|c| c.vertices().iter().copied().min());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn peel_path_empties() {
        let r = peel_min_degree(&Graph::path(4), 1);
        assert!(r.core.is_empty());
        assert_eq!(r.order.len(), 4);
    }

    #[test]
    fn peel_k4_keeps_everything() {
        let r = peel_min_degree(&Graph::complete(4), 2);
        assert!(r.order.is_empty());
        assert_eq!(r.core, vec![0, 1, 2, 3]);
    }

    #[test]
    fn peel_k4_with_pendant() {
        let mut g = Graph::complete(4).disjoint_union(&Graph::new(1));
        g.add_edge(0, 4).unwrap();
        let r = peel_min_degree(&g, 2);
        assert_eq!(r.order, vec![4]);
        assert_eq!(r.removed_neighbors, vec![vec![0]]);
        assert_eq!(r.core, vec![0, 1, 2, 3]);
    }

    #[test]
    fn degree3_peel_examples() {
        let r = peel_exact_degree3(&Graph::cycle(6)).unwrap();
        assert!(r.order.is_empty());
        assert_eq!(r.core.len(), 6);

        let r = peel_exact_degree3(&Graph::complete(4)).unwrap();
        assert_eq!(r.order, vec![0]);

        let q = Graph::cube();
        let r = peel_exact_degree3(&q).unwrap();
        assert_eq!(r.order.len(), 4);
        for (i, &a) in r.order.iter().enumerate() {
            for &b in &r.order[i + 1..] {
                assert!(!q.has_edge(a, b));
            }
        }
        assert!(r.core_graph(&q).max_degree() <= 2);
    }

    #[test]
    fn degree3_peel_rejects_degree4() {
        assert!(peel_exact_degree3(&Graph::complete(5)).is_err());
    }

    #[test]
    fn decompose_examples() {
        let g = Graph::cycle(4).disjoint_union(&Graph::path(3));
        let comps = decompose_degree2(&g).unwrap();
        assert_eq!(
            comps,
            vec![Component::Cycle(vec![0, 1, 2, 3]), Component::Path(vec![4, 5, 6])]
        );

        let comps = decompose_degree2(&Graph::new(2)).unwrap();
        assert_eq!(comps, vec![Component::Path(vec![0]), Component::Path(vec![1])]);

        let comps = decompose_degree2(&Graph::cycle(3)).unwrap();
        assert_eq!(comps, vec![Component::Cycle(vec![0, 1, 2])]);

        assert!(decompose_degree2(&Graph::complete(4)).is_err());
    }

    #[test]
    fn degeneracy_small() {
        assert_eq!(degeneracy(&Graph::path(5)), 1);
        assert_eq!(degeneracy(&Graph::cycle(5)), 2);
        assert_eq!(degeneracy(&Graph::complete(6)), 5);
        assert_eq!(degeneracy(&Graph::cube()), 3);
    }
}
