use petgraph::algo::maximum_matching;
use petgraph::graph::{NodeIndex, UnGraph};

use super::Graph;

/// `k` pairwise disjoint non-adjacent vertex pairs of `g`, i.e. a matching of
/// size `k` in the complement, if one exists. Pairs are `(u, v)` with
/// `u < v`, sorted.
pub fn complement_matching(g: &Graph, k: usize) -> Option<Vec<(usize, usize)>> {
    if k == 0 {
        return Some(Vec::new());
    }
    let comp = g.complement();
    let mut pg: UnGraph<(), ()> = UnGraph::with_capacity(comp.n(), comp.edge_count());
    let nodes: Vec<NodeIndex> = (0..comp.n()).map(|_| pg.add_node(())).collect();
    for (u, v) in comp.edges() {
        pg.add_edge(nodes[u], nodes[v], ());
    }
    let m = maximum_matching(&pg);
    let mut pairs: Vec<(usize, usize)> = m
        .edges()
        .map(|(a, b)| {
            let (a, b) = (a.index(), b.index());
            (a.min(b), a.max(b))
        })
        .collect();
    if pairs.len() < k {
        return None;
    }
    pairs.sort_unstable();
    pairs.truncate(k);
    Some(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_complement_is_perfect_matching() {
        assert_eq!(complement_matching(&Graph::cycle(4), 2), Some(vec![(0, 2), (1, 3)]));
    }

    #[test]
    fn k4_has_no_complement_edge() {
        assert_eq!(complement_matching(&Graph::complete(4), 1), None);
        assert_eq!(complement_matching(&Graph::complete(4), 0), Some(vec![]));
    }

    #[test]
    fn petersen_complement_perfect_matching() {
        let g = Graph::petersen();
        let pairs = complement_matching(&g, 5).unwrap();
        let mut used = [false; 10];
        for &(u, v) in &pairs {
            assert!(!g.has_edge(u, v));
            assert!(!used[u] && !used[v]);
            used[u] = true;
            used[v] = true;
        }
        assert!(used.iter().all(|&b| b));
    }
}
