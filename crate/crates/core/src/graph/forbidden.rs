use std::collections::BTreeSet;

use super::Graph;
use crate::error::{Error, Result};

/// Upper bound on backtracking nodes before `find_forbidden` gives up.
pub const SEARCH_NODE_LIMIT: u64 = 10_000_000;

/// A copy of `K_{d+2} - K_3`: every pair of `vertices` is an edge except
/// possibly the three pairs inside `missing`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearClique {
    pub vertices: Vec<usize>,
    pub missing: [usize; 3],
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FindingSet {
    /// Vertex set of a `K_{d+1}`.
    pub clique: Option<Vec<usize>>,
    /// A `K_{d+2} - K_3` subgraph.
    pub near_clique: Option<NearClique>,
    /// A connected component isomorphic to `K_{3,3}`.
    pub k33: Option<Vec<usize>>,
}

impl FindingSet {
    pub fn any_sphere_obstruction(&self) -> bool {
        self.clique.is_some() || self.near_clique.is_some()
    }
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    nodes: u64,
}

impl CliqueSearch<'_> {
    /// Finds a clique of exactly `size` vertices among `cands`.
    fn find(&mut self, size: usize, cands: &[usize]) -> Result<Option<Vec<usize>>> {
        let mut chosen = Vec::with_capacity(size);
        if self.extend(size, cands, &mut chosen)? {
            Ok(Some(chosen))
        } else {
            Ok(None)
        }
    }

    fn extend(&mut self, size: usize, cands: &[usize], chosen: &mut Vec<usize>) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > SEARCH_NODE_LIMIT {
            return Err(Error::DidNotDecide(SEARCH_NODE_LIMIT));
        }
        if chosen.len() == size {
            return Ok(true);
        }
        if chosen.len() + cands.len() < size {
            return Ok(false);
        }
        for (i, &v) in cands.iter().enumerate() {
            let next: Vec<usize> = cands[i + 1..]
                .iter()
                .copied()
                .filter(|&u| self.g.has_edge(u, v))
                .collect();
            chosen.push(v);
            if self.extend(size, &next, chosen)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }

    /// Searches cliques of `size` among `cands` for one whose common
    /// neighbourhood has at least 3 vertices.
    fn find_with_common(
        &mut self,
        size: usize,
        cands: &[usize],
        chosen: &mut Vec<usize>,
    ) -> Result<Option<[usize; 3]>> {
        self.nodes += 1;
        if self.nodes > SEARCH_NODE_LIMIT {
            return Err(Error::DidNotDecide(SEARCH_NODE_LIMIT));
        }
        if chosen.len() == size {
            let common: Vec<usize> = (0..self.g.n())
                .filter(|u| !chosen.contains(u) && chosen.iter().all(|&c| self.g.has_edge(c, *u)))
                .take(3)
                .collect();
            return Ok((common.len() == 3).then(|| [common[0], common[1], common[2]]));
        }
        if chosen.len() + cands.len() < size {
            return Ok(None);
        }
        for (i, &v) in cands.iter().enumerate() {
            let next: Vec<usize> = cands[i + 1..]
                .iter()
                .copied()
                .filter(|&u| self.g.has_edge(u, v))
                .collect();
            chosen.push(v);
            if let Some(t) = self.find_with_common(size, &next, chosen)? {
                return Ok(Some(t));
            }
            chosen.pop();
        }
        Ok(None)
    }
}

fn k33_component(g: &Graph) -> Option<Vec<usize>> {
    g.components().into_iter().find(|c| {
        if c.len() != 6 || c.iter().any(|&v| g.degree(v) != 3) {
            return false;
        }
        // 3-regular on 6 vertices: K_{3,3} iff some vertex's neighbourhood is
        // independent and shared by the other two non-neighbours.
        let v = c[0];
        let side: BTreeSet<usize> = g.neighbors(v).clone();
        let other: Vec<usize> = c.iter().copied().filter(|u| !side.contains(u)).collect();
        other.iter().all(|&u| g.neighbors(u) == &side)
    })
}

/// Looks for `K_{d+1}`, `K_{d+2} - K_3` and a `K_{3,3}` component.
///
/// Backtracking with degree pruning; fails with `DidNotDecide` past
/// [`SEARCH_NODE_LIMIT`] nodes.
pub fn find_forbidden(g: &Graph, d: usize) -> Result<FindingSet> {
    let mut search = CliqueSearch { g, nodes: 0 };

    let clique_cands: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= d).collect();
    let clique = search.find(d + 1, &clique_cands)?;

    // K_{d+2} - K_3 = a (d-1)-clique Q joined to 3 further vertices; members
    // of Q have degree at least (d - 2) + 3.
    let core_size = d.saturating_sub(1);
    let near_cands: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > d).collect();
    let mut chosen = Vec::new();
    let near_clique = if d == 0 {
        None
    } else {
        search
            .find_with_common(core_size, &near_cands, &mut chosen)?
            .map(|missing| {
                let mut vertices = chosen.clone();
                vertices.extend_from_slice(&missing);
                vertices.sort_unstable();
                NearClique { vertices, missing }
            })
    };

    Ok(FindingSet {
        clique,
        near_clique,
        k33: k33_component(g),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k5_at_d4() {
        let f = find_forbidden(&Graph::complete(5), 4).unwrap();
        assert_eq!(f.clique, Some(vec![0, 1, 2, 3, 4]));
        assert!(f.near_clique.is_none());
    }

    #[test]
    fn k6_minus_triangle_at_d4() {
        let mut g = Graph::complete(6);
        g.remove_edge(3, 4);
        g.remove_edge(3, 5);
        g.remove_edge(4, 5);
        let f = find_forbidden(&g, 4).unwrap();
        assert!(f.clique.is_none());
        let near = f.near_clique.unwrap();
        assert_eq!(near.vertices, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(near.missing, [3, 4, 5]);
    }

    #[test]
    fn c6_at_d3_is_clean() {
        let f = find_forbidden(&Graph::cycle(6), 3).unwrap();
        assert_eq!(f, FindingSet::default());
    }

    #[test]
    fn k33_detected_only_as_component() {
        let f = find_forbidden(&Graph::complete_bipartite(3, 3), 3).unwrap();
        assert_eq!(f.k33, Some(vec![0, 1, 2, 3, 4, 5]));
        let f = find_forbidden(&Graph::circulant(6, &[1, 2]), 3).unwrap();
        assert!(f.k33.is_none());
        let f = find_forbidden(&Graph::circulant(6, &[1, 3]), 3).unwrap();
        assert!(f.k33.is_some(), "C_6(1,3) is K_{{3,3}}");
    }
}
