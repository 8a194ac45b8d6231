//! Seeded random graph families used by the examples, the property tests
//! and the acceptance suite.

use rand::seq::SliceRandom;
use rand::Rng;

use super::Graph;

/// Random graph on `n` vertices with maximum degree at most `max_deg`:
/// candidate edges are visited in random order and kept while both ends
/// have spare degree. `density` in `[0, 1]` thins the candidate list.
pub fn bounded_degree<R: Rng + ?Sized>(n: usize, max_deg: usize, density: f64, rng: &mut R) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let mut g = Graph::new(n);
    for (u, v) in pairs {
        if g.degree(u) < max_deg && g.degree(v) < max_deg && rng.random::<f64>() < density {
            g.add_edge(u, v).expect("valid pair");
        }
    }
    g
}

/// Nearly `deg`-regular graph: repeated random pairing of free stubs,
/// falling back to a greedy completion.
pub fn near_regular<R: Rng + ?Sized>(n: usize, deg: usize, rng: &mut R) -> Graph {
    let mut best = Graph::new(n);
    for _ in 0..20 {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, deg)).collect();
        stubs.shuffle(rng);
        let mut g = Graph::new(n);
        for pair in stubs.chunks(2) {
            if let [u, v] = *pair {
                if u != v {
                    let _ = g.add_edge(u, v);
                }
            }
        }
        let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        pairs.shuffle(rng);
        for (u, v) in pairs {
            if g.degree(u) < deg && g.degree(v) < deg {
                let _ = g.add_edge(u, v);
            }
        }
        if g.edge_count() > best.edge_count() {
            best = g;
        }
        if best.edge_count() * 2 == n * deg {
            break;
        }
    }
    best
}

/// Random `k`-degenerate graph: each new vertex picks at most `k`
/// neighbours among the earlier ones, then vertex labels are shuffled.
pub fn degenerate<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut g = Graph::new(n);
    for i in 1..n {
        let mut earlier: Vec<usize> = (0..i).collect();
        earlier.shuffle(rng);
        let take = rng.random_range(0..=k.min(i));
        for &j in &earlier[..take] {
            g.add_edge(perm[i], perm[j]).expect("valid pair");
        }
    }
    g
}

/// Uniformly random graph with exactly `m` edges on `n` vertices
/// (`m` is clipped to `n(n-1)/2`).
pub fn with_edges<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let mut g = Graph::new(n);
    for &(u, v) in pairs.iter().take(m) {
        g.add_edge(u, v).expect("valid pair");
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::peel_min_degree;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_respect_their_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            assert!(bounded_degree(30, 4, 1.0, &mut rng).max_degree() <= 4);
            assert!(near_regular(20, 5, &mut rng).max_degree() <= 5);
            assert!(peel_min_degree(&degenerate(25, 3, &mut rng), 3).core.is_empty());
            assert_eq!(with_edges(8, 14, &mut rng).edge_count(), 14);
        }
    }
}
