use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use unitdist::euclid::{edge_bound, embed_edge_bounded, embed_max_degree, Mode};
use unitdist::geom::SPHERE_RADIUS;
use unitdist::graph::{decompose_degree2, degeneracy, find_forbidden, random, Component, Graph};
use unitdist::io::{parse_coloring, parse_coords, parse_graph, write_coloring, write_coords, write_graph};
use unitdist::partition::{check_refined, lovasz_partition, refined_partition, split_path_cycle};
use unitdist::ramsey::{euclidean_dim, ramsey_euclidean, ramsey_spherical, spherical_dim, Coloring};
use unitdist::sphere::{embed_degenerate_sphere, embed_max_degree_sphere};
use unitdist::verify::{verify_edges, verify_sphere, Tolerances};
use unitdist::{Embedding, Error};

/// Graph on `n` vertices from a list of candidate edges, skipping loops and
/// any edge that would push a degree above `cap`.
fn capped(n: usize, cands: &[(usize, usize)], cap: usize) -> Graph {
    let mut g = Graph::new(n);
    for &(u, v) in cands {
        let (u, v) = (u % n, v % n);
        if u != v && !g.has_edge(u, v) && g.degree(u) < cap && g.degree(v) < cap {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

fn graph_with_cap(max_n: usize, cap: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(move |n| prop::collection::vec((0..n, 0..n), 0..=n * cap).prop_map(move |c| capped(n, &c, cap)))
}

fn assert_unit(g: &Graph, e: &Embedding, dim: usize, sphere: bool) {
    assert_eq!(e.dim(), dim);
    let tol = Tolerances::default();
    let rep = verify_edges(g, e, &tol).unwrap();
    assert!(rep.pass, "{rep:?}");
    if sphere {
        let s = verify_sphere(e, SPHERE_RADIUS, &tol);
        assert!(s.pass, "{s:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph_text_round_trip(g in graph_with_cap(20, 6)) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn coloring_text_round_trip(s in 1usize..9, bits in any::<u64>()) {
        let col = Coloring::from_index(s, bits);
        prop_assert_eq!(parse_coloring(&write_coloring(&col)).unwrap(), col);
    }

    #[test]
    fn coords_round_trip_bit_exact(xs in prop::collection::vec(-1e3f64..1e3, 1..30)) {
        let d = 3;
        let pts: Vec<_> = xs.chunks(1).map(|c| unitdist::geom::Point::from_vec(vec![c[0], -c[0] / 7.0, c[0] * 1e-9])).collect();
        let e = Embedding::from_points(d, pts);
        let back = parse_coords(&write_coords(&e)).unwrap();
        for v in 0..e.len() {
            prop_assert_eq!(back.point(v), e.point(v));
        }
    }

    #[test]
    fn max_degree_embeds_in_d(d in 1usize..=6, seed in any::<u64>(), (n, cands) in (1usize..40).prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 0..200)))) {
        let g = capped(n, &cands, d);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        match embed_max_degree(&g, d, &mut rng) {
            Ok(e) => assert_unit(&g, &e, d, false),
            Err(Error::K33Excluded) => prop_assert!(d == 3 && find_forbidden(&g, 3).unwrap().k33.is_some()),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn sphere_max_degree_embeds(d in 2usize..=6, seed in any::<u64>(), (n, cands) in (1usize..40).prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 0..200)))) {
        let g = capped(n, &cands, d - 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = embed_max_degree_sphere(&g, d, &mut rng).unwrap();
        assert_unit(&g, &e, d, true);
    }

    #[test]
    fn degenerate_embeds_on_sphere(d in 2usize..=7, n in 1usize..40, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random::degenerate(n, d - 2, &mut rng);
        prop_assert!(degeneracy(&g) <= d - 2);
        let e = embed_degenerate_sphere(&g, d, &mut rng).unwrap();
        assert_unit(&g, &e, d, true);
    }

    #[test]
    fn edge_bounded_embeds(d in 2usize..=6, n in 2usize..14, seed in any::<u64>(), dense in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bound = edge_bound(d).unwrap();
        let m = if dense { bound } else { bound / 2 }.min(n * (n - 1) / 2);
        let g = random::with_edges(n, m, &mut rng);
        let e = embed_edge_bounded(&g, d, Mode::Euclid, &mut rng).unwrap();
        assert_unit(&g, &e, d, false);
        match embed_edge_bounded(&g, d, Mode::Sphere, &mut rng) {
            Ok(e) => assert_unit(&g, &e, d, true),
            Err(Error::ForbiddenSubgraphForSphere(_)) => prop_assert!(find_forbidden(&g, d).unwrap().any_sphere_obstruction()),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn too_many_edges_rejected(d in 2usize..=5, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bound = edge_bound(d).unwrap();
        let g = random::with_edges(bound + 2, bound + 1, &mut rng);
        let rejected = matches!(embed_edge_bounded(&g, d, Mode::Euclid, &mut rng), Err(Error::TooManyEdges { .. }));
        prop_assert!(rejected);
    }

    #[test]
    fn lovasz_meets_caps(g in graph_with_cap(30, 7), split in prop::collection::vec(0usize..3, 1..4)) {
        let mut caps = split.clone();
        let need = (g.max_degree() + 1).saturating_sub(caps.len());
        for k in 0..need.saturating_sub(caps.iter().sum()) {
            let slots = caps.len();
            caps[k % slots] += 1;
        }
        let p = lovasz_partition(&g, &caps).unwrap();
        prop_assert!(p.satisfies_caps(&g));
        let mut all = p.parts.concat();
        all.sort_unstable();
        prop_assert_eq!(all, (0..g.n()).collect::<Vec<_>>());
    }

    #[test]
    fn refined_clauses_hold(d in 4usize..=9, n in 5usize..50, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random::near_regular(n, d, &mut rng);
        let p = refined_partition(&g, d).unwrap();
        prop_assert_eq!(check_refined(&g, d, &p), Ok(()));
    }

    #[test]
    fn path_cycle_split_leaves_short_pieces(g in graph_with_cap(40, 2), picks in prop::collection::vec(any::<bool>(), 20)) {
        for comp in decompose_degree2(&g).unwrap() {
            let long_path = matches!(comp, Component::Path(_)) && comp.len() >= 5;
            let splittable_cycle = matches!(comp, Component::Cycle(_)) && comp.len() != 4;
            if !(long_path || splittable_cycle) {
                continue;
            }
            let s = split_path_cycle(&comp).unwrap();
            let mut all = s.a.clone();
            all.extend(s.b());
            all.sort_unstable();
            let mut verts = comp.vertices().to_vec();
            verts.sort_unstable();
            prop_assert_eq!(&all, &verts);
            let removed: Vec<usize> = s
                .b_edges
                .iter()
                .enumerate()
                .map(|(i, &(x, y))| {
                    assert!(g.has_edge(x, y));
                    if picks[i % picks.len()] { x } else { y }
                })
                .collect();
            let rest: Vec<usize> = verts.iter().copied().filter(|v| !removed.contains(v)).collect();
            for piece in g.induced(&rest).components() {
                prop_assert!(piece.len() <= 4, "piece {:?} of {:?}", piece, comp);
            }
        }
    }

    #[test]
    fn ramsey_spherical_any_colouring(s in 2usize..=7, bits in any::<u64>(), seed in any::<u64>()) {
        let col = Coloring::from_index(s, bits);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (c, e) = ramsey_spherical(&col, &mut rng).unwrap();
        assert_unit(&col.graph(c), &e, spherical_dim(s), true);
    }

    #[test]
    fn ramsey_euclidean_any_colouring(s in 2usize..=8, bits in any::<u64>(), seed in any::<u64>()) {
        let col = Coloring::from_index(s, bits);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (c, e) = ramsey_euclidean(&col, &mut rng).unwrap();
        assert_unit(&col.graph(c), &e, euclidean_dim(s), false);
    }

    #[test]
    fn embedders_are_deterministic(d in 3usize..=6, n in 2usize..30, seed in any::<u64>()) {
        let g = random::near_regular(n, d, &mut ChaCha8Rng::seed_from_u64(seed));
        let a = embed_max_degree(&g, d, &mut ChaCha8Rng::seed_from_u64(seed));
        let b = embed_max_degree(&g, d, &mut ChaCha8Rng::seed_from_u64(seed));
        match (a, b) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
            (Err(a), Err(b)) => prop_assert_eq!(a.to_string(), b.to_string()),
            _ => prop_assert!(false, "runs disagree"),
        }
    }
}
