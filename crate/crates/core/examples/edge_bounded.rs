//! Graphs with few edges: at most 3, 8, 14, 20, 27, ... edges embed in
//! dimension 2, 3, 4, 5, 6, ...
//!
//! ```bash
//! cargo run --example edge_bounded
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use unitdist::euclid::{edge_bound, embed_edge_bounded, Mode};
use unitdist::geom::glued_simplices;
use unitdist::graph::{random, Graph};
use unitdist::verify::{verify_edges, Tolerances};
use unitdist::Embedding;

fn main() -> unitdist::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let tol = Tolerances::default();

    for d in 2..=7 {
        println!("g({d}) = {}", edge_bound(d).unwrap());
    }

    // K6 minus an edge: two regular simplices sharing a facet.
    let mut k6e = Graph::complete(6);
    k6e.remove_edge(4, 5);
    let fixture = Embedding::from_points(4, glued_simplices(4)?);
    let rep = verify_edges(&k6e, &fixture, &tol)?;
    let apart = (fixture.point(4) - fixture.point(5)).norm();
    println!("K6 - e: dev {:.1e}, apexes {apart:.4} apart", rep.max_edge_deviation);

    for d in [4, 5, 6] {
        let m = edge_bound(d).unwrap();
        let g = random::with_edges(d + 3, m, &mut rng);
        let e = embed_edge_bounded(&g, d, Mode::Euclid, &mut rng)?;
        let rep = verify_edges(&g, &e, &tol)?;
        print!(
            "d = {d}: {} vertices, {m} edges, dev {:.1e}",
            g.n(),
            rep.max_edge_deviation
        );
        match embed_edge_bounded(&g, d, Mode::Sphere, &mut rng) {
            Ok(_) => println!(", also on the sphere"),
            Err(err) => println!(", not on the sphere: {err}"),
        }
    }

    let err = embed_edge_bounded(&Graph::complete(6), 4, Mode::Euclid, &mut rng).unwrap_err();
    println!("K6 in d = 4: {err}");
    Ok(())
}
