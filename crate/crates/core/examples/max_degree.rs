//! Unit distance embeddings of bounded-degree graphs in `R^d`.
//!
//! ```bash
//! cargo run --example max_degree
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use unitdist::euclid::embed_max_degree;
use unitdist::graph::{random, Graph};
use unitdist::verify::{verify_edges, Tolerances};
use unitdist::Error;

fn main() -> unitdist::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let tol = Tolerances::default();

    let cases = [
        ("cube", Graph::cube(), 3),
        ("petersen", Graph::petersen(), 3),
        ("K5", Graph::complete(5), 4),
        ("C8(1,2)", Graph::circulant(8, &[1, 2]), 4),
        ("5-regular on 30", random::near_regular(30, 5, &mut rng), 5),
        ("8-regular on 60", random::near_regular(60, 8, &mut rng), 8),
    ];
    for (name, g, d) in cases {
        let e = embed_max_degree(&g, d, &mut rng)?;
        let rep = verify_edges(&g, &e, &tol)?;
        println!(
            "{name:>16}: n = {:>2}, Δ = {}, d = {d}, max |len - 1| = {:.1e}, min gap = {:.3}",
            g.n(),
            g.max_degree(),
            rep.max_edge_deviation,
            rep.distinct_min_gap
        );
    }

    // K_{3,3} is the one cubic graph that does not fit in 3-space.
    match embed_max_degree(&Graph::complete_bipartite(3, 3), 3, &mut rng) {
        Err(Error::K33Excluded) => println!("{:>16}: excluded in d = 3", "K3,3"),
        other => println!("unexpected: {other:?}"),
    }
    let e = embed_max_degree(&Graph::complete_bipartite(3, 3), 4, &mut rng)?;
    println!("{:>16}: embeds in d = {}", "K3,3", e.dim());
    Ok(())
}
