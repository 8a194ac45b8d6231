//! `k`-degenerate graphs on the sphere in dimension `k + 2`: peel vertices
//! of degree at most `k`, then put them back one at a time orthogonal to
//! their placed neighbours.
//!
//! ```bash
//! cargo run --example degenerate
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use unitdist::graph::{degeneracy, random, Graph};
use unitdist::sphere::embed_degenerate_sphere;
use unitdist::verify::{verify_edges, Tolerances};

fn main() -> unitdist::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);

    let mut planar_ish = Graph::cube();
    planar_ish.add_edge(0, 2)?;
    let cases = [
        ("path P12", Graph::path(12)),
        ("cube + chord", planar_ish),
        ("random 2-degenerate", random::degenerate(40, 2, &mut rng)),
        ("random 4-degenerate", random::degenerate(80, 4, &mut rng)),
    ];
    for (name, g) in cases {
        let k = degeneracy(&g);
        let d = k + 2;
        let e = embed_degenerate_sphere(&g, d, &mut rng)?;
        let rep = verify_edges(&g, &e, &Tolerances::default())?;
        println!(
            "{name:>20}: {k}-degenerate, n = {:>2}, m = {:>3}, on S^{} (dev {:.1e})",
            g.n(),
            g.edge_count(),
            d - 1,
            rep.max_edge_deviation
        );
    }

    match embed_degenerate_sphere(&Graph::complete(5), 4, &mut rng) {
        Ok(_) => println!("unexpected success"),
        Err(err) => println!("{:>20}: {err}", "K5 in d = 4"),
    }
    Ok(())
}
