//! Embeddings on the sphere of radius `1/√2`, where orthogonal points are at
//! distance 1.
//!
//! ```bash
//! cargo run --example sphere_max_degree
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use unitdist::geom::SPHERE_RADIUS;
use unitdist::graph::{random, Graph};
use unitdist::sphere::embed_max_degree_sphere;
use unitdist::verify::{verify_edges, verify_sphere, Tolerances};

fn main() -> unitdist::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let tol = Tolerances::default();

    for (name, g, d) in [
        ("C7", Graph::cycle(7), 3),
        ("cube", Graph::cube(), 4),
        ("petersen", Graph::petersen(), 4),
        ("4-regular on 40", random::near_regular(40, 4, &mut rng), 5),
        ("6-regular on 50", random::near_regular(50, 6, &mut rng), 7),
    ] {
        let e = embed_max_degree_sphere(&g, d, &mut rng)?;
        let edges = verify_edges(&g, &e, &tol)?;
        let sphere = verify_sphere(&e, SPHERE_RADIUS, &tol);
        println!(
            "{name:>16}: S^{} in R^{d}, edge dev {:.1e}, radius dev {:.1e}",
            d - 1,
            edges.max_edge_deviation,
            sphere.sphere_deviation.unwrap_or(0.0)
        );
    }

    let e = embed_max_degree_sphere(&Graph::cycle(5), 2, &mut rng);
    println!(
        "C5 on the circle: {}",
        e.map(|_| "ok".to_string()).unwrap_or_else(|err| err.to_string())
    );
    Ok(())
}
