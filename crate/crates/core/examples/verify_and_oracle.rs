//! Checking an embedding, and cross-checking with a least-squares solver
//! that knows nothing about the constructions.
//!
//! ```bash
//! cargo run --example verify_and_oracle
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use unitdist::euclid::embed_max_degree;
use unitdist::graph::Graph;
use unitdist::io::{parse_coords, write_coords};
use unitdist::verify::{lsq_realize, verify_edges, Tolerances};

fn main() -> unitdist::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let g = Graph::petersen();

    let e = embed_max_degree(&g, 3, &mut rng)?;
    let text = write_coords(&e);
    print!("{text}");
    let back = parse_coords(&text)?;
    println!("report\n{}", verify_edges(&g, &back, &Tolerances::default())?);

    match lsq_realize(&g, 3, &mut rng, 20, 20_000) {
        Some(x) => println!("least squares also finds a realization in R^{}", x.dim()),
        None => println!("least squares found nothing"),
    }
    // K4 needs 3 dimensions; the solver should fail in the plane.
    let k4 = Graph::complete(4);
    println!(
        "K4 in the plane by least squares: {}",
        lsq_realize(&k4, 2, &mut rng, 10, 5_000).is_some()
    );
    Ok(())
}
