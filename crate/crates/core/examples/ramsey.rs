//! Every red/blue colouring of `K_s` has a colour class that embeds on a
//! small sphere, and one that embeds in a small Euclidean space.
//!
//! ```bash
//! cargo run --release --example ramsey
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use unitdist::graph::Graph;
use unitdist::ramsey::{
    euclidean_dim, ramsey_euclidean, ramsey_exhaustive, ramsey_spherical, spherical_dim, witness, Coloring, WitnessMode,
};

fn main() -> unitdist::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);

    let red = Graph::cycle(5);
    let col = Coloring::from_red_graph(&red);
    let (c, e) = ramsey_spherical(&col, &mut rng)?;
    println!("C5 red, complement blue: {c} class on S^{}", e.dim() - 1);
    let (c, e) = ramsey_euclidean(&col, &mut rng)?;
    println!("same colouring, Euclidean: {c} class in R^{}", e.dim());

    for s in 3..=8 {
        println!(
            "s = {s}: sphere dimension {}, Euclidean dimension {}",
            spherical_dim(s),
            euclidean_dim(s)
        );
    }

    for (s, mode) in [(5, WitnessMode::Spherical), (6, WitnessMode::Euclidean)] {
        let sum = ramsey_exhaustive(s, mode, 0x5EED_0001)?;
        println!(
            "all colourings of K{s} ({mode:?}): {}/{} embedded",
            sum.passed, sum.total
        );
    }

    let w = witness(WitnessMode::Spherical, 4);
    println!("witness for d = 4: {} vertices, {} edges", w.n(), w.edge_count());
    Ok(())
}
