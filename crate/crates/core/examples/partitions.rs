//! The vertex partitions the embedders are built on.
//!
//! ```bash
//! cargo run --example partitions
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use unitdist::graph::{decompose_degree2, random, Graph};
use unitdist::partition::{
    check_refined, lovasz_partition_with, refined_caps, refined_partition, split_path_cycle, InitialPartition,
};

fn main() -> unitdist::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);

    let g = random::near_regular(30, 7, &mut rng);
    let caps = [3, 2, 1];
    let (p, stats) = lovasz_partition_with(&g, &caps, InitialPartition::RoundRobin)?;
    println!(
        "Lovász split of a 7-regular graph with caps {caps:?}: {} moves, potential {} -> {}",
        stats.moves, stats.initial_potential, stats.final_potential
    );
    for (i, part) in p.parts.iter().enumerate() {
        let sub = g.induced(part);
        println!("  part {i}: {} vertices, max degree {}", part.len(), sub.max_degree());
    }

    for d in [6, 7] {
        let g = random::near_regular(40, d, &mut rng);
        let p = refined_partition(&g, d)?;
        println!(
            "refined partition, d = {d}, caps {:?}: {:?}",
            refined_caps(d),
            check_refined(&g, d, &p)
        );
    }

    let mut lines = Graph::path(11).disjoint_union(&Graph::cycle(7));
    lines = lines.disjoint_union(&Graph::cycle(4));
    for comp in decompose_degree2(&lines)? {
        match split_path_cycle(&comp) {
            Ok(s) => println!("{comp:?}: A = {:?}, B edges = {:?}", s.a, s.b_edges),
            Err(err) => println!("{comp:?}: {err}"),
        }
    }
    Ok(())
}
