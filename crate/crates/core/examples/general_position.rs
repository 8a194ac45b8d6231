//! Paths and cycles on the 2-sphere with no vertex at distance 1 from three
//! others and no four vertices on a circle, apart from the antipodal pairs
//! that 4-cycles force.
//!
//! ```bash
//! cargo run --release --example general_position
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use unitdist::geom::Frame;
use unitdist::graph::Graph;
use unitdist::sphere::embed_gp_s2;
use unitdist::verify::{verify_gp, Tolerances};

fn main() -> unitdist::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let g = Graph::cycle(4)
        .disjoint_union(&Graph::cycle(7))
        .disjoint_union(&Graph::path(6));

    let (e, cert) = embed_gp_s2(&g, &Frame::standard(3), &mut rng)?;
    println!("{} vertices after {} attempt(s)", g.n(), cert.attempts);
    println!("antipodal pairs: {:?}", cert.antipodal_pairs);
    println!(
        "unit margin {:.3e}, volume margin {:.3e}",
        cert.unit_margin.unwrap_or(f64::NAN),
        cert.volume_margin.unwrap_or(f64::NAN)
    );

    let rep = verify_gp(&e, &cert.antipodal_pairs, &Tolerances::default());
    println!(
        "independent check: pass = {}, findings = {}",
        rep.pass,
        rep.gp_findings.len()
    );
    Ok(())
}
