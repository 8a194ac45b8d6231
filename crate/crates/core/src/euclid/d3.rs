use rand::Rng;

use super::{place_apexes, MAX_ATTEMPTS};
use crate::embedding::Embedding;
use crate::error::{precondition, Error, Result};
use crate::geom::Frame;
use crate::graph::{find_forbidden, peel_exact_degree3, Graph};
use crate::sphere::{embed_gp_s2_into, GpScope};
use crate::verify::certify;

/// Embeds a graph of maximum degree at most 3 without `K_{3,3}` components
/// in `R^3`.
///
/// Degree-3 vertices are peeled into an independent set `W`; the rest (max
/// degree 2) goes on the 2-sphere in general position, and each `w ∈ W` sits
/// at one of the two points at distance 1 from the circle through its three
/// neighbours.
pub fn embed_d3<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Result<Embedding> {
    if g.max_degree() > 3 {
        return Err(precondition(format!("max degree {} exceeds 3", g.max_degree())));
    }
    if find_forbidden(g, 3)?.k33.is_some() {
        return Err(Error::K33Excluded);
    }
    let peel = peel_exact_degree3(g)?;
    let frame = Frame::standard(3);
    for attempt in 0..MAX_ATTEMPTS {
        let mut e = Embedding::new(g.n(), 3);
        embed_gp_s2_into(g, &peel.core, &frame, GpScope::UnitDistance, &mut e, rng)?;
        if !place_apexes(g, &peel.order, 3, &mut e)? {
            continue;
        }
        certify(g, &e, false)?;
        e.meta.retries = attempt;
        e.note(format!(
            "sphere core of {} vertices, {} apex vertices",
            peel.core.len(),
            peel.order.len()
        ));
        return Ok(e);
    }
    Err(Error::ResampleExceeded {
        what: "apex placement in 3-space",
        attempts: MAX_ATTEMPTS,
    })
}
