//! Embeddings in `R^d`: graphs of maximum degree `d`, and graphs with few
//! edges.

mod d3;
mod edges;
mod parity;

use std::f64::consts::{PI, TAU};

use rand::Rng;

use crate::embedding::Embedding;
use crate::error::{internal, precondition, Error, Result};
use crate::geom::{apex_points, Point};
use crate::graph::{decompose_degree2, Component, Graph};
use crate::sphere::MIN_SEPARATION;
use crate::verify::certify;

pub use d3::embed_d3;
pub use edges::{edge_bound, embed_edge_bounded, Mode};
pub use parity::{embed_even, embed_odd};

/// Whole-construction resamples allowed in the max-degree embedders.
pub const MAX_ATTEMPTS: usize = 100;

/// Embeds a graph of maximum degree at most `d` in `R^d`. Fails with
/// [`Error::K33Excluded`] for `d = 3` when a component is `K_{3,3}`.
pub fn embed_max_degree<R: Rng + ?Sized>(g: &Graph, d: usize, rng: &mut R) -> Result<Embedding> {
    if d == 0 {
        return Err(precondition("dimension must be at least 1"));
    }
    if g.max_degree() > d {
        return Err(precondition(format!("max degree {} exceeds {d}", g.max_degree())));
    }
    match d {
        1 => embed_line(g),
        2 => embed_plane(g, rng),
        3 => embed_d3(g, rng),
        _ if d.is_multiple_of(2) => embed_even(g, d, rng),
        _ => embed_odd(g, d, rng),
    }
}

/// Matchings on a line: components three apart.
fn embed_line(g: &Graph) -> Result<Embedding> {
    let mut e = Embedding::new(g.n(), 1);
    for (k, comp) in g.components().iter().enumerate() {
        for (j, &v) in comp.iter().enumerate() {
            e.set(v, Point::from_element(1, 3.0 * k as f64 + j as f64));
        }
    }
    certify(g, &e, false)?;
    Ok(e)
}

/// Paths as zig-zag chains advancing in `x`, cycles as regular polygons,
/// components side by side.
fn embed_plane<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Result<Embedding> {
    let mut e = Embedding::new(g.n(), 2);
    let mut x0 = 0.0;
    for comp in decompose_degree2(g)? {
        match &comp {
            Component::Path(seq) => {
                let (mut x, mut y) = (x0, 0.0);
                for (k, &v) in seq.iter().enumerate() {
                    if k > 0 {
                        let turn = 0.2 + 0.4 * rng.random::<f64>();
                        let phi = if k % 2 == 0 { turn } else { -turn };
                        x += phi.cos();
                        y += phi.sin();
                    }
                    e.set(v, Point::from_row_slice(&[x, y]));
                }
                x0 = x + 2.0;
            }
            Component::Cycle(seq) => {
                let k = seq.len() as f64;
                let r = 0.5 / (PI / k).sin();
                let rot = rng.random::<f64>() * TAU;
                for (i, &v) in seq.iter().enumerate() {
                    let a = rot + TAU * i as f64 / k;
                    e.set(v, Point::from_row_slice(&[x0 + r + r * a.cos(), r * a.sin()]));
                }
                x0 += 2.0 * r + 2.0;
            }
        }
    }
    certify(g, &e, false)?;
    Ok(e)
}

/// Puts every vertex of `w` at an apex of its (already placed) neighbours,
/// `plus` unless taken. `Ok(false)` asks the caller to resample.
pub(crate) fn place_apexes(g: &Graph, w: &[usize], d: usize, e: &mut Embedding) -> Result<bool> {
    for &v in w {
        let pts: Vec<Point> = g.neighbors(v).iter().map(|&u| e.point(u).clone()).collect();
        if pts.len() != d {
            return Err(internal(format!(
                "apex vertex {v} has {} neighbours, expected {d}",
                pts.len()
            )));
        }
        let ap = match apex_points(&pts, d) {
            Ok(ap) => ap,
            Err(Error::DegenerateSpan { .. }) => return Ok(false),
            Err(err) => return Err(err),
        };
        let Some(x) = [ap.plus, ap.minus].into_iter().find(|x| !e.occupied(x, MIN_SEPARATION)) else {
            return Ok(false);
        };
        if let Some(p) = pts.iter().find(|p| ((*p - &x).norm() - 1.0).abs() > 1e-9) {
            return Err(internal(format!(
                "apex of {v} is at distance {} from a neighbour",
                (p - &x).norm()
            )));
        }
        e.set(v, x);
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{verify_edges, Tolerances};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn check(g: &Graph, d: usize, seed: u64) {
        let e = embed_max_degree(g, d, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        assert_eq!(e.dim(), d);
        let r = verify_edges(g, &e, &Tolerances::default()).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn low_dimensions() {
        check(&Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap(), 1, 1);
        check(&Graph::cycle(7).disjoint_union(&Graph::path(6)), 2, 2);
        check(&Graph::cycle(3).disjoint_union(&Graph::new(2)), 2, 3);
    }

    #[test]
    fn simplex_in_four_space() {
        check(&Graph::complete(5), 4, 4);
    }

    #[test]
    fn cube_and_k33() {
        check(&Graph::cube(), 3, 5);
        let r = embed_max_degree(&Graph::complete_bipartite(3, 3), 3, &mut ChaCha8Rng::seed_from_u64(5));
        assert!(matches!(r, Err(Error::K33Excluded)));
    }

    #[test]
    fn rejects_high_degree() {
        assert!(embed_max_degree(&Graph::complete(5), 3, &mut ChaCha8Rng::seed_from_u64(0)).is_err());
    }
}
