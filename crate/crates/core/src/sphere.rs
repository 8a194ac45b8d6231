//! Embeddings on the sphere of radius `1/√2` about the origin, where
//! orthogonal points are exactly at distance 1.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use rand::Rng;

use crate::embedding::Embedding;
use crate::error::{internal, precondition, Error, Result};
use crate::geom::{complement_in, orthobasis_clique, sample_subsphere, Frame, Point, SPHERE_RADIUS};
use crate::graph::{decompose_degree2, peel_min_degree, Component, Graph};
use crate::partition::lovasz_partition;
use crate::verify::{certify, verify_gp_on, verify_unit_property, GpFinding, Tolerances};

/// Angular distance kept from forbidden relations between generic angles.
pub const GENERIC_DELTA: f64 = 1e-4;
/// Redraws of circle angles before giving up.
pub const ANGLE_REDRAWS: usize = 100;
/// Whole-graph resamples allowed in [`embed_gp_s2`].
pub const GP_ATTEMPTS: usize = 1000;
/// Samples allowed in [`place_peeled_vertex`].
pub const PLACE_TRIES: usize = 100;
/// Minimum distance between two embedded vertices.
pub const MIN_SEPARATION: f64 = 1e-6;

/// Distance of `a` from the nearest multiple of `period`.
pub(crate) fn off_multiple(a: f64, period: f64) -> f64 {
    let r = a.rem_euclid(period);
    r.min(period - r)
}

/// Pairwise angular differences avoid 0 and π by at least [`GENERIC_DELTA`].
fn generic_on_circle(angles: &[f64]) -> bool {
    angles.iter().enumerate().all(|(i, &a)| {
        angles[i + 1..].iter().all(|&b| {
            let diff = (a - b).rem_euclid(TAU);
            off_multiple(diff, PI) >= GENERIC_DELTA
        })
    })
}

/// Angles on one circle for the vertices of `part`, a set inducing maximum
/// degree at most 1: a matched pair gets `(θ, θ + π/2)`, smaller id at `θ`.
pub(crate) fn circle_angles<R: Rng + ?Sized>(g: &Graph, part: &[usize], rng: &mut R) -> Result<Vec<f64>> {
    let index = |v: usize| part.iter().position(|&u| u == v);
    for &v in part {
        if g.neighbors(v).iter().filter(|&&u| index(u).is_some()).count() > 1 {
            return Err(precondition(format!("vertex {v} has two neighbours on its circle")));
        }
    }
    for _ in 0..ANGLE_REDRAWS {
        let mut angles = vec![f64::NAN; part.len()];
        for (i, &v) in part.iter().enumerate() {
            if !angles[i].is_nan() {
                continue;
            }
            let theta = rng.random::<f64>() * TAU;
            angles[i] = theta;
            if let Some(j) = g.neighbors(v).iter().find_map(|&u| index(u)) {
                angles[j] = theta + FRAC_PI_2;
            }
        }
        if generic_on_circle(&angles) {
            return Ok(angles);
        }
    }
    Err(Error::ResampleExceeded {
        what: "circle angles",
        attempts: ANGLE_REDRAWS,
    })
}

/// The coordinate plane spanned by `e_{2i}, e_{2i+1}` inside `R^d`.
pub fn coordinate_plane(d: usize, i: usize) -> Frame {
    Frame::standard(d).slice(2 * i..2 * i + 2)
}

/// Places each part (inducing maximum degree ≤ 1) on its own circle of
/// radius `1/√2` in the coordinates `2i, 2i+1`. Adjacent vertices sit a
/// quarter turn apart; vertices on different circles are orthogonal.
pub fn embed_matchings_on_circles<R: Rng + ?Sized>(
    g: &Graph,
    parts: &[Vec<usize>],
    d: usize,
    rng: &mut R,
) -> Result<Embedding> {
    if 2 * parts.len() > d {
        return Err(precondition(format!(
            "{} circles need dimension {}",
            parts.len(),
            2 * parts.len()
        )));
    }
    let mut e = Embedding::new(g.n(), d);
    for (i, part) in parts.iter().enumerate() {
        place_on_circle(g, part, &coordinate_plane(d, i), &mut e, rng)?;
    }
    let mut placed = Graph::new(g.n());
    for (u, v) in g.edges() {
        if e.is_placed(u) && e.is_placed(v) {
            placed.add_edge(u, v)?;
        }
    }
    let all: Vec<usize> = parts.iter().flatten().copied().collect();
    let sub = Embedding::from_points(d, all.iter().map(|&v| e.point(v).clone()).collect());
    certify(&placed.induced(&all), &sub, true)?;
    Ok(e)
}

pub(crate) fn place_on_circle<R: Rng + ?Sized>(
    g: &Graph,
    part: &[usize],
    plane: &Frame,
    e: &mut Embedding,
    rng: &mut R,
) -> Result<()> {
    let angles = circle_angles(g, part, rng)?;
    for (&v, &a) in part.iter().zip(&angles) {
        e.set(v, plane.point(&[SPHERE_RADIUS * a.cos(), SPHERE_RADIUS * a.sin()]));
    }
    Ok(())
}

/// Places short paths and 4-cycles (each given in order along the
/// component) on the circle of `plane`, consecutive vertices a quarter turn
/// apart. Base angles of different components differ by at least
/// [`GENERIC_DELTA`] modulo `π/2`, so no two vertices coincide or are
/// antipodal across components.
pub(crate) fn place_quarter_turns<R: Rng + ?Sized>(
    seqs: &[Vec<usize>],
    plane: &Frame,
    e: &mut Embedding,
    rng: &mut R,
) -> Result<()> {
    if let Some(s) = seqs.iter().find(|s| s.len() > 4) {
        return Err(internal(format!(
            "component of {} vertices does not fit on a circle",
            s.len()
        )));
    }
    for _ in 0..ANGLE_REDRAWS {
        let bases: Vec<f64> = seqs.iter().map(|_| rng.random::<f64>() * TAU).collect();
        let generic = bases.iter().enumerate().all(|(i, &a)| {
            bases[i + 1..]
                .iter()
                .all(|&b| off_multiple(a - b, FRAC_PI_2) >= GENERIC_DELTA)
        });
        if !generic {
            continue;
        }
        for (seq, &base) in seqs.iter().zip(&bases) {
            for (k, &v) in seq.iter().enumerate() {
                let a = base + k as f64 * FRAC_PI_2;
                e.set(v, plane.point(&[SPHERE_RADIUS * a.cos(), SPHERE_RADIUS * a.sin()]));
            }
        }
        return Ok(());
    }
    Err(Error::ResampleExceeded {
        what: "circle offsets",
        attempts: ANGLE_REDRAWS,
    })
}

/// Which general-position properties [`embed_gp_s2_scoped`] enforces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GpScope {
    /// Unit-distance property and the 4-point property (`O(n⁴)`).
    Full,
    /// Only the unit-distance property (`O(n²)`).
    UnitDistance,
    /// No general-position checks, only distinctness.
    Unchecked,
}

/// Measured margins of an embedding on a 2-sphere.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct GpCertificate {
    /// `(removed, opposite)` for every 4-cycle: the removed vertex sits at
    /// the antipode of the opposite one.
    pub antipodal_pairs: Vec<(usize, usize)>,
    /// Smallest third-nearest `| |x - y| - 1 |` over vertices.
    pub unit_margin: Option<f64>,
    /// Smallest 4-point volume over non-exempt quadruples.
    pub volume_margin: Option<f64>,
    /// Almost coplanar quadruples that contain exactly one antipodal pair.
    pub flagged: Vec<[usize; 4]>,
    pub attempts: usize,
}

/// Sequential orthogonal sampling of a maximum-degree-2 graph on the
/// 2-sphere of `frame`, with one vertex of every 4-cycle placed at the
/// antipode of its opposite vertex.
fn sample_s2<R: Rng + ?Sized>(
    g: &Graph,
    verts: &[usize],
    frame: &Frame,
    e: &mut Embedding,
    rng: &mut R,
) -> Result<Vec<(usize, usize)>> {
    let h = g.induced(verts);
    let mut removed = vec![None; h.n()];
    let mut pairs = Vec::new();
    for comp in decompose_degree2(&h)? {
        if let Component::Cycle(c) = &comp {
            if c.len() == 4 {
                let a = *c.iter().min().unwrap();
                let pos = c.iter().position(|&x| x == a).unwrap();
                let opp = c[(pos + 2) % 4];
                removed[a] = Some(opp);
                pairs.push((verts[a], verts[opp]));
            }
        }
    }
    for v in 0..h.n() {
        if removed[v].is_some() {
            continue;
        }
        let nbrs: Vec<Point> = h
            .neighbors(v)
            .iter()
            .filter_map(|&u| e.get(verts[u]).filter(|_| u < v && removed[u].is_none()).cloned())
            .collect();
        let comp = complement_in(frame, &nbrs)?;
        e.set(verts[v], sample_subsphere(&comp, SPHERE_RADIUS, rng)?);
    }
    for (a, opp) in removed.iter().enumerate() {
        if let Some(o) = opp {
            let p = -e.point(verts[*o]).clone();
            e.set(verts[a], p);
        }
    }
    Ok(pairs)
}

/// Embeds a graph of maximum degree at most 2 on the 2-sphere of radius
/// `1/√2` in the 3-dimensional `frame`, in general position: no vertex at
/// distance 1 from three others, and no four vertices on a circle except
/// two antipodal pairs coming from 4-cycles.
pub fn embed_gp_s2<R: Rng + ?Sized>(g: &Graph, frame: &Frame, rng: &mut R) -> Result<(Embedding, GpCertificate)> {
    embed_gp_s2_scoped(g, frame, GpScope::Full, rng)
}

/// [`embed_gp_s2`] with a chosen set of checks.
pub fn embed_gp_s2_scoped<R: Rng + ?Sized>(
    g: &Graph,
    frame: &Frame,
    scope: GpScope,
    rng: &mut R,
) -> Result<(Embedding, GpCertificate)> {
    let verts: Vec<usize> = (0..g.n()).collect();
    let mut e = Embedding::new(g.n(), frame.ambient_dim());
    let cert = embed_gp_s2_into(g, &verts, frame, scope, &mut e, rng)?;
    e.meta.retries = cert.attempts - 1;
    Ok((e, cert))
}

/// Embeds `G[verts]` on the 2-sphere of `frame` into `e`, resampling until
/// the requested properties hold.
pub(crate) fn embed_gp_s2_into<R: Rng + ?Sized>(
    g: &Graph,
    verts: &[usize],
    frame: &Frame,
    scope: GpScope,
    e: &mut Embedding,
    rng: &mut R,
) -> Result<GpCertificate> {
    if frame.dim() != 3 {
        return Err(precondition("the 2-sphere needs a 3-dimensional frame"));
    }
    let h = g.induced(verts);
    if h.max_degree() > 2 {
        return Err(precondition(format!("max degree {} exceeds 2", h.max_degree())));
    }
    let tol = Tolerances::default();
    for attempt in 1..=GP_ATTEMPTS {
        let pairs = sample_s2(g, verts, frame, e, rng)?;
        let local = Embedding::from_points(e.dim(), verts.iter().map(|&v| e.point(v).clone()).collect());
        if certify(&h, &local, true).is_err() {
            continue;
        }
        let mut cert = GpCertificate {
            antipodal_pairs: pairs,
            attempts: attempt,
            ..GpCertificate::default()
        };
        if scope == GpScope::Unchecked {
            return Ok(cert);
        }
        let local_pairs: Vec<(usize, usize)> = cert
            .antipodal_pairs
            .iter()
            .map(|&(a, b)| {
                (
                    verts.iter().position(|&x| x == a).unwrap(),
                    verts.iter().position(|&x| x == b).unwrap(),
                )
            })
            .collect();
        let ids: Vec<usize> = (0..verts.len()).collect();
        let rep = match scope {
            GpScope::Full => verify_gp_on(&local, &ids, &local_pairs, &tol),
            _ => verify_unit_property(&local, &ids, &tol),
        };
        cert.unit_margin = rep.unit_margin;
        cert.volume_margin = rep.min_volume;
        let in_pair = |x: usize| local_pairs.iter().filter(|&&(a, b)| a == x || b == x).count();
        let mut ok = true;
        for f in &rep.gp_findings {
            match f {
                GpFinding::Coplanar { quad, .. } => {
                    let hits = quad.iter().filter(|&&x| in_pair(x) > 0).count();
                    let one_pair =
                        hits == 2 && local_pairs.iter().any(|&(a, b)| quad.contains(&a) && quad.contains(&b));
                    if one_pair {
                        cert.flagged.push(quad.map(|x| verts[x]));
                    } else {
                        ok = false;
                    }
                }
                GpFinding::UnitTriple { .. } => ok = false,
            }
        }
        if ok {
            return Ok(cert);
        }
    }
    Err(Error::ResampleExceeded {
        what: "general position on the 2-sphere",
        attempts: GP_ATTEMPTS,
    })
}

/// Embeds a graph of maximum degree at most `d - 1` on the sphere of radius
/// `1/√2` in `R^d`, `d ≥ 2`.
///
/// Circles and the 2-sphere are handled directly; larger spheres split the
/// vertices into two parts of smaller maximum degree and embed them on
/// spheres in orthogonal subspaces.
pub fn embed_max_degree_sphere<R: Rng + ?Sized>(g: &Graph, d: usize, rng: &mut R) -> Result<Embedding> {
    if d < 2 {
        return Err(precondition("spherical max-degree embedding needs d ≥ 2"));
    }
    if g.max_degree() + 1 > d {
        return Err(precondition(format!(
            "max degree {} exceeds d - 1 = {}",
            g.max_degree(),
            d - 1
        )));
    }
    let mut e = Embedding::new(g.n(), d);
    let verts: Vec<usize> = (0..g.n()).collect();
    max_degree_sphere_into(g, &verts, &Frame::standard(d), &mut e, rng)?;
    certify(g, &e, true)?;
    Ok(e)
}

/// Embeds `G[verts]` (maximum degree below `frame.dim()`) on the sphere of
/// `frame`.
pub(crate) fn max_degree_sphere_into<R: Rng + ?Sized>(
    g: &Graph,
    verts: &[usize],
    frame: &Frame,
    e: &mut Embedding,
    rng: &mut R,
) -> Result<()> {
    let m = frame.dim();
    let h = g.induced(verts);
    if h.max_degree() + 1 > m {
        return Err(internal(format!(
            "part of max degree {} sent to a sphere of dimension {}",
            h.max_degree(),
            m - 1
        )));
    }
    match m {
        0 => Err(internal("empty frame")),
        1 => {
            if verts.len() > 2 {
                return Err(precondition("more than two vertices on a 0-sphere"));
            }
            for (i, &v) in verts.iter().enumerate() {
                let s = if i == 0 { SPHERE_RADIUS } else { -SPHERE_RADIUS };
                e.set(v, frame.vector(0) * s);
            }
            Ok(())
        }
        2 => place_on_circle(g, verts, frame, e, rng),
        3 => embed_gp_s2_into(g, verts, frame, GpScope::Unchecked, e, rng).map(|_| ()),
        _ => {
            let k1 = (m - 2) / 2;
            let k2 = (m - 2).div_ceil(2);
            let p = lovasz_partition(&h, &[k1, k2])?;
            let (f1, f2) = frame.split_at(k1 + 1);
            let map = |part: &Vec<usize>| -> Vec<usize> { part.iter().map(|&i| verts[i]).collect() };
            max_degree_sphere_into(g, &map(&p.parts[0]), &f1, e, rng)?;
            max_degree_sphere_into(g, &map(&p.parts[1]), &f2, e, rng)
        }
    }
}

/// A point of the sphere of radius `1/√2` in `R^d` orthogonal to all of
/// `neighbors` (so at distance 1 from each) and away from every vertex
/// already in `e`. Needs at most `d - 2` neighbours, leaving at least a
/// great circle to choose from.
pub fn place_peeled_vertex<R: Rng + ?Sized>(e: &Embedding, neighbors: &[Point], rng: &mut R) -> Result<Point> {
    place_peeled_vertex_in(e, neighbors, &Frame::standard(e.dim()), rng)
}

/// [`place_peeled_vertex`] on the sphere of a sub-frame.
pub fn place_peeled_vertex_in<R: Rng + ?Sized>(
    e: &Embedding,
    neighbors: &[Point],
    frame: &Frame,
    rng: &mut R,
) -> Result<Point> {
    if neighbors.len() + 2 > frame.dim() {
        return Err(precondition(format!(
            "{} neighbours leave no circle in dimension {}",
            neighbors.len(),
            frame.dim()
        )));
    }
    for (i, p) in neighbors.iter().enumerate() {
        let dev = (p.norm() - SPHERE_RADIUS).abs();
        if dev > 1e-9 {
            return Err(Error::NotOnSphere {
                index: i,
                deviation: dev,
            });
        }
    }
    let comp = complement_in(frame, neighbors)?;
    for _ in 0..PLACE_TRIES {
        let x = sample_subsphere(&comp, SPHERE_RADIUS, rng)?;
        if !e.occupied(&x, MIN_SEPARATION) {
            return Ok(x);
        }
    }
    Err(Error::ResampleExceeded {
        what: "peeled vertex placement",
        attempts: PLACE_TRIES,
    })
}

/// Embeds a `(d-2)`-degenerate graph on the sphere of radius `1/√2` in
/// `R^d` by placing the peeling order backwards, each vertex orthogonal to
/// its at most `d - 2` earlier-placed neighbours.
pub fn embed_degenerate_sphere<R: Rng + ?Sized>(g: &Graph, d: usize, rng: &mut R) -> Result<Embedding> {
    if d < 2 {
        return Err(precondition("degenerate embedding needs d ≥ 2"));
    }
    let peel = peel_min_degree(g, d - 2);
    if !peel.core_is_empty() {
        return Err(Error::NotDegenerate(d - 2));
    }
    let mut e = Embedding::new(g.n(), d);
    let frame = Frame::standard(d);
    place_peeled(g, &peel.order, &peel.removed_neighbors, &frame, &mut e, rng)?;
    certify(g, &e, true)?;
    Ok(e)
}

/// Places `order` in reverse, each vertex against its listed neighbours.
pub(crate) fn place_peeled<R: Rng + ?Sized>(
    _g: &Graph,
    order: &[usize],
    removed_neighbors: &[Vec<usize>],
    frame: &Frame,
    e: &mut Embedding,
    rng: &mut R,
) -> Result<()> {
    for (v, nbrs) in order.iter().zip(removed_neighbors).rev() {
        let pts: Vec<Point> = nbrs.iter().map(|&u| e.point(u).clone()).collect();
        let x = place_peeled_vertex_in(e, &pts, frame, rng)?;
        e.set(*v, x);
    }
    Ok(())
}

/// Places `h` on the cross-polytope of `R^d`: the `k` complement pairs at
/// `±e_i/√2` and the remaining vertices at further `e_j/√2`. Only the
/// antipodal pairs are at distance other than 1.
pub fn embed_cross_polytope(h: &Graph, pairs: &[(usize, usize)], d: usize) -> Result<Embedding> {
    let mut e = Embedding::new(h.n(), d);
    let verts: Vec<usize> = (0..h.n()).collect();
    cross_polytope_into(h, &verts, pairs, &Frame::standard(d), &mut e)?;
    certify(h, &e, true)?;
    Ok(e)
}

/// [`embed_cross_polytope`] for `G[verts]` on the sphere of `frame`; `pairs`
/// use global ids.
pub(crate) fn cross_polytope_into(
    g: &Graph,
    verts: &[usize],
    pairs: &[(usize, usize)],
    frame: &Frame,
    e: &mut Embedding,
) -> Result<()> {
    let mut used = std::collections::BTreeSet::new();
    for &(a, b) in pairs {
        if g.has_edge(a, b) {
            return Err(precondition(format!("paired vertices {a} and {b} are adjacent")));
        }
        if a == b || !used.insert(a) || !used.insert(b) {
            return Err(precondition("pairs overlap"));
        }
        if !verts.contains(&a) || !verts.contains(&b) {
            return Err(precondition("pair outside the vertex set"));
        }
    }
    let rest: Vec<usize> = verts.iter().copied().filter(|v| !used.contains(v)).collect();
    let k = pairs.len();
    if k + rest.len() > frame.dim() {
        return Err(precondition(format!(
            "{} vertices with {k} pairs do not fit dimension {}",
            verts.len(),
            frame.dim()
        )));
    }
    let basis = orthobasis_clique(k + rest.len(), frame)?;
    for (i, &(a, b)) in pairs.iter().enumerate() {
        e.set(a, basis[i].clone());
        e.set(b, -basis[i].clone());
    }
    for (j, &v) in rest.iter().enumerate() {
        e.set(v, basis[k + j].clone());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{verify_edges, verify_gp, verify_sphere};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    #[test]
    fn one_edge_on_circle() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let e = embed_matchings_on_circles(&g, &[vec![0, 1]], 2, &mut rng(1)).unwrap();
        assert!(((e.point(0) - e.point(1)).norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn two_circles_cross_distance() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let e = embed_matchings_on_circles(&g, &[vec![0, 1], vec![2, 3]], 4, &mut rng(2)).unwrap();
        for a in 0..2 {
            for b in 2..4 {
                assert!(((e.point(a) - e.point(b)).norm() - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn singles_not_antipodal() {
        let g = Graph::new(2);
        let e = embed_matchings_on_circles(&g, &[vec![0, 1]], 2, &mut rng(3)).unwrap();
        let (a, b) = (e.point(0), e.point(1));
        assert!((a - b).norm() > 1e-6 && (a + b).norm() > 1e-6);
    }

    #[test]
    fn gp_triangle_orthogonal() {
        let (e, _) = embed_gp_s2(&Graph::cycle(3), &Frame::standard(3), &mut rng(4)).unwrap();
        for (u, v) in [(0, 1), (1, 2), (0, 2)] {
            assert!(e.point(u).dot(e.point(v)).abs() < 1e-12);
        }
    }

    #[test]
    fn gp_square_has_antipodes() {
        let g = Graph::cycle(4);
        let (e, cert) = embed_gp_s2(&g, &Frame::standard(3), &mut rng(5)).unwrap();
        assert_eq!(cert.antipodal_pairs, vec![(0, 2)]);
        assert!((e.point(0) + e.point(2)).norm() < 1e-12);
        assert!(verify_edges(&g, &e, &Tolerances::default()).unwrap().pass);
        assert!(verify_gp(&e, &cert.antipodal_pairs, &Tolerances::default()).pass);
    }

    #[test]
    fn max_degree_sphere_examples() {
        let tol = Tolerances::default();
        for (g, d) in [(Graph::complete(2), 2), (Graph::cycle(5), 3), (Graph::petersen(), 4)] {
            let e = embed_max_degree_sphere(&g, d, &mut rng(6)).unwrap();
            assert!(verify_edges(&g, &e, &tol).unwrap().pass);
            assert!(verify_sphere(&e, SPHERE_RADIUS, &tol).pass);
        }
        assert!(embed_max_degree_sphere(&Graph::complete(4), 3, &mut rng(6)).is_err());
    }

    #[test]
    fn peeled_vertex_examples() {
        let e = Embedding::new(0, 3);
        let x = place_peeled_vertex(&e, &[Point::from_row_slice(&[SPHERE_RADIUS, 0.0, 0.0])], &mut rng(7)).unwrap();
        assert!(x[0].abs() < 1e-12 && (x.norm() - SPHERE_RADIUS).abs() < 1e-12);
        let e = Embedding::new(0, 2);
        let x = place_peeled_vertex(&e, &[], &mut rng(7)).unwrap();
        assert!((x.norm() - SPHERE_RADIUS).abs() < 1e-12);
        let far = [Point::from_row_slice(&[1.0, 0.0, 0.0])];
        assert!(matches!(
            place_peeled_vertex(&Embedding::new(0, 3), &far, &mut rng(7)),
            Err(Error::NotOnSphere { .. })
        ));
    }

    #[test]
    fn degenerate_examples() {
        let tree = Graph::from_edges(6, &[(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]).unwrap();
        assert!(embed_degenerate_sphere(&tree, 3, &mut rng(8)).is_ok());
        assert!(matches!(
            embed_degenerate_sphere(&Graph::cycle(4), 3, &mut rng(8)),
            Err(Error::NotDegenerate(1))
        ));
        assert!(embed_degenerate_sphere(&Graph::cycle(4), 4, &mut rng(8)).is_ok());
        assert!(embed_degenerate_sphere(&Graph::complete(4), 6, &mut rng(8)).is_ok());
    }

    #[test]
    fn cross_polytope_examples() {
        let e = embed_cross_polytope(&Graph::cycle(4), &[(0, 2), (1, 3)], 2).unwrap();
        assert!((e.point(0) + e.point(2)).norm() < 1e-15);
        let g = Graph::cross_polytope(4);
        let pairs: Vec<(usize, usize)> = (0..4).map(|i| (i, i + 4)).collect();
        assert!(embed_cross_polytope(&g, &pairs, 4).is_ok());
        assert!(embed_cross_polytope(&Graph::complete(4), &[], 4).is_ok());
        assert!(embed_cross_polytope(&Graph::cycle(4), &[(0, 1)], 3).is_err());
    }
}
