use std::collections::BTreeSet;

use rand::Rng;
use rand_distr::StandardNormal;

use crate::embedding::Embedding;
use crate::error::{internal, precondition, Error, Result};
use crate::geom::{glued_simplices, orthobasis_clique, unit_locus, Frame, Point, SPHERE_RADIUS};
use crate::graph::{complement_matching, decompose_degree2, find_forbidden, peel_min_degree, Component, Graph};
use crate::sphere::{
    cross_polytope_into, max_degree_sphere_into, place_peeled, place_quarter_turns, MIN_SEPARATION, PLACE_TRIES,
};
use crate::verify::certify;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Anywhere in `R^d`.
    Euclid,
    /// On the sphere of radius `1/√2` in `R^d`.
    Sphere,
}

/// Largest edge count handled in dimension `d`: 3, 8, then
/// `C(d+2, 2) - 1`. `None` below dimension 2.
pub fn edge_bound(d: usize) -> Option<usize> {
    match d {
        0 | 1 => None,
        2 => Some(3),
        3 => Some(8),
        _ => Some((d + 2) * (d + 1) / 2 - 1),
    }
}

/// Embeds a graph with at most [`edge_bound`]`(d)` edges in `R^d`, or on the
/// sphere when it contains neither `K_{d+1}` nor `K_{d+2} - K_3`.
///
/// Vertices of degree at most `d - 2` are peeled off and put back on the
/// sphere at the end. The remaining core is small or dense enough to be
/// placed by a cross-polytope, by glued simplices, or by splitting off one or
/// two vertices at the poles of a hyperplane and recursing one dimension down.
pub fn embed_edge_bounded<R: Rng + ?Sized>(g: &Graph, d: usize, mode: Mode, rng: &mut R) -> Result<Embedding> {
    let bound = edge_bound(d).ok_or_else(|| precondition("edge-bounded embedding needs d ≥ 2"))?;
    if g.edge_count() > bound {
        return Err(Error::TooManyEdges {
            edges: g.edge_count(),
            bound,
            dim: d,
        });
    }
    let mut e = Embedding::new(g.n(), d);
    let all: Vec<usize> = (0..g.n()).collect();
    let frame = Frame::standard(d);
    match mode {
        Mode::Sphere => {
            let f = find_forbidden(g, d)?;
            if f.clique.is_some() {
                return Err(Error::ForbiddenSubgraphForSphere(format!("K_{}", d + 1)));
            }
            if f.near_clique.is_some() {
                return Err(Error::ForbiddenSubgraphForSphere(format!("K_{} - K_3", d + 2)));
            }
            let mut rec = Recursion {
                g,
                e: &mut e,
                top: d,
                deepest: 0,
            };
            rec.sphere(&all, &frame, 0, rng)?;
            certify(g, &e, true)?;
        }
        Mode::Euclid => {
            if d == 2 {
                return embed_plane_small(g, rng);
            }
            euclid_top(g, &frame, &mut e, rng)?;
            certify(g, &e, false)?;
        }
    }
    Ok(e)
}

fn euclid_top<R: Rng + ?Sized>(g: &Graph, frame: &Frame, e: &mut Embedding, rng: &mut R) -> Result<()> {
    let d = frame.dim();
    let peel = peel_min_degree(g, d - 2);
    let core = peel.core.clone();
    let h = g.induced(&core);
    let f = find_forbidden(&h, d)?;
    if f.near_clique.is_some() {
        if core.len() != d + 2 {
            return Err(Error::UnreachableByTheorem(format!(
                "core with K_{} - K_3 has {} vertices",
                d + 2,
                core.len()
            )));
        }
        let (a, b) = complement_matching(&h, 1)
            .and_then(|p| p.first().copied())
            .ok_or_else(|| internal("core with K_{d+2} - K_3 has no non-edge"))?;
        let pts = glued_simplices(d)?;
        let facet: Vec<usize> = (0..core.len()).filter(|&i| i != a && i != b).collect();
        for (j, &i) in facet.iter().enumerate() {
            e.set(core[i], pts[j].clone());
        }
        e.set(core[a], pts[d].clone());
        e.set(core[b], pts[d + 1].clone());
        e.note("glued simplices");
        return place_off_sphere(g, &peel.order, frame, e, rng);
    }
    if f.clique.is_some() {
        if core.len() != d + 1 {
            return Err(Error::UnreachableByTheorem(format!(
                "core with K_{} has {} vertices",
                d + 1,
                core.len()
            )));
        }
        let inside: BTreeSet<usize> = core.iter().copied().collect();
        let v = *core
            .iter()
            .find(|&&v| g.neighbors(v).iter().all(|u| inside.contains(u)))
            .ok_or_else(|| Error::UnreachableByTheorem("every clique vertex has an outside neighbour".into()))?;
        let rest: Vec<usize> = core.iter().copied().filter(|&u| u != v).collect();
        for (u, p) in rest.iter().zip(orthobasis_clique(d, frame)?) {
            e.set(*u, p);
        }
        place_peeled(g, &peel.order, &peel.removed_neighbors, frame, e, rng)?;
        let done = super::place_apexes(g, &[v], d, e)?;
        if !done {
            return Err(internal("no free apex over the clique"));
        }
        e.note("clique on the sphere, one vertex off it");
        return Ok(());
    }
    let mut rec = Recursion {
        g,
        e,
        top: d,
        deepest: 0,
    };
    rec.core(&core, frame, 0, rng)?;
    place_peeled(g, &peel.order, &peel.removed_neighbors, frame, e, rng)
}

/// Places `order` in reverse without the sphere constraint: each vertex on
/// the unit locus of its already placed neighbours, preferring vertices with
/// the most placed neighbours.
fn place_off_sphere<R: Rng + ?Sized>(
    g: &Graph,
    order: &[usize],
    frame: &Frame,
    e: &mut Embedding,
    rng: &mut R,
) -> Result<()> {
    let mut pending: BTreeSet<usize> = order.iter().copied().collect();
    while !pending.is_empty() {
        let placed_nbrs = |v: usize| g.neighbors(v).iter().filter(|&&u| e.is_placed(u)).count();
        let v = *pending
            .iter()
            .max_by_key(|&&v| (placed_nbrs(v), std::cmp::Reverse(v)))
            .unwrap();
        pending.remove(&v);
        let nbrs: Vec<Point> = g.neighbors(v).iter().filter_map(|&u| e.get(u).cloned()).collect();
        let mut found = None;
        for _ in 0..PLACE_TRIES {
            let x = if nbrs.is_empty() {
                Point::from_fn(frame.ambient_dim(), |_, _| 3.0 * rng.sample::<f64, _>(StandardNormal))
            } else {
                unit_locus(&nbrs, frame)?.sample(rng)?
            };
            if !e.occupied(&x, MIN_SEPARATION) {
                found = Some(x);
                break;
            }
        }
        let x = found.ok_or(Error::ResampleExceeded {
            what: "off-sphere placement",
            attempts: PLACE_TRIES,
        })?;
        e.set(v, x);
    }
    Ok(())
}

/// Graphs with at most 3 edges in the plane: a unit triangle or a forest,
/// components side by side.
fn embed_plane_small<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Result<Embedding> {
    let plane = Frame::standard(2);
    let mut e = Embedding::new(g.n(), 2);
    for (k, comp) in g.components().into_iter().enumerate() {
        let offset = Point::from_row_slice(&[6.0 * k as f64, 0.0]);
        let sub = g.induced(&comp);
        if sub.edge_count() >= sub.n() {
            if sub.n() != 3 {
                return Err(Error::UnreachableByTheorem(
                    "cycle other than a triangle within 3 edges".into(),
                ));
            }
            let h = 3f64.sqrt() / 2.0;
            for (i, p) in [[0.0, 0.0], [1.0, 0.0], [0.5, h]].iter().enumerate() {
                e.set(comp[i], &offset + Point::from_row_slice(p));
            }
            continue;
        }
        e.set(comp[0], offset);
        let mut queue = std::collections::VecDeque::from([comp[0]]);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if e.is_placed(u) {
                    continue;
                }
                let nbrs = [e.point(v).clone()];
                let mut x = unit_locus(&nbrs, &plane)?.sample(rng)?;
                for _ in 0..PLACE_TRIES {
                    if !e.occupied(&x, 0.1) {
                        break;
                    }
                    x = unit_locus(&nbrs, &plane)?.sample(rng)?;
                }
                e.set(u, x);
                queue.push_back(u);
            }
        }
    }
    certify(g, &e, false)?;
    Ok(e)
}

struct Recursion<'a> {
    g: &'a Graph,
    e: &'a mut Embedding,
    top: usize,
    deepest: usize,
}

impl Recursion<'_> {
    fn enter(&mut self, frame: &Frame, depth: usize) -> Result<()> {
        if frame.dim() + depth != self.top || depth + 1 > self.top {
            return Err(internal(format!(
                "recursion at depth {depth} in dimension {}",
                frame.dim()
            )));
        }
        self.deepest = self.deepest.max(depth);
        Ok(())
    }

    /// `G[verts]` on the sphere of `frame`.
    fn sphere<R: Rng + ?Sized>(&mut self, verts: &[usize], frame: &Frame, depth: usize, rng: &mut R) -> Result<()> {
        self.enter(frame, depth)?;
        let m = frame.dim();
        if m == 2 {
            return self.circle(verts, frame, rng);
        }
        let h = self.g.induced(verts);
        let peel = peel_min_degree(&h, m - 2);
        let core: Vec<usize> = peel.core.iter().map(|&i| verts[i]).collect();
        if !core.is_empty() {
            self.core(&core, frame, depth, rng)?;
        }
        let order: Vec<usize> = peel.order.iter().map(|&i| verts[i]).collect();
        let nbrs: Vec<Vec<usize>> = peel
            .removed_neighbors
            .iter()
            .map(|ns| ns.iter().map(|&i| verts[i]).collect())
            .collect();
        place_peeled(self.g, &order, &nbrs, frame, self.e, rng)
    }

    /// Base case on a great circle: disjoint paths of at most 4 vertices.
    fn circle<R: Rng + ?Sized>(&mut self, verts: &[usize], frame: &Frame, rng: &mut R) -> Result<()> {
        let h = self.g.induced(verts);
        if h.max_degree() > 2 {
            return Err(Error::UnreachableByTheorem("vertex of degree 3 on a circle".into()));
        }
        let mut seqs = Vec::new();
        for comp in decompose_degree2(&h)? {
            match comp {
                Component::Path(p) if p.len() <= 4 => seqs.push(p.iter().map(|&i| verts[i]).collect()),
                other => {
                    return Err(Error::UnreachableByTheorem(format!(
                        "component of {} vertices on a circle",
                        other.len()
                    )));
                }
            }
        }
        place_quarter_turns(&seqs, frame, self.e, rng)
    }

    /// A core of minimum degree at least `m - 1` free of `K_{m+1}` and
    /// `K_{m+2} - K_3`, on the sphere of the `m`-dimensional `frame`.
    fn core<R: Rng + ?Sized>(&mut self, core: &[usize], frame: &Frame, depth: usize, rng: &mut R) -> Result<()> {
        let m = frame.dim();
        let g = self.g;
        let h = g.induced(core);
        let nh = core.len();
        let global = |pairs: Vec<(usize, usize)>| -> Vec<(usize, usize)> {
            pairs.into_iter().map(|(a, b)| (core[a], core[b])).collect()
        };
        if nh <= m {
            return cross_polytope_into(g, core, &[], frame, self.e);
        }
        if nh <= m + 2 {
            let k = nh - m;
            let pairs = complement_matching(&h, k).ok_or_else(|| {
                Error::UnreachableByTheorem(format!("core of {nh} vertices lacks {k} disjoint non-edges"))
            })?;
            return cross_polytope_into(g, core, &global(pairs), frame, self.e);
        }
        let v = (0..nh).max_by_key(|&i| (h.degree(i), std::cmp::Reverse(i))).unwrap();
        let (sub, pole) = frame.split_at(m - 1);
        let pole = pole.vector(0) * SPHERE_RADIUS;
        if h.degree(v) == nh - 1 {
            let rest: Vec<usize> = core.iter().copied().filter(|&u| u != core[v]).collect();
            self.sphere(&rest, &sub, depth + 1, rng)?;
            self.e.set(core[v], pole);
            return Ok(());
        }
        if h.max_degree() < m {
            return max_degree_sphere_into(g, core, frame, self.e, rng);
        }
        let mut case2 = None;
        for w in (0..nh).filter(|&w| w != v && !h.has_edge(v, w)) {
            let rest: Vec<usize> = (0..nh).filter(|&i| i != v && i != w).map(|i| core[i]).collect();
            let f = find_forbidden(&g.induced(&rest), m - 1)?;
            if !f.any_sphere_obstruction() {
                self.sphere(&rest, &sub, depth + 1, rng)?;
                self.e.set(core[v], pole.clone());
                self.e.set(core[w], -pole);
                return Ok(());
            }
            if case2.is_none() {
                if let Some(nc) = f.near_clique {
                    let to_global = |i: usize| rest[i];
                    case2 = Some((
                        core[w],
                        nc.missing.map(to_global),
                        nc.vertices.iter().map(|&i| rest[i]).collect::<Vec<_>>(),
                    ));
                }
            }
        }
        let Some((w, triple, near)) = case2 else {
            return Err(Error::UnreachableByTheorem(format!("every H - v - w contains K_{m}")));
        };
        let v = core[v];
        if near.len() + 2 != nh {
            return Err(Error::UnreachableByTheorem(
                "H - v - w is larger than K_{m+1} - K_3".into(),
            ));
        }
        let hits = |x: usize| triple.iter().filter(|&&t| g.has_edge(x, t)).count();
        if hits(v) <= 2 && hits(w) <= 1 {
            let special: Vec<usize> = [v, w].into_iter().chain(triple).collect();
            let sg = g.induced(&special);
            let mut seqs = Vec::new();
            for comp in
                decompose_degree2(&sg).map_err(|_| Error::UnreachableByTheorem("special vertices not paths".into()))?
            {
                match comp {
                    Component::Path(p) if p.len() <= 4 => seqs.push(p.iter().map(|&i| special[i]).collect::<Vec<_>>()),
                    _ => return Err(Error::UnreachableByTheorem("special vertices not short paths".into())),
                }
            }
            let (plane, rest_frame) = frame.split_at(2);
            place_quarter_turns(&seqs, &plane, self.e, rng)?;
            let clique: Vec<usize> = near.iter().copied().filter(|x| !triple.contains(x)).collect();
            for (u, p) in clique.iter().zip(orthobasis_clique(clique.len(), &rest_frame)?) {
                self.e.set(*u, p);
            }
            return Ok(());
        }
        let pairs = complement_matching(&h, 3)
            .ok_or_else(|| Error::UnreachableByTheorem("no three disjoint non-edges in the dense case".into()))?;
        cross_polytope_into(g, core, &global(pairs), frame, self.e)
    }
}
