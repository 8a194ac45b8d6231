//! Numerical checks of embeddings and an independent least-squares
//! realizer used to cross-check the constructions.

use std::fmt;

use nalgebra::Matrix3;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::embedding::Embedding;
use crate::error::{internal, Error, Result};
use crate::geom::{Point, SPHERE_RADIUS};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    pub eps_edge: f64,
    pub eps_sphere: f64,
    pub eps_gp: f64,
    pub eps_distinct: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            eps_edge: 1e-9,
            eps_sphere: 1e-9,
            eps_gp: 1e-6,
            eps_distinct: 1e-6,
        }
    }
}

impl Tolerances {
    pub fn with_edge(mut self, eps: f64) -> Self {
        self.eps_edge = eps;
        self
    }
}

/// A violation of the general-position properties on a 2-sphere.
#[derive(Clone, Debug, PartialEq)]
pub enum GpFinding {
    /// `vertex` is at distance 1 (within tolerance) from three or more others.
    UnitTriple { vertex: usize, witnesses: Vec<usize> },
    /// Four points spanning (almost) no volume, i.e. on a common circle.
    Coplanar { quad: [usize; 4], volume: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub max_edge_deviation: f64,
    pub worst_edge: Option<(usize, usize)>,
    pub sphere_deviation: Option<f64>,
    pub gp_findings: Vec<GpFinding>,
    /// Smallest distance between two placed vertices (`∞` for fewer than two).
    pub distinct_min_gap: f64,
    /// Smallest value, over vertices, of the third-smallest `| |x-y| - 1 |`.
    pub unit_margin: Option<f64>,
    /// Smallest 4-point volume over the non-exempt quadruples checked.
    pub min_volume: Option<f64>,
    pub pass: bool,
}

impl Default for VerifyReport {
    fn default() -> Self {
        VerifyReport {
            max_edge_deviation: 0.0,
            worst_edge: None,
            sphere_deviation: None,
            gp_findings: Vec::new(),
            distinct_min_gap: f64::INFINITY,
            unit_margin: None,
            min_volume: None,
            pass: true,
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "pass {}", self.pass)?;
        writeln!(f, "max_edge_deviation {:.6e}", self.max_edge_deviation)?;
        match self.worst_edge {
            Some((u, v)) => writeln!(f, "worst_edge {u} {v}")?,
            None => writeln!(f, "worst_edge none")?,
        }
        if let Some(s) = self.sphere_deviation {
            writeln!(f, "sphere_deviation {s:.6e}")?;
        }
        if self.distinct_min_gap.is_finite() {
            writeln!(f, "distinct_min_gap {:.6e}", self.distinct_min_gap)?;
        } else {
            writeln!(f, "distinct_min_gap inf")?;
        }
        if let Some(m) = self.unit_margin {
            writeln!(f, "unit_margin {m:.6e}")?;
        }
        if let Some(v) = self.min_volume {
            writeln!(f, "min_volume {v:.6e}")?;
        }
        writeln!(f, "gp_findings {}", self.gp_findings.len())
    }
}

fn min_gap(points: &[(usize, &Point)]) -> f64 {
    let mut best = f64::INFINITY;
    for (i, (_, p)) in points.iter().enumerate() {
        for (_, q) in &points[i + 1..] {
            best = best.min((*p - *q).norm());
        }
    }
    best
}

/// Edge-length deviation from 1 and pairwise distinctness of all placed
/// vertices.
pub fn verify_edges(g: &Graph, e: &Embedding, tol: &Tolerances) -> Result<VerifyReport> {
    if let Some(v) = (0..g.n()).find(|&v| !e.is_placed(v)) {
        return Err(Error::MissingVertex(v));
    }
    let mut rep = VerifyReport::default();
    for (u, v) in g.edges() {
        let dev = ((e.point(u) - e.point(v)).norm() - 1.0).abs();
        if rep.worst_edge.is_none() || dev > rep.max_edge_deviation || dev.is_nan() {
            rep.max_edge_deviation = dev;
            rep.worst_edge = Some((u, v));
        }
    }
    let placed: Vec<(usize, &Point)> = e.placed().collect();
    rep.distinct_min_gap = min_gap(&placed);
    let finite = placed.iter().all(|(_, p)| p.iter().all(|x| x.is_finite()));
    rep.pass = finite && rep.max_edge_deviation <= tol.eps_edge && rep.distinct_min_gap >= tol.eps_distinct;
    Ok(rep)
}

/// Largest deviation of a placed vertex's norm from `radius`.
pub fn verify_sphere(e: &Embedding, radius: f64, tol: &Tolerances) -> VerifyReport {
    let dev = e.placed().map(|(_, p)| (p.norm() - radius).abs()).fold(0.0, f64::max);
    VerifyReport {
        sphere_deviation: Some(dev),
        pass: dev <= tol.eps_sphere,
        ..VerifyReport::default()
    }
}

/// Re-checks an embedder's output at the default tolerances.
pub(crate) fn certify(g: &Graph, e: &Embedding, on_sphere: bool) -> Result<()> {
    let tol = Tolerances::default();
    let rep = verify_edges(g, e, &tol)?;
    if !rep.pass {
        return Err(internal(format!(
            "edge deviation {:e} at {:?}, min gap {:e}",
            rep.max_edge_deviation, rep.worst_edge, rep.distinct_min_gap
        )));
    }
    if on_sphere {
        let s = verify_sphere(e, SPHERE_RADIUS, &tol);
        if !s.pass {
            return Err(internal(format!(
                "sphere deviation {:e}",
                s.sphere_deviation.unwrap_or(0.0)
            )));
        }
    }
    Ok(())
}

/// Volume of the parallelepiped spanned by `b - a, c - a, d - a`, in any
/// ambient dimension (square root of the Gram determinant).
pub fn quad_volume(a: &Point, b: &Point, c: &Point, d: &Point) -> f64 {
    let u = [b - a, c - a, d - a];
    let gram = Matrix3::from_fn(|i, j| u[i].dot(&u[j]));
    gram.determinant().max(0.0).sqrt()
}

/// Largest number of points used for the 4-point volume check; beyond it an
/// evenly spaced sample of this size is checked.
pub const GP_QUAD_CAP: usize = 200;

/// General-position check of points on a 2-sphere: no vertex at unit
/// distance from three others, and no four points on a common circle unless
/// they are two of the `exempt` antipodal pairs.
pub fn verify_gp(e: &Embedding, exempt: &[(usize, usize)], tol: &Tolerances) -> VerifyReport {
    let verts: Vec<usize> = e.placed().map(|(v, _)| v).collect();
    verify_gp_on(e, &verts, exempt, tol)
}

/// The unit-distance half of [`verify_gp`] alone, `O(n²)`.
pub fn verify_unit_property(e: &Embedding, verts: &[usize], tol: &Tolerances) -> VerifyReport {
    let mut rep = VerifyReport::default();
    let mut margin = f64::INFINITY;
    for &v in verts {
        let mut devs: Vec<(f64, usize)> = verts
            .iter()
            .filter(|&&u| u != v)
            .map(|&u| (((e.point(v) - e.point(u)).norm() - 1.0).abs(), u))
            .collect();
        devs.sort_by(|a, b| a.0.total_cmp(&b.0));
        if devs.len() >= 3 {
            margin = margin.min(devs[2].0);
            if devs[2].0 < tol.eps_gp {
                let witnesses = devs.iter().take_while(|d| d.0 < tol.eps_gp).map(|d| d.1).collect();
                rep.gp_findings.push(GpFinding::UnitTriple { vertex: v, witnesses });
            }
        }
    }
    if verts.len() >= 3 {
        rep.unit_margin = Some(margin);
    }
    rep.pass = rep.gp_findings.is_empty();
    rep
}

/// [`verify_gp`] restricted to `verts`.
pub fn verify_gp_on(e: &Embedding, verts: &[usize], exempt: &[(usize, usize)], tol: &Tolerances) -> VerifyReport {
    let mut rep = verify_unit_property(e, verts, tol);
    let pts: Vec<&Point> = verts.iter().map(|&v| e.point(v)).collect();
    let is_exempt = |q: [usize; 4]| -> bool {
        let pair = |a: usize, b: usize| exempt.iter().any(|&(x, y)| (x, y) == (a, b) || (y, x) == (a, b));
        (pair(q[0], q[1]) && pair(q[2], q[3]))
            || (pair(q[0], q[2]) && pair(q[1], q[3]))
            || (pair(q[0], q[3]) && pair(q[1], q[2]))
    };
    let idx: Vec<usize> = if verts.len() > GP_QUAD_CAP {
        (0..GP_QUAD_CAP).map(|k| k * verts.len() / GP_QUAD_CAP).collect()
    } else {
        (0..verts.len()).collect()
    };
    let m = idx.len();
    let mut min_vol = f64::INFINITY;
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                for d in c + 1..m {
                    let q = [verts[idx[a]], verts[idx[b]], verts[idx[c]], verts[idx[d]]];
                    let vol = quad_volume(pts[idx[a]], pts[idx[b]], pts[idx[c]], pts[idx[d]]);
                    if is_exempt(q) {
                        continue;
                    }
                    min_vol = min_vol.min(vol);
                    if vol < tol.eps_gp {
                        rep.gp_findings.push(GpFinding::Coplanar { quad: q, volume: vol });
                    }
                }
            }
        }
    }
    if m >= 4 {
        rep.min_volume = Some(min_vol);
    }
    rep.pass = rep.gp_findings.is_empty();
    rep
}

/// `Σ_{uv ∈ E} (|x_u - x_v| - 1)²` for coordinates flattened row-major
/// (`x[v*d..(v+1)*d]`).
pub fn lsq_objective(g: &Graph, d: usize, x: &[f64]) -> f64 {
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let r = dist(&x[u * d..(u + 1) * d], &x[v * d..(v + 1) * d]);
            (r - 1.0) * (r - 1.0)
        })
        .sum()
}

/// Gradient of [`lsq_objective`].
pub fn lsq_gradient(g: &Graph, d: usize, x: &[f64]) -> Vec<f64> {
    let mut grad = vec![0.0; x.len()];
    for (u, v) in g.edges() {
        let (xu, xv) = (&x[u * d..(u + 1) * d], &x[v * d..(v + 1) * d]);
        let r = dist(xu, xv).max(1e-12);
        let k = 2.0 * (r - 1.0) / r;
        for i in 0..d {
            let t = k * (xu[i] - xv[i]);
            grad[u * d + i] += t;
            grad[v * d + i] -= t;
        }
    }
    grad
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(p, q)| (p - q) * (p - q)).sum::<f64>().sqrt()
}

/// Residual threshold below which [`lsq_realize`] accepts a realization.
pub const LSQ_RESIDUAL: f64 = 1e-18;

/// Multi-start least-squares search for a unit-distance realization of `g`
/// in `R^d`. Each start runs gradient descent with Barzilai-Borwein steps and
/// Armijo backtracking. `None` is inconclusive.
pub fn lsq_realize<R: Rng + ?Sized>(
    g: &Graph,
    d: usize,
    rng: &mut R,
    restarts: usize,
    iters: usize,
) -> Option<Embedding> {
    let n = g.n();
    let scale = (n as f64).sqrt().max(1.0);
    for attempt in 0..restarts {
        let mut x: Vec<f64> = (0..n * d)
            .map(|_| scale * rng.sample::<f64, _>(StandardNormal))
            .collect();
        let f = descend(g, d, &mut x, iters);
        if f >= LSQ_RESIDUAL {
            continue;
        }
        let pts = (0..n).map(|v| Point::from_row_slice(&x[v * d..(v + 1) * d])).collect();
        let mut e = Embedding::from_points(d, pts);
        e.meta.retries = attempt;
        let tol = Tolerances {
            eps_edge: 1e-7,
            eps_distinct: 0.0,
            ..Tolerances::default()
        };
        if verify_edges(g, &e, &tol).is_ok_and(|r| r.pass) {
            return Some(e);
        }
    }
    None
}

fn descend(g: &Graph, d: usize, x: &mut [f64], iters: usize) -> f64 {
    let mut f = lsq_objective(g, d, x);
    let mut grad = lsq_gradient(g, d, x);
    let mut step = 0.1;
    for _ in 0..iters {
        if f < LSQ_RESIDUAL * 1e-4 {
            break;
        }
        let gg: f64 = grad.iter().map(|t| t * t).sum();
        if gg == 0.0 {
            break;
        }
        let mut t = step;
        let mut trial: Vec<f64>;
        let mut ft;
        loop {
            trial = x.iter().zip(&grad).map(|(a, b)| a - t * b).collect();
            ft = lsq_objective(g, d, &trial);
            if ft <= f - 1e-4 * t * gg || t < 1e-20 {
                break;
            }
            t *= 0.5;
        }
        if ft >= f {
            break;
        }
        let new_grad = lsq_gradient(g, d, &trial);
        let (mut sy, mut ss) = (0.0, 0.0);
        for i in 0..x.len() {
            let s = trial[i] - x[i];
            sy += s * (new_grad[i] - grad[i]);
            ss += s * s;
        }
        step = if sy > 0.0 { (ss / sy).clamp(1e-10, 1e6) } else { 2.0 * t };
        x.copy_from_slice(&trial);
        grad = new_grad;
        f = ft;
    }
    f
}
