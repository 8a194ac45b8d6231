//! Closed-form geometric building blocks: frames of orthonormal vectors,
//! uniform sampling on subspheres, circle parametrisations, the points at
//! unit distance from a set of points, and regular simplices.

use std::f64::consts::FRAC_1_SQRT_2;

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{internal, precondition, Error, Result};

pub type Point = DVector<f64>;

/// Radius of the sphere every spherical embedding lives on. Two orthogonal
/// points on it are exactly at distance 1.
pub const SPHERE_RADIUS: f64 = FRAC_1_SQRT_2;

/// Relative tolerance for rank decisions.
pub const RANK_TOL: f64 = 1e-10;

/// Orthonormal vectors spanning a linear subspace of the ambient space.
#[derive(Clone, Debug, PartialEq)]
pub struct Frame {
    ambient: usize,
    basis: Vec<Point>,
}

impl Frame {
    /// The standard basis of `R^d`.
    pub fn standard(d: usize) -> Frame {
        let basis = (0..d)
            .map(|i| Point::from_fn(d, |r, _| if r == i { 1.0 } else { 0.0 }))
            .collect();
        Frame { ambient: d, basis }
    }

    /// Wraps vectors that are already orthonormal; checked to 1e-12.
    pub fn from_basis(ambient: usize, basis: Vec<Point>) -> Result<Frame> {
        if basis.iter().any(|b| b.len() != ambient) {
            return Err(precondition("frame vector has the wrong length"));
        }
        let f = Frame { ambient, basis };
        let err = f.gram_error();
        if err > 1e-12 {
            return Err(precondition(format!("frame is not orthonormal (Gram error {err:e})")));
        }
        Ok(f)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Point] {
        &self.basis
    }

    pub fn vector(&self, i: usize) -> &Point {
        &self.basis[i]
    }

    /// `Σ coeffs[i] · basis[i]`.
    pub fn point(&self, coeffs: &[f64]) -> Point {
        let mut p = Point::zeros(self.ambient);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            p.axpy(*c, b, 1.0);
        }
        p
    }

    /// Coefficients of the orthogonal projection of `p` onto the frame.
    pub fn coords(&self, p: &Point) -> Vec<f64> {
        self.basis.iter().map(|b| b.dot(p)).collect()
    }

    /// Sub-frame made of the basis vectors in `range`.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Frame {
        Frame {
            ambient: self.ambient,
            basis: self.basis[range].to_vec(),
        }
    }

    /// The first `k` vectors and the rest.
    pub fn split_at(&self, k: usize) -> (Frame, Frame) {
        (self.slice(0..k), self.slice(k..self.dim()))
    }

    /// Largest entry of `BᵀB - I`.
    pub fn gram_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, a) in self.basis.iter().enumerate() {
            for (j, b) in self.basis.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((a.dot(b) - target).abs());
            }
        }
        worst
    }
}

/// A sphere in the ambient space.
#[derive(Clone, Debug, PartialEq)]
pub struct SphereSpec {
    pub radius: f64,
    pub center: Point,
}

impl SphereSpec {
    /// The sphere of radius `1/√2` about the origin of `R^d`.
    pub fn standard(d: usize) -> SphereSpec {
        SphereSpec {
            radius: SPHERE_RADIUS,
            center: Point::zeros(d),
        }
    }
}

/// Pivoted Gram-Schmidt: extends `basis` (orthonormal) by the directions of
/// `vectors`, always taking the candidate with the largest residual next.
/// Residuals below `tol` count as rank deficiency.
fn extend_orthonormal(basis: &mut Vec<Point>, vectors: &[Point], tol: f64) {
    let mut residuals: Vec<Point> = vectors.to_vec();
    loop {
        for r in residuals.iter_mut() {
            for _ in 0..2 {
                for b in basis.iter() {
                    let c = b.dot(r);
                    r.axpy(-c, b, 1.0);
                }
            }
        }
        let Some((idx, norm)) = residuals
            .iter()
            .enumerate()
            .map(|(i, r)| (i, r.norm()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
        else {
            return;
        };
        if norm < tol {
            return;
        }
        let r = residuals.swap_remove(idx);
        basis.push(r / norm);
    }
}

/// Orthonormal basis of the span of `vectors` (rank decided at
/// `RANK_TOL` relative to the largest input).
pub fn orthonormal_span(vectors: &[Point]) -> Vec<Point> {
    let scale = vectors.iter().map(|v| v.norm()).fold(1.0, f64::max);
    let mut basis = Vec::new();
    extend_orthonormal(&mut basis, vectors, RANK_TOL * scale);
    basis
}

/// Orthonormal basis of the orthogonal complement of `span(vectors)` in
/// `R^d`.
pub fn orthonormal_complement(vectors: &[Point], d: usize) -> Result<Frame> {
    if vectors.iter().any(|v| v.len() != d) {
        return Err(precondition("vector length differs from the dimension"));
    }
    let mut basis = orthonormal_span(vectors);
    let rank = basis.len();
    if rank >= d {
        return Err(Error::FullSpan);
    }
    let std = Frame::standard(d);
    extend_orthonormal(&mut basis, std.basis(), 1e-3);
    if basis.len() != d {
        return Err(internal("complement construction lost a direction"));
    }
    Ok(Frame {
        ambient: d,
        basis: basis.split_off(rank),
    })
}

/// Orthogonal complement of `span(vectors)` inside the subspace spanned by
/// `frame`. Components of `vectors` outside the frame are ignored.
pub fn complement_in(frame: &Frame, vectors: &[Point]) -> Result<Frame> {
    let k = frame.dim();
    let local: Vec<Point> = vectors.iter().map(|v| Point::from_vec(frame.coords(v))).collect();
    let comp = orthonormal_complement(&local, k)?;
    let basis = comp.basis().iter().map(|c| frame.point(c.as_slice())).collect();
    Ok(Frame {
        ambient: frame.ambient,
        basis,
    })
}

/// Uniform point on `frame ∩ {|x| = radius}`: a normalised Gaussian
/// combination of the frame vectors.
pub fn sample_subsphere<R: Rng + ?Sized>(frame: &Frame, radius: f64, rng: &mut R) -> Result<Point> {
    if frame.dim() == 0 {
        return Err(precondition("cannot sample from an empty frame"));
    }
    loop {
        let g: Vec<f64> = (0..frame.dim()).map(|_| rng.sample(StandardNormal)).collect();
        let norm = g.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm < 1e-8 {
            continue;
        }
        let coeffs: Vec<f64> = g.iter().map(|x| x * radius / norm).collect();
        return Ok(frame.point(&coeffs));
    }
}

/// `radius · (cos θ · b1 + sin θ · b2)` on a two-vector frame.
pub fn circle_point(plane: &Frame, radius: f64, theta: f64) -> Point {
    assert_eq!(plane.dim(), 2, "circle_point needs a 2-dimensional frame");
    plane.point(&[radius * theta.cos(), radius * theta.sin()])
}

/// The two points at distance 1 from every point of a set spanning an
/// affine hyperplane.
#[derive(Clone, Debug, PartialEq)]
pub struct ApexPoints {
    pub plus: Point,
    pub minus: Point,
    /// True when the hyperplane passes through the origin, in which case both
    /// points lie on the sphere themselves.
    pub on_sphere: bool,
    /// Projection of the origin onto the hyperplane.
    pub center: Point,
    /// Radius of the subsphere cut out by the hyperplane.
    pub rho: f64,
}

/// Apex pair of `n`, a set of points on the radius-`1/√2` sphere of `R^d`
/// whose affine hull is a hyperplane.
///
/// With `c` the foot of the origin on the hull and `u` its unit normal,
/// the answer is `c ± √(1 - ρ²) u` where `ρ² = 1/2 - |c|²`. `plus` is on
/// the side of `c` (on the side of the first non-zero coordinate of `u` when
/// `c = 0`).
pub fn apex_points(n: &[Point], d: usize) -> Result<ApexPoints> {
    for (i, p) in n.iter().enumerate() {
        if p.len() != d {
            return Err(precondition("apex input has the wrong dimension"));
        }
        let dev = (p.norm() - SPHERE_RADIUS).abs();
        if dev > 1e-9 {
            return Err(Error::NotOnSphere {
                index: i,
                deviation: dev,
            });
        }
    }
    if n.is_empty() {
        return Err(Error::DegenerateSpan {
            found: 0,
            expected: d.saturating_sub(1),
        });
    }
    let p0 = &n[0];
    let dirs: Vec<Point> = n[1..].iter().map(|p| p - p0).collect();
    let span = orthonormal_span(&dirs);
    if span.len() + 1 != d {
        return Err(Error::DegenerateSpan {
            found: span.len(),
            expected: d - 1,
        });
    }
    let mut center = p0.clone();
    for q in &span {
        let c = q.dot(p0);
        center.axpy(-c, q, 1.0);
    }
    let normal_frame = orthonormal_complement(&span, d)?;
    let mut normal = normal_frame.vector(0).clone();
    let c_norm = center.norm();
    let flip = if c_norm > 1e-12 {
        normal.dot(&center) < 0.0
    } else {
        normal.iter().find(|x| x.abs() > 1e-12).is_some_and(|&x| x < 0.0)
    };
    if flip {
        normal = -normal;
    }
    let rho2 = (0.5 - c_norm * c_norm).max(0.0);
    let height = (1.0 - rho2).sqrt();
    let plus = &center + &normal * height;
    let minus = &center - &normal * height;
    for p in n {
        let worst = ((&plus - p).norm() - 1.0).abs().max(((&minus - p).norm() - 1.0).abs());
        if worst > 1e-10 {
            return Err(internal(format!("apex point misses a neighbour by {worst:e}")));
        }
    }
    Ok(ApexPoints {
        plus,
        minus,
        on_sphere: c_norm < 1e-10,
        center,
        rho: rho2.sqrt(),
    })
}

/// The set of points of a frame's subspace at distance 1 from every given
/// point: a sphere of dimension `frame.dim() - 1 - affdim` about `center`.
#[derive(Clone, Debug)]
pub struct UnitLocus {
    pub center: Point,
    pub radius: f64,
    /// Directions the locus extends in (orthogonal to the neighbours' hull).
    pub directions: Frame,
}

impl UnitLocus {
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Point> {
        if self.directions.dim() == 0 {
            return Ok(self.center.clone());
        }
        Ok(&self.center + sample_subsphere(&self.directions, self.radius, rng)?)
    }
}

/// Solves `|x - p| = 1` for all `p` in `nbrs` inside the subspace of
/// `frame` (the neighbours are assumed to lie in it).
///
/// Generalises [`apex_points`] to neighbour sets that are not on the sphere
/// or do not span a hyperplane.
pub fn unit_locus(nbrs: &[Point], frame: &Frame) -> Result<UnitLocus> {
    let ambient = frame.ambient_dim();
    if nbrs.is_empty() {
        return Err(precondition("unit locus of an empty set is the whole space"));
    }
    let p0 = &nbrs[0];
    let dirs: Vec<Point> = nbrs[1..].iter().map(|p| p - p0).collect();
    let span = orthonormal_span(&dirs);
    let r = span.len();
    // circumcenter p0 + Q a with 2 (p_i - p0)·Q a = |p_i - p0|²
    let offset = if r == 0 {
        Point::zeros(ambient)
    } else {
        let a = DMatrix::from_fn(dirs.len(), r, |i, j| 2.0 * dirs[i].dot(&span[j]));
        let b = DVector::from_fn(dirs.len(), |i, _| dirs[i].norm_squared());
        let sol = a
            .svd(true, true)
            .solve(&b, 1e-12)
            .map_err(|e| internal(e.to_string()))?;
        let mut off = Point::zeros(ambient);
        for (j, q) in span.iter().enumerate() {
            off.axpy(sol[j], q, 1.0);
        }
        off
    };
    let center = p0 + &offset;
    let rho = offset.norm();
    for p in nbrs {
        if ((&center - p).norm() - rho).abs() > 1e-9 {
            return Err(Error::DegenerateSpan { found: r, expected: r });
        }
    }
    if rho > 1.0 - 1e-12 {
        return Err(precondition(format!("neighbours have circumradius {rho} ≥ 1")));
    }
    let directions = complement_in(frame, &span).map_err(|_| Error::DegenerateSpan { found: r, expected: r })?;
    Ok(UnitLocus {
        center,
        radius: (1.0 - rho * rho).sqrt(),
        directions,
    })
}

/// `m` points of `R^d` with all pairwise distances `edge`, built by lifting
/// each new vertex above the centroid of the previous ones.
pub fn regular_simplex(m: usize, d: usize, edge: f64) -> Result<Vec<Point>> {
    if m > d + 1 {
        return Err(precondition(format!(
            "{m} simplex vertices do not fit in dimension {d}"
        )));
    }
    let mut pts: Vec<Point> = Vec::with_capacity(m);
    for k in 0..m {
        if k == 0 {
            pts.push(Point::zeros(d));
            continue;
        }
        let mut centroid = Point::zeros(d);
        for p in &pts {
            centroid += p;
        }
        centroid /= k as f64;
        let r2 = (&pts[0] - &centroid).norm_squared();
        let mut p = centroid;
        p[k - 1] = (edge * edge - r2).sqrt();
        pts.push(p);
    }
    Ok(pts)
}

/// `K_{d+2} - e` in `R^d`: a unit regular simplex facet of `d` points and two
/// apexes mirrored through it. The last two points are the non-adjacent
/// pair, at distance `2√((d+1)/(2d))`, strictly between 1 and 2.
pub fn glued_simplices(d: usize) -> Result<Vec<Point>> {
    if d < 2 {
        return Err(precondition("glued simplices need d ≥ 2"));
    }
    let mut pts = regular_simplex(d, d, 1.0)?;
    let mut centroid = Point::zeros(d);
    for p in &pts {
        centroid += p;
    }
    centroid /= d as f64;
    let r2 = (&pts[0] - &centroid).norm_squared();
    let h = (1.0 - r2).sqrt();
    let mut up = centroid.clone();
    up[d - 1] += h;
    let mut down = centroid;
    down[d - 1] -= h;
    let gap = (&up - &down).norm();
    if !(gap > 0.0 && gap < 2.0 && (gap - 1.0).abs() > 1e-9) {
        return Err(internal(format!("apex distance {gap} outside (0, 2) or equal to 1")));
    }
    pts.push(up);
    pts.push(down);
    Ok(pts)
}

/// `m` mutually orthogonal points `b_i / √2` of a frame: pairwise at
/// distance 1, all on the sphere.
pub fn orthobasis_clique(m: usize, frame: &Frame) -> Result<Vec<Point>> {
    if m > frame.dim() {
        return Err(precondition(format!(
            "{m} orthogonal points need a frame of dimension ≥ {m}"
        )));
    }
    Ok(frame.basis()[..m].iter().map(|b| b * SPHERE_RADIUS).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(v: &[f64]) -> Point {
        Point::from_row_slice(v)
    }

    #[test]
    fn complement_of_e1() {
        let f = orthonormal_complement(&[p(&[1.0, 0.0, 0.0])], 3).unwrap();
        assert_eq!(f.dim(), 2);
        assert!(f.gram_error() < 1e-12);
        assert!(f.basis().iter().all(|b| b[0].abs() < 1e-12));
    }

    #[test]
    fn complement_of_nothing() {
        let f = orthonormal_complement(&[], 2).unwrap();
        assert_eq!(f.dim(), 2);
    }

    #[test]
    fn near_parallel_vectors_are_rank_one() {
        let v = [p(&[1.0, 0.0, 0.0]), p(&[1.0, 1e-14, 0.0])];
        let f = orthonormal_complement(&v, 3).unwrap();
        assert_eq!(f.dim(), 2);
        for b in f.basis() {
            assert!(b.dot(&v[0]).abs() < 1e-10);
            assert!(b.dot(&v[1]).abs() < 1e-10);
        }
    }

    #[test]
    fn full_span_is_an_error() {
        let v = [p(&[1.0, 0.0]), p(&[0.0, 1.0])];
        assert!(matches!(orthonormal_complement(&v, 2), Err(Error::FullSpan)));
    }

    #[test]
    fn subsphere_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let line = Frame::from_basis(2, vec![p(&[0.6, 0.8])]).unwrap();
        for _ in 0..20 {
            let x = sample_subsphere(&line, 2.0, &mut rng).unwrap();
            assert!((x.norm() - 2.0).abs() < 1e-12);
            assert!((x[0].abs() - 1.2).abs() < 1e-12);
        }
        let x = sample_subsphere(&Frame::standard(2), SPHERE_RADIUS, &mut rng).unwrap();
        assert!((x.norm_squared() - 0.5).abs() < 1e-12);
        let f = orthonormal_complement(&[p(&[1.0, 0.0, 0.0])], 3).unwrap();
        let x = sample_subsphere(&f, SPHERE_RADIUS, &mut rng).unwrap();
        assert!(x[0].abs() < 1e-12);
    }

    #[test]
    fn circle_chords() {
        let plane = Frame::standard(2);
        let a = circle_point(&plane, SPHERE_RADIUS, 0.0);
        let b = circle_point(&plane, SPHERE_RADIUS, std::f64::consts::FRAC_PI_2);
        assert!(((&a - &b).norm() - 1.0).abs() < 1e-15);
        let c = circle_point(&plane, SPHERE_RADIUS, std::f64::consts::PI);
        assert!((&a + &c).norm() < 1e-15);
        let e = circle_point(&plane, SPHERE_RADIUS, std::f64::consts::FRAC_PI_3);
        assert!(((&a - &e).norm() - SPHERE_RADIUS).abs() < 1e-15);
    }

    #[test]
    fn apex_over_orthogonal_triangle() {
        let r = SPHERE_RADIUS;
        let n = [p(&[r, 0.0, 0.0]), p(&[0.0, r, 0.0]), p(&[0.0, 0.0, r])];
        let a = apex_points(&n, 3).unwrap();
        assert!(!a.on_sphere);
        let q = 2f64.sqrt() / 6.0;
        assert!((&a.plus - p(&[r, r, r])).norm() < 1e-12);
        assert!((&a.minus - p(&[-q, -q, -q])).norm() < 1e-12);
    }

    #[test]
    fn apex_poles_of_great_circle() {
        let r = SPHERE_RADIUS;
        let n = [p(&[r, 0.0, 0.0]), p(&[-r, 0.0, 0.0]), p(&[0.0, r, 0.0])];
        let a = apex_points(&n, 3).unwrap();
        assert!(a.on_sphere);
        assert!((&a.plus - p(&[0.0, 0.0, r])).norm() < 1e-12);
        assert!((&a.minus - p(&[0.0, 0.0, -r])).norm() < 1e-12);
    }

    #[test]
    fn apex_in_the_plane() {
        let r = SPHERE_RADIUS;
        let a = apex_points(&[p(&[r, 0.0]), p(&[0.0, r])], 2).unwrap();
        let k = (1.0 + 3f64.sqrt()) / (2.0 * 2f64.sqrt());
        assert!((&a.plus - p(&[k, k])).norm() < 1e-12);
        assert!(!a.on_sphere);
    }

    #[test]
    fn apex_errors() {
        let r = SPHERE_RADIUS;
        assert!(matches!(
            apex_points(&[p(&[r, 0.0, 0.0]), p(&[0.0, r, 0.0])], 3),
            Err(Error::DegenerateSpan { .. })
        ));
        assert!(matches!(
            apex_points(&[p(&[1.0, 0.0]), p(&[0.0, r])], 2),
            Err(Error::NotOnSphere { index: 0, .. })
        ));
    }

    #[test]
    fn unit_locus_matches_apex() {
        let r = SPHERE_RADIUS;
        let n = [p(&[r, 0.0, 0.0]), p(&[0.0, r, 0.0]), p(&[0.0, 0.0, r])];
        let loc = unit_locus(&n, &Frame::standard(3)).unwrap();
        assert_eq!(loc.directions.dim(), 1);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let x = loc.sample(&mut rng).unwrap();
        for q in &n {
            assert!(((&x - q).norm() - 1.0).abs() < 1e-12);
        }
        // two points at distance 1 in the plane: locus is a pair of points
        let loc = unit_locus(&[p(&[0.0, 0.0]), p(&[1.0, 0.0])], &Frame::standard(2)).unwrap();
        assert!((loc.radius - 3f64.sqrt() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn simplices() {
        let s = regular_simplex(2, 1, 1.0).unwrap();
        assert_eq!(s, vec![p(&[0.0]), p(&[1.0])]);
        for (m, d) in [(3, 2), (5, 4), (8, 7)] {
            let s = regular_simplex(m, d, 1.0).unwrap();
            for i in 0..m {
                for j in i + 1..m {
                    assert!(((&s[i] - &s[j]).norm() - 1.0).abs() < 1e-12);
                }
            }
        }
        assert!(regular_simplex(4, 2, 1.0).is_err());
    }

    #[test]
    fn glued_simplex_shapes() {
        let g = glued_simplices(2).unwrap();
        let h = 3f64.sqrt() / 2.0;
        let want = [p(&[0.0, 0.0]), p(&[1.0, 0.0]), p(&[0.5, h]), p(&[0.5, -h])];
        for (a, b) in g.iter().zip(&want) {
            assert!((a - b).norm() < 1e-12);
        }
        let g = glued_simplices(3).unwrap();
        assert!(((&g[3] - &g[4]).norm() - 2.0 * (2.0f64 / 3.0).sqrt()).abs() < 1e-12);
        let g = glued_simplices(4).unwrap();
        let mut unit = 0;
        for i in 0..6 {
            for j in i + 1..6 {
                if ((&g[i] - &g[j]).norm() - 1.0).abs() < 1e-12 {
                    unit += 1;
                }
            }
        }
        assert_eq!(unit, 14);
    }

    #[test]
    fn orthobasis_points() {
        let pts = orthobasis_clique(2, &Frame::standard(2)).unwrap();
        assert_eq!(pts, vec![p(&[SPHERE_RADIUS, 0.0]), p(&[0.0, SPHERE_RADIUS])]);
        let f = Frame::standard(5).slice(1..4);
        let pts = orthobasis_clique(3, &f).unwrap();
        assert!(((&pts[0] - &pts[2]).norm() - 1.0).abs() < 1e-15);
        assert_eq!(orthobasis_clique(1, &f).unwrap().len(), 1);
        assert!(orthobasis_clique(4, &f).is_err());
    }
}
