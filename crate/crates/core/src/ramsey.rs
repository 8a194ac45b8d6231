//! Two-colourings of complete graphs: embedding one colour class on a small
//! sphere or in a small Euclidean space, and the graphs showing those
//! dimensions cannot be lowered.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::embedding::Embedding;
use crate::error::{precondition, Error, Result};
use crate::geom::{orthobasis_clique, unit_locus, Frame, Point, SPHERE_RADIUS};
use crate::graph::Graph;
use crate::sphere::{max_degree_sphere_into, place_peeled_vertex_in, MIN_SEPARATION, PLACE_TRIES};
use crate::verify::certify;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

/// A red/blue colouring of the edges of `K_s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    s: usize,
    colors: Vec<Color>,
}

impl Coloring {
    pub fn uniform(s: usize, c: Color) -> Self {
        Coloring {
            s,
            colors: vec![c; s * s.saturating_sub(1) / 2],
        }
    }

    /// Pairs taken in lexicographic order; bit `k` of `bits` set means the
    /// `k`-th pair is blue.
    pub fn from_index(s: usize, bits: u64) -> Self {
        let mut c = Coloring::uniform(s, Color::Red);
        for (k, slot) in c.colors.iter_mut().enumerate() {
            if bits >> k & 1 == 1 {
                *slot = Color::Blue;
            }
        }
        c
    }

    /// Red edges are those of `g`.
    pub fn from_red_graph(g: &Graph) -> Self {
        let mut c = Coloring::uniform(g.n(), Color::Blue);
        for (u, v) in g.edges() {
            c.set(u, v, Color::Red);
        }
        c
    }

    pub fn s(&self) -> usize {
        self.s
    }

    fn slot(&self, u: usize, v: usize) -> usize {
        assert!(
            u != v && u < self.s && v < self.s,
            "pair ({u}, {v}) outside K_{}",
            self.s
        );
        let (a, b) = (u.min(v), u.max(v));
        a * (2 * self.s - a - 1) / 2 + (b - a - 1)
    }

    pub fn get(&self, u: usize, v: usize) -> Color {
        self.colors[self.slot(u, v)]
    }

    pub fn set(&mut self, u: usize, v: usize, c: Color) {
        let k = self.slot(u, v);
        self.colors[k] = c;
    }

    /// The graph of the edges of colour `c`.
    pub fn graph(&self, c: Color) -> Graph {
        let mut g = Graph::new(self.s);
        for u in 0..self.s {
            for v in u + 1..self.s {
                if self.get(u, v) == c {
                    g.add_edge(u, v).expect("valid pair");
                }
            }
        }
        g
    }
}

/// Sphere dimension used for `K_s`: `⌈(s+1)/2⌉`.
pub fn spherical_dim(s: usize) -> usize {
    (s + 2) / 2
}

/// Euclidean dimension used for `K_s`: `⌈s/2⌉`, at least 1.
pub fn euclidean_dim(s: usize) -> usize {
    s.div_ceil(2).max(1)
}

/// Embeds the red or the blue graph on the sphere of radius `1/√2` in
/// `R^d`, `d = ⌈(s+1)/2⌉`.
///
/// If a class has maximum degree below `d` it is embedded directly (red
/// first). Otherwise two vertices of high red and high blue degree are set
/// aside, the rest is handled one dimension lower, and the two go to the
/// poles, or one to the lower sphere and one to a pole.
pub fn ramsey_spherical<R: Rng + ?Sized>(col: &Coloring, rng: &mut R) -> Result<(Color, Embedding)> {
    let d = spherical_dim(col.s());
    let graphs = [col.graph(Color::Red), col.graph(Color::Blue)];
    let mut e = Embedding::new(col.s(), d);
    let verts: Vec<usize> = (0..col.s()).collect();
    let c = spherical_rec(col, &graphs, &verts, &Frame::standard(d), &mut e, rng)?;
    certify(&graphs[c as usize], &e, true)?;
    Ok((c, e))
}

fn spherical_rec<R: Rng + ?Sized>(
    col: &Coloring,
    graphs: &[Graph; 2],
    verts: &[usize],
    frame: &Frame,
    e: &mut Embedding,
    rng: &mut R,
) -> Result<Color> {
    let m = frame.dim();
    if verts.len() + 1 > 2 * m {
        return Err(precondition(format!("{} vertices exceed 2·{m} - 1", verts.len())));
    }
    if verts.len() <= 1 {
        for &v in verts {
            e.set(v, frame.vector(0) * SPHERE_RADIUS);
        }
        return Ok(Color::Red);
    }
    let sub = [graphs[0].induced(verts), graphs[1].induced(verts)];
    for c in [Color::Red, Color::Blue] {
        if sub[c as usize].max_degree() < m {
            max_degree_sphere_into(&graphs[c as usize], verts, frame, e, rng)?;
            return Ok(c);
        }
    }
    let pick = |h: &Graph| {
        (0..verts.len())
            .max_by_key(|&i| (h.degree(i), std::cmp::Reverse(i)))
            .unwrap()
    };
    let (vr, vb) = (verts[pick(&sub[0])], verts[pick(&sub[1])]);
    let rest: Vec<usize> = verts.iter().copied().filter(|&v| v != vr && v != vb).collect();
    let (lower, pole) = frame.split_at(m - 1);
    let pole = pole.vector(0) * SPHERE_RADIUS;
    let c = spherical_rec(col, graphs, &rest, &lower, e, rng)?;
    if col.get(vr, vb) != c {
        e.set(vr, pole.clone());
        e.set(vb, -pole);
    } else {
        let (inner, outer) = if c == Color::Red { (vb, vr) } else { (vr, vb) };
        let nbrs: Vec<Point> = graphs[c as usize]
            .neighbors(inner)
            .iter()
            .filter(|u| rest.contains(u))
            .map(|&u| e.point(u).clone())
            .collect();
        let x = place_peeled_vertex_in(e, &nbrs, &lower, rng)?;
        e.set(inner, x);
        e.set(outer, pole);
    }
    Ok(c)
}

/// Embeds the red or the blue graph in `R^d`, `d = ⌈s/2⌉`.
///
/// The class with at most `d` vertices of degree `≥ d` is chosen (red when
/// both qualify). Those vertices go on the sphere as an orthonormal frame;
/// low-degree vertices with a low-degree neighbour join them on the sphere
/// one at a time, and the remaining independent ones are placed off the
/// sphere at distance 1 from their neighbours.
pub fn ramsey_euclidean<R: Rng + ?Sized>(col: &Coloring, rng: &mut R) -> Result<(Color, Embedding)> {
    let s = col.s();
    let d = euclidean_dim(s);
    let frame = Frame::standard(d);
    let graphs = [col.graph(Color::Red), col.graph(Color::Blue)];
    let high = |g: &Graph| (0..s).filter(|&v| g.degree(v) >= d).count();
    let c = if high(&graphs[0]) <= d { Color::Red } else { Color::Blue };
    let g = &graphs[c as usize];
    let mut e = Embedding::new(s, d);
    let u: Vec<usize> = (0..s).filter(|&v| g.degree(v) >= d).collect();
    for (&v, p) in u.iter().zip(orthobasis_clique(u.len(), &frame)?) {
        e.set(v, p);
    }
    let mut w: Vec<usize> = (0..s).filter(|&v| g.degree(v) < d).collect();
    while let Some(pos) = w.iter().position(|&x| g.neighbors(x).iter().any(|y| w.contains(y))) {
        let x = w.remove(pos);
        let nbrs: Vec<Point> = g.neighbors(x).iter().filter_map(|&y| e.get(y).cloned()).collect();
        let p = place_peeled_vertex_in(&e, &nbrs, &frame, rng)?;
        e.set(x, p);
    }
    for x in w {
        let nbrs: Vec<Point> = g.neighbors(x).iter().map(|&y| e.point(y).clone()).collect();
        let locus = if nbrs.is_empty() {
            None
        } else {
            Some(unit_locus(&nbrs, &frame)?)
        };
        let mut placed = false;
        for _ in 0..PLACE_TRIES {
            let p = match &locus {
                Some(l) => l.sample(rng)?,
                None => Point::from_fn(d, |_, _| rng.sample::<f64, _>(StandardNormal)),
            };
            if !e.occupied(&p, MIN_SEPARATION) {
                e.set(x, p);
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(Error::ResampleExceeded {
                what: "independent vertex placement",
                attempts: PLACE_TRIES,
            });
        }
    }
    certify(g, &e, false)?;
    Ok((c, e))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessMode {
    Spherical,
    Euclidean,
}

/// `K_{d+1}` plus `d - 1` isolated vertices (spherical), or `K_{d+2}` plus
/// `d` isolated vertices (Euclidean): neither the graph nor its complement
/// embeds in the corresponding space of dimension `d`.
pub fn witness(mode: WitnessMode, d: usize) -> Graph {
    let (k, extra) = match mode {
        WitnessMode::Spherical => (d + 1, d.saturating_sub(1)),
        WitnessMode::Euclidean => (d + 2, d),
    };
    Graph::complete(k).disjoint_union(&Graph::new(extra))
}

/// Outcome of running a construction on every colouring of `K_s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExhaustiveSummary {
    pub s: usize,
    pub total: u64,
    pub passed: u64,
    /// Indices (see [`Coloring::from_index`]) of colourings that failed.
    pub failures: Vec<u64>,
}

/// Runs the spherical or Euclidean construction on all `2^{C(s,2)}`
/// colourings of `K_s` in parallel. Colouring `i` uses the seed
/// `seed + i`, so the result does not depend on scheduling.
pub fn ramsey_exhaustive(s: usize, mode: WitnessMode, seed: u64) -> Result<ExhaustiveSummary> {
    let pairs = s * s.saturating_sub(1) / 2;
    if pairs > 24 {
        return Err(precondition(format!("2^{pairs} colourings is too many to enumerate")));
    }
    let total = 1u64 << pairs;
    let mut failures: Vec<u64> = (0..total)
        .into_par_iter()
        .filter(|&i| {
            let col = Coloring::from_index(s, i);
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i));
            let r = match mode {
                WitnessMode::Spherical => ramsey_spherical(&col, &mut rng).map(|_| ()),
                WitnessMode::Euclidean => ramsey_euclidean(&col, &mut rng).map(|_| ()),
            };
            r.is_err()
        })
        .collect();
    failures.sort_unstable();
    Ok(ExhaustiveSummary {
        s,
        total,
        passed: total - failures.len() as u64,
        failures,
    })
}
