use crate::geom::Point;

/// Book-keeping attached to an embedding: resample counts and a short
/// trace of the construction steps taken.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct EmbedMeta {
    pub retries: usize,
    pub trace: Vec<String>,
}

/// Coordinates for (some of) the vertices `0..n` of a graph, all in `R^dim`.
#[derive(Clone, Debug, PartialEq)]
pub struct Embedding {
    dim: usize,
    points: Vec<Option<Point>>,
    pub meta: EmbedMeta,
}

impl Embedding {
    pub fn new(n: usize, dim: usize) -> Self {
        Embedding {
            dim,
            points: vec![None; n],
            meta: EmbedMeta::default(),
        }
    }

    pub fn from_points(dim: usize, points: Vec<Point>) -> Self {
        assert!(points.iter().all(|p| p.len() == dim), "point dimension mismatch");
        Embedding {
            dim,
            points: points.into_iter().map(Some).collect(),
            meta: EmbedMeta::default(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of vertex slots.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn set(&mut self, v: usize, p: Point) {
        assert_eq!(p.len(), self.dim, "point dimension mismatch");
        self.points[v] = Some(p);
    }

    pub fn get(&self, v: usize) -> Option<&Point> {
        self.points.get(v).and_then(Option::as_ref)
    }

    /// Coordinates of `v`; panics when `v` is not placed.
    pub fn point(&self, v: usize) -> &Point {
        self.get(v).unwrap_or_else(|| panic!("vertex {v} is not embedded"))
    }

    pub fn is_placed(&self, v: usize) -> bool {
        self.get(v).is_some()
    }

    /// Placed vertices with their coordinates, by vertex id.
    pub fn placed(&self) -> impl Iterator<Item = (usize, &Point)> {
        self.points
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.as_ref().map(|p| (v, p)))
    }

    /// True when some placed vertex is within `eps` of `x`.
    pub fn occupied(&self, x: &Point, eps: f64) -> bool {
        self.placed().any(|(_, p)| (p - x).norm() < eps)
    }

    pub(crate) fn note(&mut self, msg: impl Into<String>) {
        self.meta.trace.push(msg.into());
    }
}
