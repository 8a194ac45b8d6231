use thiserror::Error;

/// Errors raised by the graph routines, the embedders and the file formats.
#[derive(Debug, Error)]
pub enum Error {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("search exceeded {0} nodes without a decision")]
    DidNotDecide(u64),

    #[error("vectors span the whole space; orthogonal complement is trivial")]
    FullSpan,

    #[error("points span an affine subspace of dimension {found}, expected {expected}")]
    DegenerateSpan { found: usize, expected: usize },

    #[error("point {index} is off the sphere by {deviation:e}")]
    NotOnSphere { index: usize, deviation: f64 },

    #[error("{what}: no acceptable sample after {attempts} attempts")]
    ResampleExceeded { what: &'static str, attempts: usize },

    #[error("graph has a K_{{3,3}} component, which has no unit distance realization in 3-space")]
    K33Excluded,

    #[error("graph is not {0}-degenerate")]
    NotDegenerate(usize),

    #[error("graph has {edges} edges, more than the bound {bound} for dimension {dim}")]
    TooManyEdges { edges: usize, bound: usize, dim: usize },

    #[error("graph contains {0}, which has no realization on the sphere of this dimension")]
    ForbiddenSubgraphForSphere(String),

    #[error("branch excluded by the edge-count argument was reached: {0}")]
    UnreachableByTheorem(String),

    #[error("internal assertion failed: {0}")]
    InternalAssertionFailed(String),

    #[error("vertex {0} has no coordinates")]
    MissingVertex(usize),

    #[error("no implemented construction applies: {0}")]
    NoApplicableTheorem(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::PreconditionViolated(msg.into())
}

pub(crate) fn internal(msg: impl Into<String>) -> Error {
    Error::InternalAssertionFailed(msg.into())
}
