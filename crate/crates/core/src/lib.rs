//! Unit distance embeddings of graphs.
//!
//! Given a finite simple graph and a dimension `d`, the embedders in this
//! crate produce explicit coordinates in which every edge has length exactly
//! 1, either in `R^d` or on the sphere of radius `1/√2` about the origin.
//! Every construction is checked numerically before it is returned.

pub mod cli;
pub mod embedding;
pub mod error;
pub mod euclid;
pub mod geom;
pub mod graph;
pub mod io;
pub mod partition;
pub mod ramsey;
pub mod sphere;
pub mod verify;

pub use embedding::{EmbedMeta, Embedding};
pub use error::{Error, Result};
pub use graph::Graph;
