//! Graphs in higher-dimensional manifolds: space permutations,
//! rectilinear embeddings, planar block numbers, multi-embedding
//! feasibility arithmetic, and manifold graphs.

pub mod blocks;
pub mod error;
pub mod feasible;
pub mod manifold;
pub mod rectilinear;
pub mod space;

pub use error::SpatialError;
pub use manifold::ManifoldGraph;
