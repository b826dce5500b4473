//! Multigraphs with semi-arcs, degree-sequence tests, eccentricity
//! machinery, hamiltonicity utilities, graph operations and edge
//! decompositions.

pub mod decomp;
pub mod ecc;
pub mod error;
pub mod graph;
pub mod ham;
pub mod iso;
pub mod ops;
pub mod semiarc;
pub mod seq;

pub use error::CoreError;
pub use graph::{Multigraph, SemiArc};
