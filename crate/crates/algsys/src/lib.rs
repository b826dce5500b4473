//! Weighted-digraph models of (partial) binary systems: the associated
//! graph, its structural property detectors, Euler analysis, and
//! multi-space unions.

pub mod analyze;
pub mod digraph;
pub mod error;
pub mod model;
pub mod system;

pub use analyze::{analyze_properties, euler_analysis, EulerReport, PropertyReport};
pub use digraph::{Arc, WeightedDigraph};
pub use error::AlgsysError;
pub use model::{graph_model, multispace_graph, reconstruct_system};
pub use system::PartialBinarySystem;
