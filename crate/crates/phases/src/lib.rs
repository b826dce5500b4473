//! Graph phases in 3-space: per-vertex vectors, the pairwise phase
//! matrices and their star-product identity, phase addition, capacity
//! and entropy with finite-difference consistency checks.

pub mod calculus;
pub mod error;
pub mod exact;
pub mod phase;
pub mod vec3;

pub use error::PhaseError;
pub use phase::{add_phases, GraphPhase, NormConvention, VecOp};
pub use vec3::Vec3;
