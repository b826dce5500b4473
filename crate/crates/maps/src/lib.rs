//! Combinatorial maps as quadricell permutation systems: rotation
//! systems, embedding censuses, genus machinery, map surgeries, rooted
//! counting and multi-voltage map liftings.

pub mod census;
pub mod error;
pub mod genus;
pub mod lift;
pub mod map;
pub mod platonic;
pub mod rooted;
pub mod rotation;
pub mod surgery;

pub use census::{enumerate_embeddings, EmbeddingCensus, DEFAULT_CENSUS_BUDGET};
pub use error::MapError;
pub use map::{CombinatorialMap, MapDefect, Quadricell, SurfaceKind};
pub use rotation::RotationSystem;
