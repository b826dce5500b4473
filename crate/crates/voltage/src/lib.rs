//! Multi-voltage graphs of type 1 and 2, their lifting graphs, walk
//! lifting, subactions, quotients and voltage reconstruction.

pub mod bouquet;
pub mod error;
pub mod quotient;
pub mod type1;
pub mod type2;

pub use error::VoltageError;
pub use type1::{LiftedGraph, MultiVoltage1};
pub use type2::{LiftedGraph2, MultiVoltage2};
