use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum PhaseError {
    /// Two adjacent vertices share a position, so a denominator vanishes.
    CoincidentAdjacentVertices { edge: usize },
    /// Entropy needs every vertex vector to have positive norm.
    ZeroNormVertex { vertex: usize },
    /// Incompatible graphs or dimensions.
    InvalidInput(String),
}

impl fmt::Display for PhaseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhaseError::CoincidentAdjacentVertices { edge } => {
                write!(f, "edge {edge} joins coincident vertex vectors")
            }
            PhaseError::ZeroNormVertex { vertex } => {
                write!(f, "vertex {vertex} has a zero-norm vector")
            }
            PhaseError::InvalidInput(s) => write!(f, "invalid input: {s}"),
        }
    }
}

impl std::error::Error for PhaseError {}
