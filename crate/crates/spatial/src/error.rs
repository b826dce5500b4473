use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpatialError {
    /// Dimension parameter out of the supported range.
    BadDimension(usize),
    /// Genus list entries must be positive for the feasibility bounds.
    ZeroGenus,
    /// Enumeration exceeds its budget.
    BudgetExceeded { needed: u128, budget: u128 },
    /// A cell permutation breaks the manifold-graph axioms; carries the
    /// witness description.
    InvalidManifoldGraph(String),
    /// Documented precondition violated.
    InvalidInput(String),
}

impl fmt::Display for SpatialError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpatialError::BadDimension(n) => write!(f, "dimension {n} unsupported"),
            SpatialError::ZeroGenus => write!(f, "face genus must be at least 1"),
            SpatialError::BudgetExceeded { needed, budget } => {
                write!(f, "needs {needed}, budget {budget}")
            }
            SpatialError::InvalidManifoldGraph(s) => write!(f, "invalid manifold graph: {s}"),
            SpatialError::InvalidInput(s) => write!(f, "invalid input: {s}"),
        }
    }
}

impl std::error::Error for SpatialError {}
