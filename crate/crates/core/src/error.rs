use std::fmt;

/// Errors raised by graph construction and the brute-force searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoreError {
    /// An endpoint id is outside `[0, vertex_count)`.
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    /// The operation needs a connected graph.
    Disconnected,
    /// The operation needs a simple graph.
    NotSimple,
    /// The operation needs a loopless graph.
    HasLoops,
    /// An enumeration would exceed the configured budget.
    BudgetExceeded { needed: u128, budget: u128 },
    /// The input fails a documented precondition.
    InvalidInput(String),
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::VertexOutOfRange { vertex, vertex_count } => {
                write!(f, "vertex {vertex} out of range (vertex count {vertex_count})")
            }
            CoreError::Disconnected => write!(f, "graph is disconnected"),
            CoreError::NotSimple => write!(f, "graph is not simple"),
            CoreError::HasLoops => write!(f, "graph has loops"),
            CoreError::BudgetExceeded { needed, budget } => {
                write!(f, "enumeration needs {needed} candidates, budget is {budget}")
            }
            CoreError::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
        }
    }
}

impl std::error::Error for CoreError {}
