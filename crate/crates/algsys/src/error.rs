use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgsysError {
    /// Table rows and the element list disagree.
    RaggedTable,
    /// A table entry leaves the element list.
    NotClosed { row: usize, col: usize },
    /// Unknown element label.
    UnknownElement(String),
    /// Two arcs from one vertex share a weight but point at different
    /// heads, so no partial table exists.
    ConflictingArcs { from: usize, weight: (usize, usize), heads: (usize, usize) },
}

impl fmt::Display for AlgsysError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgsysError::RaggedTable => write!(f, "ragged table"),
            AlgsysError::NotClosed { row, col } => {
                write!(f, "entry ({row},{col}) leaves the element set")
            }
            AlgsysError::UnknownElement(s) => write!(f, "unknown element {s}"),
            AlgsysError::ConflictingArcs { from, weight, heads } => write!(
                f,
                "arcs from {from} with weight op{}:{} go to both {} and {}",
                weight.0, weight.1, heads.0, heads.1
            ),
        }
    }
}

impl std::error::Error for AlgsysError {}
