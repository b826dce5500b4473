use crate::map::MapDefect;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapError {
    /// The permutation data is not a permutation of the quadricell set.
    MalformedPermutation(String),
    /// A map axiom fails.
    InvalidMap(MapDefect),
    /// Rotation data does not cover the incident semi-arcs correctly.
    MalformedRotation(String),
    /// Enumeration would exceed the budget.
    BudgetExceeded { needed: u128, budget: u128 },
    /// Documented precondition violated.
    InvalidInput(String),
}

impl fmt::Display for MapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapError::MalformedPermutation(s) => write!(f, "malformed permutation: {s}"),
            MapError::InvalidMap(d) => write!(f, "invalid map: {d}"),
            MapError::MalformedRotation(s) => write!(f, "malformed rotation: {s}"),
            MapError::BudgetExceeded { needed, budget } => {
                write!(f, "enumeration needs {needed}, budget {budget}")
            }
            MapError::InvalidInput(s) => write!(f, "invalid input: {s}"),
        }
    }
}

impl std::error::Error for MapError {}
