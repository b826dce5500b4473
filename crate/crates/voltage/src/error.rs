use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VoltageError {
    /// A voltage value lies outside the universe or its constituent.
    BadVoltage(String),
    /// The walk is not a walk of the base graph.
    NotAWalk(String),
    /// The vertex partition of a type-2 assignment is broken.
    BadPartition(String),
    /// A supplied permutation is not an automorphism, or the action is
    /// not fixed-free; carries a witness.
    BadAction(String),
    /// Documented precondition violated.
    InvalidInput(String),
}

impl fmt::Display for VoltageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VoltageError::BadVoltage(s) => write!(f, "bad voltage: {s}"),
            VoltageError::NotAWalk(s) => write!(f, "not a walk: {s}"),
            VoltageError::BadPartition(s) => write!(f, "bad partition: {s}"),
            VoltageError::BadAction(s) => write!(f, "bad action: {s}"),
            VoltageError::InvalidInput(s) => write!(f, "invalid input: {s}"),
        }
    }
}

impl std::error::Error for VoltageError {}
