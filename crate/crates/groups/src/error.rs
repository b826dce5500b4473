use crate::group::GroupDefect;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    /// The operation table fails a group axiom.
    NotAGroup(GroupDefect),
    /// Table rows and the element list disagree in length.
    RaggedTable,
    /// A label or element id is not part of the structure.
    UnknownElement(String),
    /// A connection set breaks the Cayley preconditions.
    BadConnectionSet(String),
    /// Constituent index out of range.
    NoSuchConstituent(usize),
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::NotAGroup(d) => write!(f, "not a group: {d}"),
            GroupError::RaggedTable => write!(f, "operation table is ragged"),
            GroupError::UnknownElement(s) => write!(f, "unknown element {s}"),
            GroupError::BadConnectionSet(s) => write!(f, "bad connection set: {s}"),
            GroupError::NoSuchConstituent(i) => write!(f, "no constituent with index {i}"),
        }
    }
}

impl std::error::Error for GroupError {}
