//! Finite groups and multi-groups as operation tables, their Cayley
//! graphs, and factorizations.

pub mod cayley;
pub mod error;
pub mod flow;
pub mod group;
pub mod multigroup;

pub use cayley::{
    cayley_graph, cayley_graph_multigroup, factorize_cayley, is_multigroup_cayley_connected,
    vertex_transitivity_witness, CayleyFactor, FactorKind, MultiCayley,
};
pub use error::GroupError;
pub use group::{FiniteGroup, GroupDefect};
pub use multigroup::MultiGroup;
