//! Cayley graphs as bouquet liftings.

use crate::error::VoltageError;
use crate::type1::{LiftedGraph, MultiVoltage1};
use msg_core::Multigraph;
use msg_groups::{cayley_graph_multigroup, MultiCayley, MultiGroup};

/// The bouquet assignment realizing a multi-group Cayley graph: one loop
/// per element of the combined connection set, carrying that element.
pub struct BouquetLift {
    pub voltage: MultiVoltage1,
    pub lift: LiftedGraph,
    /// the lift with duplicate parallel edges collapsed and the fiber
    /// vertex `O_g` renamed to `g`
    pub simplified: Multigraph,
}

pub fn cayley_as_bouquet_lift(
    mg: &MultiGroup,
    sets: &[Vec<usize>],
) -> Result<(BouquetLift, MultiCayley), VoltageError> {
    let cay = cayley_graph_multigroup(mg, sets)
        .map_err(|e| VoltageError::InvalidInput(e.to_string()))?;
    let mut combined: Vec<usize> = sets.iter().flatten().copied().collect();
    combined.sort_unstable();
    combined.dedup();
    let base = Multigraph::bouquet(combined.len());
    let voltage = MultiVoltage1::new(base, mg.clone(), combined)?;
    let lift = voltage.lift();
    // vertex O_g has lifted id 0 * U + g = g already
    let mut edges: Vec<(usize, usize)> = lift
        .graph
        .edges()
        .iter()
        .map(|&(a, b)| if a <= b { (a, b) } else { (b, a) })
        .filter(|&(a, b)| a != b)
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let simplified = Multigraph::new(mg.universe_size(), edges).expect("in range");
    Ok((BouquetLift { voltage, lift, simplified }, cay))
}

/// Does the simplified bouquet lift coincide edge-for-edge with the
/// Cayley graph under `O_g -> g`?
pub fn bouquet_lift_matches(lift: &BouquetLift, cay: &MultiCayley) -> bool {
    let mut a: Vec<(usize, usize)> = lift.simplified.edges().to_vec();
    let mut b: Vec<(usize, usize)> = cay
        .graph
        .edges()
        .iter()
        .map(|&(x, y)| if x <= y { (x, y) } else { (y, x) })
        .collect();
    a.sort_unstable();
    b.sort_unstable();
    a == b
}
