//! Eccentricities, eccentricity value sequences and their realizations.

use crate::error::CoreError;
use crate::graph::Multigraph;

/// Eccentricity data of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EccProfile {
    /// Eccentricity per vertex.
    pub per_vertex: Vec<usize>,
    /// Distinct eccentricity values, strictly increasing.
    pub value_sequence: Vec<usize>,
    pub radius: usize,
    pub diameter: usize,
    /// `multiplicity_sets[i]` holds the vertices of eccentricity
    /// `value_sequence[i]`.
    pub multiplicity_sets: Vec<Vec<usize>>,
}

pub fn eccentricity_profile(g: &Multigraph) -> Result<EccProfile, CoreError> {
    if g.vertex_count() == 0 {
        return Err(CoreError::InvalidInput("empty graph".into()));
    }
    if !g.is_connected() {
        return Err(CoreError::Disconnected);
    }
    let per_vertex: Vec<usize> = (0..g.vertex_count())
        .map(|v| g.distances_from(v).into_iter().max().unwrap())
        .collect();
    let mut values: Vec<usize> = per_vertex.clone();
    values.sort_unstable();
    values.dedup();
    let multiplicity_sets = values
        .iter()
        .map(|&l| {
            (0..g.vertex_count())
                .filter(|&v| per_vertex[v] == l)
                .collect()
        })
        .collect();
    Ok(EccProfile {
        radius: values[0],
        diameter: *values.last().unwrap(),
        value_sequence: values,
        per_vertex,
        multiplicity_sets,
    })
}

/// A strictly increasing positive sequence is a graphical eccentricity
/// value sequence iff the largest value is between the smallest and its
/// double, and consecutive values differ by exactly one.
pub fn validate_ecc_value_sequence(seq: &[usize]) -> Result<bool, CoreError> {
    if seq.is_empty() || seq[0] == 0 {
        return Err(CoreError::InvalidInput("need a nonempty positive sequence".into()));
    }
    if seq.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CoreError::InvalidInput("sequence must be strictly increasing".into()));
    }
    let r1 = seq[0];
    let rs = *seq.last().unwrap();
    if rs > 2 * r1 {
        return Ok(false);
    }
    Ok(seq.windows(2).all(|w| w[1] - w[0] == 1))
}

/// Realize the eccentricity value sequence `[r, r+s-1]`, `1 <= s <= r`.
/// `s == 1` gives the circuit of order `2r` (a 2-gon when `r == 1`);
/// otherwise a pendant path of `s` vertices is glued onto a self-centered
/// circuit core.
pub fn construct_ecc_witness(r: usize, s: usize) -> Result<Multigraph, CoreError> {
    if r == 0 || s == 0 {
        return Err(CoreError::InvalidInput("need r >= 1 and s >= 1".into()));
    }
    if s > r {
        return Err(CoreError::InvalidInput(format!("need s <= r, got r={r}, s={s}")));
    }
    if s == 1 {
        return Ok(Multigraph::cycle(2 * r));
    }
    // Core H = C_{2r} on vertices 0..2r, then path vertices u_1..u_{s-1}
    // hanging off core vertex 0 (the path's u_0 is identified with the
    // attachment).
    let core = 2 * r;
    let mut g = Multigraph::cycle(core);
    let mut extended = Multigraph::new(core + s - 1, g.edges().to_vec())?;
    let mut prev = 0usize;
    for k in 0..s - 1 {
        let u = core + k;
        extended.add_edge(prev, u);
        prev = u;
    }
    g = extended;
    Ok(g)
}
