//! Cayley graphs of groups and multi-groups, vertex-transitivity
//! witnesses, and the 1-/2-factorization.

use crate::error::GroupError;
use crate::group::FiniteGroup;
use crate::multigroup::MultiGroup;
use msg_core::Multigraph;

fn check_connection_set(g: &FiniteGroup, s: &[usize]) -> Result<(), GroupError> {
    for &x in s {
        if x >= g.order() {
            return Err(GroupError::UnknownElement(format!("element {x}")));
        }
        if x == g.identity() {
            return Err(GroupError::BadConnectionSet("contains the identity".into()));
        }
        if !s.contains(&g.inverse(x)) {
            return Err(GroupError::BadConnectionSet(format!(
                "not inverse-closed: missing inverse of {x}"
            )));
        }
    }
    Ok(())
}

/// Simple Cayley graph: vertices are the group elements, `g` and `h`
/// adjacent iff `g^{-1}h` lies in the connection set.
pub fn cayley_graph(g: &FiniteGroup, s: &[usize]) -> Result<Multigraph, GroupError> {
    check_connection_set(g, s)?;
    let n = g.order();
    let mut edges = Vec::new();
    for a in 0..n {
        for &x in s {
            let b = g.op(a, x);
            if a < b {
                edges.push((a, b));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(Multigraph::new(n, edges).expect("vertices in range"))
}

/// A multi-group Cayley graph: the deduplicated simple graph plus the
/// per-operation edge provenance.
#[derive(Debug, Clone)]
pub struct MultiCayley {
    pub graph: Multigraph,
    /// (operation, tail, head) triples before deduplication, tail < head.
    pub provenance: Vec<(usize, usize, usize)>,
}

impl MultiCayley {
    /// Edges contributed by one operation, as a simple graph on the
    /// universe.
    pub fn per_op_graph(&self, op: usize) -> Multigraph {
        let n = self.graph.vertex_count();
        let mut edges: Vec<(usize, usize)> = self
            .provenance
            .iter()
            .filter(|&&(i, _, _)| i == op)
            .map(|&(_, a, b)| (a, b))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        Multigraph::new(n, edges).expect("in range")
    }

    /// The provenance multigraph: one edge per (operation, pair) triple.
    pub fn provenance_multigraph(&self) -> Multigraph {
        let n = self.graph.vertex_count();
        let edges = self.provenance.iter().map(|&(_, a, b)| (a, b)).collect();
        Multigraph::new(n, edges).expect("in range")
    }
}

/// Cayley graph of a multi-group over connection sets `S_i ⊆ Γ_i`.
/// Vertices are the whole universe; the edge set is the union of the
/// per-constituent Cayley edges.
pub fn cayley_graph_multigroup(
    mg: &MultiGroup,
    sets: &[Vec<usize>],
) -> Result<MultiCayley, GroupError> {
    if sets.len() != mg.constituent_count() {
        return Err(GroupError::BadConnectionSet("one set per constituent".into()));
    }
    let n = mg.universe_size();
    let mut provenance = Vec::new();
    for (i, s) in sets.iter().enumerate() {
        let c = &mg.constituents()[i];
        // translate to local ids and check the Cayley preconditions
        let local: Vec<usize> = s
            .iter()
            .map(|&u| {
                mg.local_index(i, u)
                    .ok_or_else(|| GroupError::UnknownElement(format!("{u} not in constituent {i}")))
            })
            .collect::<Result<_, _>>()?;
        check_connection_set(&c.group, &local)?;
        if c.group.generated(&local).len() != c.group.order() {
            return Err(GroupError::BadConnectionSet(format!(
                "S_{i} does not generate its constituent"
            )));
        }
        for la in 0..c.group.order() {
            for &lx in &local {
                let lb = c.group.op(la, lx);
                let a = c.members[la];
                let b = c.members[lb];
                if a < b {
                    provenance.push((i, a, b));
                }
            }
        }
    }
    provenance.sort_unstable();
    provenance.dedup();
    let mut edges: Vec<(usize, usize)> = provenance.iter().map(|&(_, a, b)| (a, b)).collect();
    edges.sort_unstable();
    edges.dedup();
    Ok(MultiCayley { graph: Multigraph::new(n, edges).expect("in range"), provenance })
}

/// Connectivity criterion for multi-group Cayley graphs: every pair of
/// constituents must be linked by a chain of nonempty overlaps. The
/// single-constituent case reduces to connectivity of that Cayley graph,
/// which holds because the connection set generates.
pub fn is_multigroup_cayley_connected(mg: &MultiGroup, sets: &[Vec<usize>]) -> Result<bool, GroupError> {
    // validate inputs the same way the construction does
    let _ = cayley_graph_multigroup(mg, sets)?;
    Ok(mg.overlap_chain_connected())
}

/// Left-translation witness for vertex transitivity: `h -> g∘h` as a
/// vertex permutation of `Cay(Γ:S)`.
pub fn vertex_transitivity_witness(
    g: &FiniteGroup,
    s: &[usize],
    elt: usize,
) -> Result<Vec<usize>, GroupError> {
    if elt >= g.order() {
        return Err(GroupError::UnknownElement(format!("element {elt}")));
    }
    check_connection_set(g, s)?;
    Ok((0..g.order()).map(|h| g.op(elt, h)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorKind {
    /// A perfect matching: the orbit of an involution.
    OneFactor,
    /// Disjoint spanning circuits: the orbit of a non-involution pair.
    TwoFactor,
}

#[derive(Debug, Clone)]
pub struct CayleyFactor {
    pub kind: FactorKind,
    /// The `{s, s^{-1}}` class this factor comes from.
    pub connection: Vec<usize>,
    /// Edges as vertex pairs `(g, g∘s)` with `g` ranging over the group,
    /// deduplicated.
    pub edges: Vec<(usize, usize)>,
}

/// Factor the Cayley graph by the `{s, s^{-1}}` classes of the connection
/// set: involutions give 1-factors, other classes 2-factors. The factors
/// partition the edge set.
pub fn factorize_cayley(g: &FiniteGroup, s: &[usize]) -> Result<Vec<CayleyFactor>, GroupError> {
    check_connection_set(g, s)?;
    let mut remaining: Vec<usize> = s.to_vec();
    remaining.sort_unstable();
    remaining.dedup();
    let mut out = Vec::new();
    while let Some(&x) = remaining.first() {
        let inv = g.inverse(x);
        remaining.retain(|&y| y != x && y != inv);
        let class = if inv == x { vec![x] } else { vec![x, inv] };
        let mut edges: Vec<(usize, usize)> = (0..g.order())
            .map(|a| {
                let b = g.op(a, x);
                if a < b { (a, b) } else { (b, a) }
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        let kind = if inv == x { FactorKind::OneFactor } else { FactorKind::TwoFactor };
        out.push(CayleyFactor { kind, connection: class, edges });
    }
    Ok(out)
}
