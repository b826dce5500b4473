//! Exhaustive enumeration of the rotation systems of a graph.
//!
//! Pure rotations are enumerated per vertex with the first incident
//! semi-arc pinned (cyclic representatives), and twist bits range over
//! the co-tree edges of a fixed spanning tree, the tree being normalized
//! to type 0. This walks each locally orientable embedding exactly once:
//! `∏(ρ(v)-1)!` orientable and `(2^β - 1)·∏(ρ(v)-1)!` non-orientable.

use crate::error::MapError;
use crate::map::SurfaceKind;
use crate::rotation::RotationSystem;
use msg_core::{Multigraph, SemiArc};
use std::collections::BTreeMap;

pub const DEFAULT_CENSUS_BUDGET: u128 = 1_000_000;

/// Histogram of an embedding census.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EmbeddingCensus {
    /// genus -> count over orientable embeddings
    pub orientable: BTreeMap<usize, u64>,
    /// crosscap number -> count over non-orientable embeddings
    pub nonorientable: BTreeMap<usize, u64>,
}

impl EmbeddingCensus {
    pub fn orientable_total(&self) -> u64 {
        self.orientable.values().sum()
    }

    pub fn nonorientable_total(&self) -> u64 {
        self.nonorientable.values().sum()
    }

    pub fn total(&self) -> u64 {
        self.orientable_total() + self.nonorientable_total()
    }

    pub fn min_genus(&self) -> Option<usize> {
        self.orientable.keys().next().copied()
    }

    pub fn max_genus(&self) -> Option<usize> {
        self.orientable.keys().next_back().copied()
    }

    pub fn min_crosscap(&self) -> Option<usize> {
        self.nonorientable.keys().next().copied()
    }

    pub fn max_crosscap(&self) -> Option<usize> {
        self.nonorientable.keys().next_back().copied()
    }

    /// Are the orientable genera a gapless interval?
    pub fn orientable_gapless(&self) -> bool {
        match (self.min_genus(), self.max_genus()) {
            (Some(lo), Some(hi)) => (lo..=hi).all(|g| self.orientable.contains_key(&g)),
            _ => true,
        }
    }

    pub fn nonorientable_gapless(&self) -> bool {
        match (self.min_crosscap(), self.max_crosscap()) {
            (Some(lo), Some(hi)) => (lo..=hi).all(|g| self.nonorientable.contains_key(&g)),
            _ => true,
        }
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Number of rotation systems the census will walk.
pub fn census_size(g: &Multigraph) -> u128 {
    let rotations: u128 = (0..g.vertex_count())
        .map(|v| factorial(g.valency(v).saturating_sub(1)))
        .product();
    let beta = g.betti() as u32;
    rotations << beta
}

/// Walk every rotation system of a connected graph, calling `visit` with
/// each one. The caller sees `2^β · ∏(ρ(v)-1)!` systems.
pub fn for_each_rotation<F: FnMut(&RotationSystem)>(
    g: &Multigraph,
    budget: Option<u128>,
    mut visit: F,
) -> Result<(), MapError> {
    if !g.is_connected() {
        return Err(MapError::InvalidInput("census needs a connected graph".into()));
    }
    let limit = budget.unwrap_or(DEFAULT_CENSUS_BUDGET);
    let needed = census_size(g);
    if needed > limit {
        return Err(MapError::BudgetExceeded { needed, budget: limit });
    }
    // BFS spanning tree; tree edges keep λ = 0
    let n = g.vertex_count();
    let mut tree_edge = vec![false; g.edge_count()];
    {
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            for (e, &(a, b)) in g.edges().iter().enumerate() {
                let w = if a == u {
                    b
                } else if b == u {
                    a
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    tree_edge[e] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let cotree: Vec<usize> = (0..g.edge_count()).filter(|&e| !tree_edge[e]).collect();

    // per-vertex semi-arc lists; the first stays pinned
    let arcs: Vec<Vec<SemiArc>> = (0..n).map(|v| g.semi_arcs_at(v)).collect();
    let mut rotation: Vec<Vec<SemiArc>> = arcs.clone();
    let mut lambda = vec![false; g.edge_count()];

    // iterative odometer over per-vertex permutations of arcs[v][1..]
    fn rec<F: FnMut(&RotationSystem)>(
        g: &Multigraph,
        arcs: &[Vec<SemiArc>],
        rotation: &mut Vec<Vec<SemiArc>>,
        lambda: &mut Vec<bool>,
        cotree: &[usize],
        v: usize,
        visit: &mut F,
    ) {
        let n = g.vertex_count();
        if v == n {
            // twist bits over co-tree edges
            fn twists<F: FnMut(&RotationSystem)>(
                g: &Multigraph,
                rotation: &Vec<Vec<SemiArc>>,
                lambda: &mut Vec<bool>,
                cotree: &[usize],
                i: usize,
                visit: &mut F,
            ) {
                if i == cotree.len() {
                    let rs = RotationSystem::new(g.clone(), rotation.clone(), lambda.clone())
                        .expect("enumeration emits valid rotations");
                    visit(&rs);
                    return;
                }
                lambda[cotree[i]] = false;
                twists(g, rotation, lambda, cotree, i + 1, visit);
                lambda[cotree[i]] = true;
                twists(g, rotation, lambda, cotree, i + 1, visit);
                lambda[cotree[i]] = false;
            }
            twists(g, rotation, lambda, cotree, 0, visit);
            return;
        }
        let d = arcs[v].len();
        if d <= 1 {
            rec(g, arcs, rotation, lambda, cotree, v + 1, visit);
            return;
        }
        // Heap's algorithm over positions 1..d
        let mut tail: Vec<SemiArc> = arcs[v][1..].to_vec();
        permute_all(&mut tail, &mut |perm| {
            rotation[v].truncate(1);
            rotation[v].extend_from_slice(perm);
            rec(g, arcs, rotation, lambda, cotree, v + 1, visit);
        });
        rotation[v] = arcs[v].clone();
    }

    rec(g, &arcs, &mut rotation, &mut lambda, &cotree, 0, &mut visit);
    Ok(())
}

/// All permutations of a slice, in place.
fn permute_all<T: Clone, F: FnMut(&[T])>(items: &mut [T], visit: &mut F) {
    let n = items.len();
    if n == 0 {
        visit(items);
        return;
    }
    // Heap's algorithm, iterative
    let mut c = vec![0usize; n];
    visit(items);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            visit(items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Full genus histogram over all rotation systems.
pub fn enumerate_embeddings(
    g: &Multigraph,
    budget: Option<u128>,
) -> Result<EmbeddingCensus, MapError> {
    let mut census = EmbeddingCensus::default();
    for_each_rotation(g, budget, |rs| {
        let m = rs.to_map();
        match m.surface().expect("valid embedding surface") {
            SurfaceKind::Orientable { genus } => {
                *census.orientable.entry(genus).or_insert(0) += 1;
            }
            SurfaceKind::NonOrientable { crosscaps } => {
                *census.nonorientable.entry(crosscaps).or_insert(0) += 1;
            }
        }
    })?;
    Ok(census)
}
