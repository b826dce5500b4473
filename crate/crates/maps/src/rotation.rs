//! Rotation systems and their translation to quadricell maps.
//!
//! Convention: in the vertex cycle built for the map, the tail end of
//! edge `e` presents as the cell `(e, 1)`; the head end presents as
//! `(e, αβ)` for an untwisted edge and `(e, β)` for a twisted one. A
//! loop's two ends present as tail and head of the same edge.

use crate::error::MapError;
use crate::map::{alpha, alpha_beta, beta, CombinatorialMap, Quadricell};
use msg_core::{Multigraph, SemiArc};

/// A per-vertex cyclic order of incident semi-arcs plus a per-edge twist
/// bit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    pub base: Multigraph,
    /// `rotation[v]` lists the semi-arcs rooted at `v` in cyclic order.
    pub rotation: Vec<Vec<SemiArc>>,
    /// `lambda[e]` is true for a twisted (type 1) edge.
    pub lambda: Vec<bool>,
}

impl RotationSystem {
    pub fn new(
        base: Multigraph,
        rotation: Vec<Vec<SemiArc>>,
        lambda: Vec<bool>,
    ) -> Result<Self, MapError> {
        if rotation.len() != base.vertex_count() {
            return Err(MapError::MalformedRotation("one cycle per vertex".into()));
        }
        if lambda.len() != base.edge_count() {
            return Err(MapError::MalformedRotation("one twist bit per edge".into()));
        }
        let mut rotation = rotation;
        for (v, cycle) in rotation.iter_mut().enumerate() {
            let mut want = base.semi_arcs_at(v);
            let mut got: Vec<SemiArc> = cycle.clone();
            want.sort_unstable();
            got.sort_unstable();
            if want != got {
                return Err(MapError::MalformedRotation(format!(
                    "cycle at vertex {v} does not cover its incident semi-arcs"
                )));
            }
            rotate_to_min(cycle);
        }
        Ok(RotationSystem { base, rotation, lambda })
    }

    /// The cell presenting a semi-arc in the canonical vertex cycle.
    fn present(&self, s: SemiArc) -> Quadricell {
        let e = s.edge;
        if s.end == 0 {
            4 * e
        } else if self.lambda[e] {
            beta(4 * e)
        } else {
            alpha_beta(4 * e)
        }
    }

    /// Translate to the quadricell map: each vertex cycle becomes a
    /// P-cycle on the presentations, together with its α-conjugate.
    pub fn to_map(&self) -> CombinatorialMap {
        let mut cycles = Vec::new();
        for cycle in &self.rotation {
            if cycle.is_empty() {
                continue;
            }
            let main: Vec<Quadricell> = cycle.iter().map(|&s| self.present(s)).collect();
            let conj: Vec<Quadricell> = main.iter().rev().map(|&x| alpha(x)).collect();
            cycles.push(main);
            cycles.push(conj);
        }
        CombinatorialMap::from_cycles(self.base.edge_count(), &cycles)
            .expect("presentations are distinct cells")
    }
}

/// Rotate a cyclic sequence so the least element comes first; cycles are
/// stored in this canonical phase.
fn rotate_to_min<T: Ord + Copy>(cycle: &mut Vec<T>) {
    if cycle.is_empty() {
        return;
    }
    let pos = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, x)| *x)
        .map(|(i, _)| i)
        .unwrap();
    cycle.rotate_left(pos);
}

/// Read a rotation system back from a map over a known base graph
/// shape. Chooses per-vertex representative cycles so that the twist
/// bits vanish on a BFS spanning tree; on maps produced by
/// `RotationSystem::to_map` from a tree-normalized system, this is the
/// exact inverse.
pub fn rotation_from_map(m: &CombinatorialMap) -> Result<RotationSystem, MapError> {
    m.validate()?;
    let verts = m.vertices();
    let n = verts.len();
    let cell_owner = {
        let mut owner = vec![usize::MAX; m.cell_count()];
        for (vi, cycle) in verts.iter().enumerate() {
            for &x in cycle {
                owner[x] = vi;
                owner[alpha(x)] = vi;
            }
        }
        owner
    };
    // base graph: edge e runs from the owner of (e,1) to the owner of (e,β)
    let mut edges = Vec::new();
    for e in 0..m.edge_count() {
        edges.push((cell_owner[4 * e], cell_owner[4 * e + 2]));
    }
    let base = Multigraph::new(n, edges).expect("owners in range");

    // chosen[v]: the vertex cycle read in its chosen direction
    let mut chosen: Vec<Option<Vec<Quadricell>>> = vec![None; n];
    let mut lambda = vec![false; m.edge_count()];

    // whether cell x is a "plain" presentation for its end: tail cells
    // {1, α} present end 0, {β, αβ} present end 1.
    let end_of = |x: Quadricell| -> u8 {
        if x % 4 < 2 {
            0
        } else {
            1
        }
    };

    // BFS over vertices, fixing orientations; tree edges get λ = 0.
    let mut visited = vec![false; n];
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let root_cycle = verts[root].clone();
        chosen[root] = Some(root_cycle);
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            let cycle = chosen[v].clone().unwrap();
            for &x in &cycle {
                let w = cell_owner[beta(x)];
                if !visited[w] && w != v {
                    visited[w] = true;
                    // choose w's direction so that edge reads untwisted:
                    // its cycle must contain αβ·x
                    let target = alpha_beta(x);
                    let wc = if verts[w].contains(&target) {
                        verts[w].clone()
                    } else {
                        verts[w].iter().rev().map(|&y| alpha(y)).collect()
                    };
                    chosen[w] = Some(wc);
                    queue.push_back(w);
                }
            }
        }
    }
    // read rotations and twist bits from chosen cycles
    let mut rotation: Vec<Vec<SemiArc>> = vec![Vec::new(); n];
    let mut present: Vec<Option<Quadricell>> = vec![None; 2 * m.edge_count()];
    for v in 0..n {
        let cycle = chosen[v].clone().unwrap();
        for &x in &cycle {
            let e = crate::map::edge_of(x);
            let end = end_of(x);
            rotation[v].push(SemiArc { edge: e, end });
            present[2 * e + end as usize] = Some(x);
        }
        rotate_to_min(&mut rotation[v]);
    }
    for e in 0..m.edge_count() {
        let t = present[2 * e].expect("tail presented");
        let h = present[2 * e + 1].expect("head presented");
        // untwisted iff the head presents as αβ of the tail presentation
        lambda[e] = h != alpha_beta(t);
    }
    RotationSystem::new(base, rotation, lambda)
}
