//! Type-2 multi-voltage graphs: a vertex partition with one constituent
//! per class, voltages on cross edges taken in the class intersection.

use crate::error::VoltageError;
use msg_core::{Multigraph, SemiArc};
use msg_groups::MultiGroup;

#[derive(Debug, Clone)]
pub struct MultiVoltage2 {
    pub base: Multigraph,
    pub groups: MultiGroup,
    /// class of each vertex: an index into the constituents
    pub class_of: Vec<usize>,
    /// voltage of `(e, 0)` per edge, a universe id; must lie in the
    /// intersection of the endpoint classes' constituents
    pub tau: Vec<usize>,
}

/// The lifting: per-class fibers, so vertex ids are offset-based.
#[derive(Debug, Clone)]
pub struct LiftedGraph2 {
    pub graph: Multigraph,
    /// lifted id of `(v, local fiber index)`
    pub offsets: Vec<usize>,
    /// for each lifted vertex: its base vertex and universe element
    pub labels: Vec<(usize, usize)>,
    /// per lifted edge: (base edge, tail fiber element)
    pub origins: Vec<(usize, usize)>,
}

impl MultiVoltage2 {
    pub fn new(
        base: Multigraph,
        groups: MultiGroup,
        class_of: Vec<usize>,
        tau: Vec<usize>,
    ) -> Result<Self, VoltageError> {
        if class_of.len() != base.vertex_count() {
            return Err(VoltageError::BadPartition("one class per vertex".into()));
        }
        if class_of.iter().any(|&c| c >= groups.constituent_count()) {
            return Err(VoltageError::BadPartition("class index out of range".into()));
        }
        if tau.len() != base.edge_count() {
            return Err(VoltageError::BadVoltage("one voltage per edge".into()));
        }
        for (e, &(u, v)) in base.edges().iter().enumerate() {
            let (i, j) = (class_of[u], class_of[v]);
            let t = tau[e];
            if !groups.contains(i, t) || !groups.contains(j, t) {
                return Err(VoltageError::BadVoltage(format!(
                    "voltage of edge {e} must lie in the class intersection"
                )));
            }
        }
        Ok(MultiVoltage2 { base, groups, class_of, tau })
    }

    /// Fiber of a base vertex: the member set of its class.
    pub fn fiber(&self, v: usize) -> Vec<usize> {
        self.groups.member_set(self.class_of[v])
    }

    /// The lifting graph. A base edge `(u, v)` with `u` in class `i`,
    /// `v` in class `j`, voltage `b`, lifts to `(u_a, v_{a∘_j b})` for
    /// every `a` in `Γ_i ∩ Γ_j` (the head class's operation applies).
    pub fn lift(&self) -> LiftedGraph2 {
        let n = self.base.vertex_count();
        let mut offsets = Vec::with_capacity(n);
        let mut labels = Vec::new();
        let mut fibers = Vec::with_capacity(n);
        for v in 0..n {
            offsets.push(labels.len());
            let fiber = self.fiber(v);
            for &a in &fiber {
                labels.push((v, a));
            }
            fibers.push(fiber);
        }
        let lifted_id = |v: usize, a: usize| -> usize {
            offsets[v] + fibers[v].iter().position(|&x| x == a).expect("fiber element")
        };
        let mut edges = Vec::new();
        let mut origins = Vec::new();
        for (e, &(u, v)) in self.base.edges().iter().enumerate() {
            let (i, j) = (self.class_of[u], self.class_of[v]);
            let b = self.tau[e];
            for a in self.groups.overlap(i, j) {
                let Some(ab) = self.groups.op(j, a, b) else { continue };
                edges.push((lifted_id(u, a), lifted_id(v, ab)));
                origins.push((e, a));
            }
        }
        LiftedGraph2 {
            graph: Multigraph::new(labels.len(), edges).expect("ids in range"),
            offsets,
            labels,
            origins,
        }
    }

    /// Walk lifting candidates from a start fiber element; each result is
    /// the fiber trace. Admissible steps keep the running element in the
    /// intersection of the step's endpoint classes.
    pub fn lift_walk(
        &self,
        walk: &[SemiArc],
        start_fiber: usize,
    ) -> Result<Vec<Vec<usize>>, VoltageError> {
        if walk.is_empty() {
            return Err(VoltageError::NotAWalk("empty".into()));
        }
        for w in walk.windows(2) {
            if self.base.root(w[0].mate()) != self.base.root(w[1]) {
                return Err(VoltageError::NotAWalk("arcs do not chain".into()));
            }
        }
        let mut traces = vec![vec![start_fiber]];
        for &arcstep in walk {
            let tail = self.base.root(arcstep);
            let head = self.base.root(arcstep.mate());
            let (i, j) = (self.class_of[tail], self.class_of[head]);
            let mut next = Vec::new();
            for t in traces {
                let cur = *t.last().unwrap();
                if !self.groups.contains(i, cur) || !self.groups.contains(j, cur) {
                    continue;
                }
                // voltage of the arc in the head class's operation
                let b = if arcstep.end == 0 {
                    self.tau[arcstep.edge]
                } else {
                    match self.groups.inverse(j, self.tau[arcstep.edge]) {
                        Some(x) => x,
                        None => continue,
                    }
                };
                let Some(nx) = self.groups.op(j, cur, b) else { continue };
                let mut t2 = t.clone();
                t2.push(nx);
                next.push(t2);
            }
            traces = next;
        }
        Ok(traces)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use msg_groups::FiniteGroup;

    /// Z_2 and Z_3 on integer-style labels share "0" and "1".
    fn z2_z3() -> MultiGroup {
        MultiGroup::new(vec![FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)]).unwrap()
    }

    #[test]
    fn two_class_single_edge_lift() {
        let groups = z2_z3();
        let base = Multigraph::path(2);
        let mv = MultiVoltage2::new(base, groups, vec![0, 1], vec![1]).unwrap();
        let lift = mv.lift();
        // fibers of sizes 2 and 3
        assert_eq!(lift.graph.vertex_count(), 5);
        // a ∈ Z_2 ∩ Z_3 = {0, 1}: two lifted edges
        assert_eq!(lift.graph.edge_count(), 2);
    }

    #[test]
    fn single_class_reduces_to_type1() {
        let groups = MultiGroup::single(FiniteGroup::cyclic(3));
        let base = Multigraph::bouquet(1);
        let mv2 = MultiVoltage2::new(base.clone(), groups.clone(), vec![0], vec![1]).unwrap();
        let lift2 = mv2.lift();
        let mv1 = crate::type1::MultiVoltage1::new(base, groups, vec![1]).unwrap();
        let lift1 = mv1.lift();
        assert_eq!(lift2.graph.vertex_count(), lift1.graph.vertex_count());
        assert_eq!(lift2.graph.edge_count(), lift1.graph.edge_count());
        assert!(msg_core::iso::are_isomorphic(&lift2.graph, &lift1.graph));
    }

    #[test]
    fn partial_quotient_size_example() {
        // 4 vertices with Z_4 and 3 vertices with Z_3: 4·4 + 3·3 = 25
        let groups = MultiGroup::new(vec![FiniteGroup::cyclic(4), FiniteGroup::cyclic(3)]).unwrap();
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
        edges.extend([(4, 5), (5, 6), (6, 4)]);
        edges.push((0, 4));
        let base = Multigraph::new(7, edges).unwrap();
        let class_of = vec![0, 0, 0, 0, 1, 1, 1];
        // within-class voltages may use any class element; the cross edge
        // must use an element of the intersection {0,1,2}
        let tau = vec![1, 1, 1, 1, 1, 1, 1, 1];
        let mv = MultiVoltage2::new(base, groups, class_of, tau).unwrap();
        let lift = mv.lift();
        assert_eq!(lift.graph.vertex_count(), 4 * 4 + 3 * 3);
    }

    #[test]
    fn voltage_outside_intersection_rejected() {
        let groups = z2_z3();
        let base = Multigraph::path(2);
        // 2 is in Z_3 only; the cross edge needs the intersection {0,1}
        assert!(MultiVoltage2::new(base, groups, vec![0, 1], vec![2]).is_err());
    }

    #[test]
    fn walk_lifting_containment_chain() {
        let groups = z2_z3();
        let base = Multigraph::path(3);
        let mv = MultiVoltage2::new(base, groups, vec![0, 1, 1], vec![1, 1]).unwrap();
        let walk = vec![SemiArc { edge: 0, end: 0 }, SemiArc { edge: 1, end: 0 }];
        // start at fiber 0: 0 ∈ Z_2 ∩ Z_3, 0∘₂1 = 1 ∈ Z_3, 1∘₂1 = 2
        let traces = mv.lift_walk(&walk, 0).unwrap();
        assert_eq!(traces, vec![vec![0, 1, 2]]);
        // start at fiber 1: 1∘₂1 = 2 ∉ Z_2... the second step operation is
        // within class 1 so it proceeds: trace [1, 2, 0]
        let traces = mv.lift_walk(&walk, 1).unwrap();
        assert_eq!(traces, vec![vec![1, 2, 0]]);
    }
}
