//! Type-1 multi-voltage graphs and their liftings.

use crate::error::VoltageError;
use msg_core::{Multigraph, SemiArc};
use msg_groups::MultiGroup;

/// A voltage on every positive semi-arc; the reversed semi-arc carries
/// the operation-relative inverse, resolved where it is used.
#[derive(Debug, Clone)]
pub struct MultiVoltage1 {
    pub base: Multigraph,
    pub groups: MultiGroup,
    /// universe id assigned to `(e, 0)` for each edge `e`
    pub psi: Vec<usize>,
}

/// Provenance of one lifted edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LiftEdge {
    pub base_edge: usize,
    /// fiber element (universe id) at the tail end
    pub fiber: usize,
    pub op: usize,
}

/// The lifting graph with per-edge provenance. Lifted vertex `(v, a)` has
/// id `v * universe + a`.
#[derive(Debug, Clone)]
pub struct LiftedGraph {
    pub graph: Multigraph,
    pub origins: Vec<LiftEdge>,
    pub universe: usize,
}

impl LiftedGraph {
    pub fn vertex_id(&self, base_vertex: usize, fiber: usize) -> usize {
        base_vertex * self.universe + fiber
    }

    /// The natural projection of a lifted vertex.
    pub fn project(&self, lifted: usize) -> (usize, usize) {
        (lifted / self.universe, lifted % self.universe)
    }

    /// The sublift of one operation.
    pub fn sublift(&self, op: usize) -> Multigraph {
        let edges = self
            .graph
            .edges()
            .iter()
            .zip(&self.origins)
            .filter(|(_, o)| o.op == op)
            .map(|(&e, _)| e)
            .collect();
        Multigraph::new(self.graph.vertex_count(), edges).expect("same vertex range")
    }
}

impl MultiVoltage1 {
    pub fn new(
        base: Multigraph,
        groups: MultiGroup,
        psi: Vec<usize>,
    ) -> Result<Self, VoltageError> {
        if psi.len() != base.edge_count() {
            return Err(VoltageError::BadVoltage("one voltage per edge".into()));
        }
        for &v in &psi {
            if v >= groups.universe_size() {
                return Err(VoltageError::BadVoltage(format!("element {v} outside universe")));
            }
        }
        Ok(MultiVoltage1 { base, groups, psi })
    }

    /// Voltage of a semi-arc under operation `op`; reversed arcs invert
    /// inside the constituent, `None` when the voltage is not in it.
    pub fn arc_voltage(&self, op: usize, arc: SemiArc) -> Option<usize> {
        let v = self.psi[arc.edge];
        if !self.groups.contains(op, v) {
            return None;
        }
        if arc.end == 0 {
            Some(v)
        } else {
            self.groups.inverse(op, v)
        }
    }

    /// The lifting graph: vertices are `V(base) × universe`; one lifted
    /// edge per (base edge, fiber element, operation) with both the fiber
    /// and the voltage inside the operation's constituent. Parallel
    /// duplicates from different operations are kept.
    pub fn lift(&self) -> LiftedGraph {
        let u = self.groups.universe_size();
        let n = self.base.vertex_count() * u;
        let mut edges = Vec::new();
        let mut origins = Vec::new();
        for (e, &(tail, head)) in self.base.edges().iter().enumerate() {
            let b = self.psi[e];
            for a in 0..u {
                for op in 0..self.groups.constituent_count() {
                    if !self.groups.contains(op, a) || !self.groups.contains(op, b) {
                        continue;
                    }
                    let ab = self.groups.op(op, a, b).expect("closure");
                    edges.push((tail * u + a, head * u + ab));
                    origins.push(LiftEdge { base_edge: e, fiber: a, op });
                }
            }
        }
        LiftedGraph {
            graph: Multigraph::new(n, edges).expect("ids in range"),
            origins,
            universe: u,
        }
    }

    /// Validate a walk: consecutive arcs chain head-to-root.
    pub fn check_walk(&self, walk: &[SemiArc]) -> Result<(), VoltageError> {
        if walk.is_empty() {
            return Err(VoltageError::NotAWalk("empty".into()));
        }
        for arc in walk {
            if arc.edge >= self.base.edge_count() {
                return Err(VoltageError::NotAWalk(format!("edge {} missing", arc.edge)));
            }
        }
        for w in walk.windows(2) {
            let end_of = self.base.root(w[0].mate());
            let start_of = self.base.root(w[1]);
            if end_of != start_of {
                return Err(VoltageError::NotAWalk(format!(
                    "arcs {:?} and {:?} do not chain",
                    w[0], w[1]
                )));
            }
        }
        Ok(())
    }

    /// All liftings of a walk starting in the given fiber: one per
    /// admissible operation-index sequence. Returns the op sequences with
    /// the fiber elements visited.
    pub fn lift_walk(
        &self,
        walk: &[SemiArc],
        start_fiber: usize,
    ) -> Result<Vec<(Vec<usize>, Vec<usize>)>, VoltageError> {
        self.check_walk(walk)?;
        if start_fiber >= self.groups.universe_size() {
            return Err(VoltageError::BadVoltage(format!("fiber {start_fiber}")));
        }
        let mut done = Vec::new();
        let mut stack = vec![(Vec::new(), vec![start_fiber])];
        while let Some((ops, fibers)) = stack.pop() {
            if ops.len() == walk.len() {
                done.push((ops, fibers));
                continue;
            }
            let j = ops.len();
            let cur = *fibers.last().unwrap();
            for op in 0..self.groups.constituent_count() {
                if !self.groups.contains(op, cur) {
                    continue;
                }
                let Some(v) = self.arc_voltage(op, walk[j]) else { continue };
                let Some(next) = self.groups.op(op, cur, v) else { continue };
                let mut ops2 = ops.clone();
                let mut fib2 = fibers.clone();
                ops2.push(op);
                fib2.push(next);
                stack.push((ops2, fib2));
            }
        }
        done.sort();
        Ok(done)
    }

    /// Homogeneous liftings of a circuit: for each operation, the net
    /// voltage order `d` gives `|Γ|/d` liftings of length `d·m`. Requires
    /// all constituents equal as sets.
    pub fn circuit_homogeneous_liftings(
        &self,
        circuit: &[SemiArc],
    ) -> Result<Vec<(usize, usize)>, VoltageError> {
        if !self.groups.equal_member_sets() {
            return Err(VoltageError::InvalidInput(
                "homogeneous lifting needs constituents equal as sets".into(),
            ));
        }
        self.check_walk(circuit)?;
        let first = self.base.root(circuit[0]);
        let last = self.base.root(circuit.last().unwrap().mate());
        if first != last {
            return Err(VoltageError::NotAWalk("circuit does not close".into()));
        }
        let m = circuit.len();
        let gamma = self.groups.member_set(0).len();
        let mut out = Vec::new();
        for op in 0..self.groups.constituent_count() {
            let mut acc = self.groups.identity_of(op);
            for &arc in circuit {
                let v = self
                    .arc_voltage(op, arc)
                    .ok_or_else(|| VoltageError::BadVoltage("voltage outside constituent".into()))?;
                acc = self.groups.op(op, acc, v).expect("closure");
            }
            let d = self.groups.element_order(op, acc).expect("in constituent");
            out.push((gamma / d, d * m));
        }
        Ok(out)
    }

    /// The left subaction of `g ∈ Γ_op` on the lift's vertices:
    /// `u_a -> u_{g∘a}` on fibers inside the constituent, identity
    /// elsewhere.
    pub fn left_subaction(&self, op: usize, g: usize) -> Result<Vec<usize>, VoltageError> {
        if !self.groups.contains(op, g) {
            return Err(VoltageError::BadVoltage(format!(
                "element {g} not in constituent {op}"
            )));
        }
        let u = self.groups.universe_size();
        let n = self.base.vertex_count() * u;
        let mut perm = Vec::with_capacity(n);
        for x in 0..n {
            let (v, a) = (x / u, x % u);
            let image = if self.groups.contains(op, a) {
                self.groups.op(op, g, a).expect("closure")
            } else {
                a
            };
            perm.push(v * u + image);
        }
        Ok(perm)
    }
}
