//! Graph phases and their matrices.

use crate::error::PhaseError;
use crate::vec3::Vec3;
use msg_core::Multigraph;
use msg_core::ops::union_shared;

/// The binary vector operation carried by a phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VecOp {
    Cross,
    Componentwise,
    Add,
}

impl VecOp {
    pub fn apply(self, a: Vec3, b: Vec3) -> Vec3 {
        match self {
            VecOp::Cross => a.cross(b),
            VecOp::Componentwise => a.hadamard(b),
            VecOp::Add => a.add(b),
        }
    }
}

/// Which power of the distance divides the edge products. The squared
/// form is the one under which the star identity holds exactly; the
/// unsquared reading is kept for comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormConvention {
    Squared,
    Plain,
}

/// A phase: a simple connected graph with one 3-vector per vertex, the
/// vector doubling as the vertex position.
#[derive(Debug, Clone)]
pub struct GraphPhase {
    pub graph: Multigraph,
    pub omega: Vec<Vec3>,
    pub op: VecOp,
}

impl GraphPhase {
    pub fn new(graph: Multigraph, omega: Vec<Vec3>, op: VecOp) -> Result<Self, PhaseError> {
        if omega.len() != graph.vertex_count() {
            return Err(PhaseError::InvalidInput("one vector per vertex".into()));
        }
        for (e, &(u, v)) in graph.edges().iter().enumerate() {
            if omega[u].sub(omega[v]).norm_sq() == 0.0 {
                return Err(PhaseError::CoincidentAdjacentVertices { edge: e });
            }
        }
        Ok(GraphPhase { graph, omega, op })
    }

    /// The pair of phase matrices: `V[i][j] = ω(v_i)/‖v_i−v_j‖` on
    /// adjacent pairs, and `Λ[i][j] = (ω(v_i)∘ω(v_j))/‖v_i−v_j‖²`.
    pub fn phase_matrices(&self) -> (Vec<Vec<Vec3>>, Vec<Vec<Vec3>>) {
        let n = self.graph.vertex_count();
        let mut v = vec![vec![Vec3::zero(); n]; n];
        let mut lam = vec![vec![Vec3::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.graph.has_edge(i, j) {
                    continue;
                }
                let d2 = self.omega[i].sub(self.omega[j]).norm_sq();
                v[i][j] = self.omega[i].scale(1.0 / d2.sqrt());
                lam[i][j] = self.op.apply(self.omega[i], self.omega[j]).scale(1.0 / d2);
            }
        }
        (v, lam)
    }

    /// Largest relative entrywise deviation of `V ∗ V^t` from `Λ`, where
    /// the star product applies the phase operation entrywise.
    pub fn verify_star_identity(&self) -> f64 {
        let (v, lam) = self.phase_matrices();
        let n = v.len();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let star = self.op.apply(v[i][j], v[j][i]);
                let diff = star.sub(lam[i][j]).max_abs();
                let scale = lam[i][j].max_abs().max(1.0);
                worst = worst.max(diff / scale);
            }
        }
        worst
    }

    /// Componentwise sum of the vertex vectors.
    pub fn capacity(&self) -> Vec3 {
        self.omega.iter().fold(Vec3::zero(), |acc, &w| acc.add(w))
    }

    /// `Σ log ‖ω(u)‖` (or `Σ log ‖ω(u)‖²` under the squared variant).
    pub fn entropy(&self, convention: NormConvention) -> Result<f64, PhaseError> {
        let mut total = 0.0;
        for (u, w) in self.omega.iter().enumerate() {
            let n2 = w.norm_sq();
            if n2 == 0.0 {
                return Err(PhaseError::ZeroNormVertex { vertex: u });
            }
            total += match convention {
                NormConvention::Plain => n2.sqrt().ln(),
                NormConvention::Squared => n2.ln(),
            };
        }
        Ok(total)
    }
}

/// Addition of phases: graphs union over the shared namespace, shared
/// vertices combine by the vertex operation, others carry over.
pub fn add_phases(
    p1: &GraphPhase,
    p2: &GraphPhase,
    vertex_op: VecOp,
) -> Result<GraphPhase, PhaseError> {
    let g = union_shared(&p1.graph, &p2.graph);
    let n = g.vertex_count();
    let used1: Vec<bool> = (0..n)
        .map(|v| v < p1.graph.vertex_count() && p1.graph.valency(v) > 0)
        .collect();
    let used2: Vec<bool> = (0..n)
        .map(|v| v < p2.graph.vertex_count() && p2.graph.valency(v) > 0)
        .collect();
    let mut omega = Vec::with_capacity(n);
    for v in 0..n {
        let w = match (used1[v], used2[v]) {
            (true, true) => vertex_op.apply(p1.omega[v], p2.omega[v]),
            (true, false) => p1.omega[v],
            (false, true) => p2.omega[v],
            (false, false) => {
                // an isolated vertex of the union namespace
                if v < p1.omega.len() {
                    p1.omega[v]
                } else {
                    p2.omega[v]
                }
            }
        };
        omega.push(w);
    }
    GraphPhase::new(g, omega, p1.op)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_phase() -> GraphPhase {
        let g = Multigraph::complete(4);
        let omega = vec![
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(0.0, 1.0, 0.0),
            Vec3::new(0.0, 0.0, 1.0),
            Vec3::new(1.0, 1.0, 1.0),
        ];
        GraphPhase::new(g, omega, VecOp::Cross).unwrap()
    }

    #[test]
    fn two_vertex_cross_product_entry() {
        let g = Multigraph::complete(2);
        let ph = GraphPhase::new(
            g,
            vec![Vec3::new(1.0, 0.0, 0.0), Vec3::new(0.0, 1.0, 0.0)],
            VecOp::Cross,
        )
        .unwrap();
        let (_, lam) = ph.phase_matrices();
        // distance² = 2: (1,0,0)×(0,1,0) = (0,0,1), divided by 2
        assert_eq!(lam[0][1], Vec3::new(0.0, 0.0, 0.5));
    }

    #[test]
    fn non_adjacent_entries_vanish() {
        let g = Multigraph::path(3);
        let ph = GraphPhase::new(
            g,
            vec![
                Vec3::new(0.0, 0.0, 1.0),
                Vec3::new(0.0, 1.0, 0.0),
                Vec3::new(1.0, 0.0, 0.0),
            ],
            VecOp::Cross,
        )
        .unwrap();
        let (v, lam) = ph.phase_matrices();
        assert_eq!(v[0][2], Vec3::zero());
        assert_eq!(lam[0][2], Vec3::zero());
    }

    #[test]
    fn star_identity_on_k4() {
        assert!(k4_phase().verify_star_identity() <= 1e-9);
    }

    #[test]
    fn coincident_vertices_rejected() {
        let g = Multigraph::complete(2);
        let res = GraphPhase::new(
            g,
            vec![Vec3::new(1.0, 2.0, 3.0), Vec3::new(1.0, 2.0, 3.0)],
            VecOp::Cross,
        );
        assert!(matches!(res, Err(PhaseError::CoincidentAdjacentVertices { edge: 0 })));
    }

    #[test]
    fn capacity_sums_componentwise() {
        let g = Multigraph::complete(2);
        let ph = GraphPhase::new(
            g,
            vec![Vec3::new(1.0, 0.0, 0.0), Vec3::new(0.0, 1.0, 0.0)],
            VecOp::Cross,
        )
        .unwrap();
        assert_eq!(ph.capacity(), Vec3::new(1.0, 1.0, 0.0));
    }

    #[test]
    fn unit_norm_entropy_vanishes() {
        let g = Multigraph::complete(2);
        let ph = GraphPhase::new(
            g,
            vec![Vec3::new(1.0, 0.0, 0.0), Vec3::new(0.0, 1.0, 0.0)],
            VecOp::Cross,
        )
        .unwrap();
        assert_eq!(ph.entropy(NormConvention::Plain).unwrap(), 0.0);
        // the squared variant doubles the plain one
        let ph2 = GraphPhase::new(
            Multigraph::complete(2),
            vec![Vec3::new(2.0, 0.0, 0.0), Vec3::new(0.0, 3.0, 0.0)],
            VecOp::Cross,
        )
        .unwrap();
        let plain = ph2.entropy(NormConvention::Plain).unwrap();
        let squared = ph2.entropy(NormConvention::Squared).unwrap();
        assert!((squared - 2.0 * plain).abs() < 1e-12);
    }

    #[test]
    fn doubling_by_addition() {
        let ph = k4_phase();
        let sum = add_phases(&ph, &ph, VecOp::Add).unwrap();
        let expect = ph.capacity().scale(2.0);
        let got = sum.capacity();
        assert!(got.sub(expect).max_abs() < 1e-12);
    }

    #[test]
    fn disjoint_addition_carries_both_sides() {
        let g1 = Multigraph::new(4, vec![(0, 1)]).unwrap();
        let g2 = Multigraph::new(4, vec![(2, 3)]).unwrap();
        let p1 = GraphPhase::new(
            g1,
            vec![
                Vec3::new(1.0, 0.0, 0.0),
                Vec3::new(0.0, 1.0, 0.0),
                Vec3::zero(),
                Vec3::zero(),
            ],
            VecOp::Cross,
        )
        .unwrap();
        let p2 = GraphPhase::new(
            g2,
            vec![
                Vec3::zero(),
                Vec3::zero(),
                Vec3::new(0.0, 0.0, 1.0),
                Vec3::new(1.0, 1.0, 0.0),
            ],
            VecOp::Cross,
        )
        .unwrap();
        let sum = add_phases(&p1, &p2, VecOp::Add).unwrap();
        assert_eq!(sum.graph.edge_count(), 2);
        assert_eq!(sum.omega[0], Vec3::new(1.0, 0.0, 0.0));
        assert_eq!(sum.omega[3], Vec3::new(1.0, 1.0, 0.0));
    }
}
