//! Multi-voltage map lifting.
//!
//! Voltages live on quadricells through a per-edge value: the 1 and α
//! cells of an edge carry the value itself, the β and αβ cells carry its
//! inverse, resolved inside whichever operation is lifting. Each
//! operation of the multi-group produces one lifted map on the cells
//! `X × Γ`; the aggregate Euler characteristic follows the accounting
//! `|Γ|·ν(M) − |Γ|·ε(M) + Σ_i φ_i`.

use crate::error::MapError;
use crate::map::{alpha, k_of, CombinatorialMap, Quadricell};
use msg_groups::MultiGroup;

/// A multi-voltage assignment on a map: one universe element per edge,
/// read off quadricells with the per-operation inverse rule.
#[derive(Debug, Clone)]
pub struct MapVoltage {
    pub base: CombinatorialMap,
    pub groups: MultiGroup,
    /// voltage of the `(e, 1)` cell, a universe id
    pub psi: Vec<usize>,
}

/// The lifted structure: one combinatorial map per operation, all over
/// the same vertex fibers.
#[derive(Debug, Clone)]
pub struct LiftedMaps {
    pub per_op: Vec<CombinatorialMap>,
    pub fiber_size: usize,
    base_vertices: usize,
    base_edges: usize,
    /// (face rep, op) -> order of the face voltage in that operation
    pub face_orders: Vec<Vec<usize>>,
    /// vertices where the face-voltage generation condition fails, per op
    pub generation_failures: Vec<Vec<usize>>,
}

impl MapVoltage {
    pub fn new(
        base: CombinatorialMap,
        groups: MultiGroup,
        psi: Vec<usize>,
    ) -> Result<Self, MapError> {
        base.validate()?;
        if !groups.equal_member_sets() {
            return Err(MapError::InvalidInput(
                "map lifting needs constituents equal as sets".into(),
            ));
        }
        if psi.len() != base.edge_count() {
            return Err(MapError::InvalidInput("one voltage per edge".into()));
        }
        for &v in &psi {
            if v >= groups.universe_size() {
                return Err(MapError::InvalidInput(format!("voltage {v} outside universe")));
            }
        }
        Ok(MapVoltage { base, groups, psi })
    }

    /// Voltage of a quadricell inside operation `op`: β-side cells carry
    /// the operation-relative inverse.
    pub fn cell_voltage(&self, op: usize, x: Quadricell) -> usize {
        let e = crate::map::edge_of(x);
        let v = self.psi[e];
        if k_of(x) < 2 {
            v
        } else {
            self.groups.inverse(op, v).expect("equal-set constituents contain the voltage")
        }
    }

    /// The face voltage `ψ(f, ∘_op)`: the product of cell voltages along
    /// the face orbit.
    pub fn face_voltage(&self, op: usize, face: &[Quadricell]) -> usize {
        let mut acc = self.groups.identity_of(op);
        for &x in face {
            let v = self.cell_voltage(op, x);
            acc = self.groups.op(op, acc, v).expect("closure");
        }
        acc
    }

    /// Build the lifted maps.
    pub fn lift(&self) -> Result<LiftedMaps, MapError> {
        let nops = self.groups.constituent_count();
        let fiber: Vec<usize> = self.groups.member_set(0);
        let fsize = fiber.len();
        let fiber_pos = |u: usize| fiber.iter().position(|&m| m == u).unwrap();
        let base_cells = self.base.cell_count();

        let faces = self.base.faces();
        let mut per_op = Vec::new();
        let mut face_orders = Vec::new();
        let mut generation_failures = Vec::new();
        for op in 0..nops {
            // lifted edge id for (e, g): e * fsize + g_pos, where g is the
            // fiber element of the (e,1) cell of the lifted K-orbit.
            // Lifted cell for (x, g): cells (e,0,g),(e,1,g) belong to
            // lifted edge (e,g); (e,2,h),(e,3,h) belong to lifted edge
            // (e, h ∘ ψ(e)^{-1})... equivalently the β-pair of (e,0,g) is
            // (e,2, g∘ψ(e)).
            let cell_of = |x: Quadricell, gpos: usize| -> usize {
                let e = crate::map::edge_of(x);
                let k = k_of(x);
                let g = fiber[gpos];
                let owner_g = if k < 2 {
                    g
                } else {
                    // (e, k>=2, g) sits in the lifted edge whose (e,1)-cell
                    // fiber h satisfies h ∘ ψ(e) = g
                    let psi_inv = self.groups.inverse(op, self.psi[e]).unwrap();
                    self.groups.op(op, g, psi_inv).unwrap()
                };
                4 * (e * fsize + fiber_pos(owner_g)) + k
            };
            let n = base_cells * fsize;
            let mut p = vec![usize::MAX; n];
            for x in 0..base_cells {
                for gpos in 0..fsize {
                    // vertex rotation preserves the fiber element
                    p[cell_of(x, gpos)] = cell_of(self.base.apply(x), gpos);
                }
            }
            debug_assert!(p.iter().all(|&y| y != usize::MAX));
            let lifted = CombinatorialMap::from_permutation(self.base.edge_count() * fsize, p)?;
            // face orders for the χ bookkeeping
            let orders: Vec<usize> = faces
                .iter()
                .map(|f| {
                    let fv = self.face_voltage(op, f);
                    self.groups.element_order(op, fv).expect("in constituent")
                })
                .collect();
            // generation condition: face voltages at each vertex generate
            let mut failures = Vec::new();
            for (vi, vcycle) in self.base.vertices().iter().enumerate() {
                let vcells: std::collections::HashSet<usize> = vcycle
                    .iter()
                    .flat_map(|&x| [x, alpha(x)])
                    .collect();
                let incident: Vec<usize> = faces
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| {
                        f.iter().any(|&x| vcells.contains(&x) || vcells.contains(&crate::map::beta(x)))
                    })
                    .map(|(fi, _)| fi)
                    .collect();
                let volts: Vec<usize> = incident
                    .iter()
                    .map(|&fi| {
                        self.groups
                            .local_index(op, self.face_voltage(op, &faces[fi]))
                            .unwrap()
                    })
                    .collect();
                let c = &self.groups.constituents()[op];
                if c.group.generated(&volts).len() != c.group.order() {
                    failures.push(vi);
                }
            }
            per_op.push(lifted);
            face_orders.push(orders);
            generation_failures.push(failures);
        }
        Ok(LiftedMaps {
            per_op,
            fiber_size: fsize,
            base_vertices: self.base.vertex_count(),
            base_edges: self.base.edge_count(),
            face_orders,
            generation_failures,
        })
    }
}

impl LiftedMaps {
    /// `|Γ| ν(M)`
    pub fn vertex_count(&self) -> usize {
        self.fiber_size * self.base_vertices
    }

    /// `|Γ| ε(M)`
    pub fn edge_count(&self) -> usize {
        self.fiber_size * self.base_edges
    }

    /// Total face count over the per-operation liftings.
    pub fn face_count(&self) -> usize {
        self.per_op.iter().map(|m| m.face_count()).sum()
    }

    /// Euler characteristic with the per-operation face accounting.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// The closed-form value: `|Γ|·(χ(M) − φ(M)) + Σ_i Σ_f |Γ|/o(ψ(f,∘_i))`,
    /// evaluated in exact integer arithmetic.
    pub fn euler_characteristic_formula(&self, base_chi: i64, base_faces: usize) -> i64 {
        let gamma = self.fiber_size as i64;
        let mut chi = gamma * (base_chi - base_faces as i64);
        for orders in &self.face_orders {
            for &o in orders {
                assert_eq!(self.fiber_size % o, 0, "element order divides the group order");
                chi += (self.fiber_size / o) as i64;
            }
        }
        chi
    }

    pub fn generation_condition_holds(&self) -> bool {
        self.generation_failures.iter().all(|f| f.is_empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use msg_groups::FiniteGroup;

    fn sphere_loop() -> CombinatorialMap {
        CombinatorialMap::from_cycles(1, &[vec![0, 3], vec![2, 1]]).unwrap()
    }

    #[test]
    fn z2_loop_lift_is_the_two_gon_sphere() {
        let groups = MultiGroup::single(FiniteGroup::cyclic(2));
        let mv = MapVoltage::new(sphere_loop(), groups, vec![1]).unwrap();
        let lift = mv.lift().unwrap();
        assert_eq!(lift.vertex_count(), 2);
        assert_eq!(lift.edge_count(), 2);
        assert_eq!(lift.face_count(), 2);
        assert_eq!(lift.euler_characteristic(), 2);
        let base_chi = 2;
        assert_eq!(lift.euler_characteristic_formula(base_chi, 2), 2);
        assert_eq!(lift.per_op[0].validate(), Ok(()));
        assert!(lift.generation_condition_holds());
    }

    #[test]
    fn identity_voltages_give_disjoint_copies() {
        let groups = MultiGroup::single(FiniteGroup::cyclic(3));
        let mv = MapVoltage::new(sphere_loop(), groups, vec![0]).unwrap();
        let lift = mv.lift().unwrap();
        // three disjoint copies: transitivity fails
        assert!(matches!(
            lift.per_op[0].validate(),
            Err(MapError::InvalidMap(crate::map::MapDefect::AxiomThree { .. }))
        ));
        assert!(!lift.generation_condition_holds());
        // χ is still additive: three spheres
        assert_eq!(lift.euler_characteristic(), 6);
        assert_eq!(lift.euler_characteristic_formula(2, 2), 6);
    }

    #[test]
    fn two_operation_lift_satisfies_the_chi_identity() {
        let z4 = FiniteGroup::cyclic(4);
        let groups = MultiGroup::same_set_shifts(&z4, &[0, 2]);
        let mv = MapVoltage::new(sphere_loop(), groups, vec![1]).unwrap();
        let lift = mv.lift().unwrap();
        assert_eq!(
            lift.euler_characteristic(),
            lift.euler_characteristic_formula(2, 2)
        );
        for m in &lift.per_op {
            assert_eq!(m.validate(), Ok(()));
        }
    }

    #[test]
    fn per_face_lift_counts_match_orders() {
        let groups = MultiGroup::single(FiniteGroup::cyclic(4));
        let base = sphere_loop();
        let mv = MapVoltage::new(base.clone(), groups, vec![1]).unwrap();
        let lift = mv.lift().unwrap();
        // each face voltage is 1 or -1, of order 4: one lifted face per
        // base face, so the lift is the 4-gon on the sphere
        assert_eq!(lift.face_orders[0], vec![4, 4]);
        assert_eq!(lift.per_op[0].face_count(), 2);
        assert_eq!(lift.euler_characteristic(), 4 - 4 + 2);
    }
}
