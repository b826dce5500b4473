//! The quadricell algebra. Edge `e` owns the four cells `(e, 1)`,
//! `(e, α)`, `(e, β)`, `(e, αβ)`, encoded as `4e + k` with `k` in
//! `{0,1,2,3}`; the Klein group acts by xor on `k` (α flips bit 0, β
//! flips bit 1).

use crate::error::MapError;
use std::fmt;

/// A quadricell id: `4 * edge + k`.
pub type Quadricell = usize;

pub fn alpha(x: Quadricell) -> Quadricell {
    x ^ 1
}

pub fn beta(x: Quadricell) -> Quadricell {
    x ^ 2
}

pub fn alpha_beta(x: Quadricell) -> Quadricell {
    x ^ 3
}

pub fn edge_of(x: Quadricell) -> usize {
    x / 4
}

pub fn k_of(x: Quadricell) -> usize {
    x % 4
}

/// Render `4e+k` in the file notation `e<edge>.<1|a|b|ab>`.
pub fn quadricell_name(x: Quadricell) -> String {
    let suffix = ["1", "a", "b", "ab"][k_of(x)];
    format!("e{}.{}", edge_of(x), suffix)
}

pub fn parse_quadricell(s: &str) -> Option<Quadricell> {
    let rest = s.strip_prefix('e')?;
    let (num, suffix) = rest.split_once('.')?;
    let e: usize = num.parse().ok()?;
    let k = match suffix {
        "1" => 0,
        "a" => 1,
        "b" => 2,
        "ab" => 3,
        _ => return None,
    };
    Some(4 * e + k)
}

/// Which axiom failed, and where.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapDefect {
    /// Some power of the vertex permutation maps `x` to `αx`.
    AxiomOne { cell: Quadricell },
    /// `αP ≠ P^{-1}α` at `cell`.
    AxiomTwo { cell: Quadricell },
    /// `⟨α, β, P⟩` is not transitive; the witness orbit is a proper
    /// nonempty subset.
    AxiomThree { orbit_size: usize, total: usize },
}

impl fmt::Display for MapDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapDefect::AxiomOne { cell } => {
                write!(f, "axiom (i) fails at {}", quadricell_name(*cell))
            }
            MapDefect::AxiomTwo { cell } => {
                write!(f, "axiom (ii) fails at {}", quadricell_name(*cell))
            }
            MapDefect::AxiomThree { orbit_size, total } => {
                write!(f, "axiom (iii) fails: orbit of size {orbit_size} out of {total}")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceKind {
    Orientable { genus: usize },
    NonOrientable { crosscaps: usize },
}

/// A combinatorial map: a permutation of the quadricells of
/// `edge_count` edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CombinatorialMap {
    edge_count: usize,
    p: Vec<Quadricell>,
}

impl CombinatorialMap {
    /// Build from a raw permutation vector (length `4 * edge_count`).
    pub fn from_permutation(edge_count: usize, p: Vec<Quadricell>) -> Result<Self, MapError> {
        let n = 4 * edge_count;
        if p.len() != n {
            return Err(MapError::MalformedPermutation(format!(
                "length {} for {} quadricells",
                p.len(),
                n
            )));
        }
        let mut seen = vec![false; n];
        for &x in &p {
            if x >= n || seen[x] {
                return Err(MapError::MalformedPermutation("not a bijection".into()));
            }
            seen[x] = true;
        }
        Ok(CombinatorialMap { edge_count, p })
    }

    /// Build from disjoint cycles; unlisted quadricells are fixed points.
    pub fn from_cycles(edge_count: usize, cycles: &[Vec<Quadricell>]) -> Result<Self, MapError> {
        let n = 4 * edge_count;
        let mut p: Vec<usize> = (0..n).collect();
        let mut listed = vec![false; n];
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                if x >= n {
                    return Err(MapError::MalformedPermutation(format!(
                        "cell {x} out of range"
                    )));
                }
                if listed[x] {
                    return Err(MapError::MalformedPermutation(format!(
                        "cell {} listed twice",
                        quadricell_name(x)
                    )));
                }
                listed[x] = true;
                p[x] = c[(i + 1) % c.len()];
            }
        }
        CombinatorialMap::from_permutation(edge_count, p)
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn cell_count(&self) -> usize {
        4 * self.edge_count
    }

    pub fn permutation(&self) -> &[Quadricell] {
        &self.p
    }

    pub fn apply(&self, x: Quadricell) -> Quadricell {
        self.p[x]
    }

    pub fn apply_inverse(&self, x: Quadricell) -> Quadricell {
        self.p.iter().position(|&y| y == x).expect("bijection")
    }

    /// The face permutation `x -> P(αβ x)`.
    pub fn face_map(&self, x: Quadricell) -> Quadricell {
        self.p[alpha_beta(x)]
    }

    /// Disjoint cycles of the vertex permutation, each starting at its
    /// least cell, ordered by that representative.
    pub fn p_cycles(&self) -> Vec<Vec<Quadricell>> {
        cycles_of(&self.p)
    }

    /// Check the three axioms.
    pub fn validate(&self) -> Result<(), MapError> {
        let n = self.cell_count();
        // (ii) αP = P^{-1}α, i.e. P(α(P(x))) = α(x)
        for x in 0..n {
            if self.p[alpha(self.p[x])] != alpha(x) {
                return Err(MapError::InvalidMap(MapDefect::AxiomTwo { cell: x }));
            }
        }
        // (i) the P-orbit of x avoids αx
        for x in 0..n {
            let mut y = self.p[x];
            while y != x {
                if y == alpha(x) {
                    return Err(MapError::InvalidMap(MapDefect::AxiomOne { cell: x }));
                }
                y = self.p[y];
            }
        }
        // (iii) transitivity of ⟨α, β, P⟩
        if n > 0 {
            let orbit = orbit_under(n, 0, |x| [alpha(x), beta(x), self.p[x]]);
            if orbit.len() != n {
                return Err(MapError::InvalidMap(MapDefect::AxiomThree {
                    orbit_size: orbit.len(),
                    total: n,
                }));
            }
        }
        Ok(())
    }

    /// Vertices as conjugate cycle pairs; each vertex is returned as its
    /// representative cycle (the one containing the least cell of the
    /// pair).
    pub fn vertices(&self) -> Vec<Vec<Quadricell>> {
        let cycles = self.p_cycles();
        let mut by_min: std::collections::BTreeMap<Quadricell, Vec<Quadricell>> =
            Default::default();
        for c in cycles {
            by_min.insert(c[0], c);
        }
        let mut out = Vec::new();
        let mut consumed: std::collections::BTreeSet<Quadricell> = Default::default();
        for (&rep, cycle) in &by_min {
            if consumed.contains(&rep) {
                continue;
            }
            // conjugate cycle = α-image (reversed); its min cell keys it
            let conj_min = cycle.iter().map(|&x| alpha(x)).min().unwrap();
            consumed.insert(rep);
            consumed.insert(conj_min);
            out.push(cycle.clone());
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices().len()
    }

    /// Faces as conjugate orbit pairs of the face permutation, one
    /// representative orbit each.
    pub fn faces(&self) -> Vec<Vec<Quadricell>> {
        let n = self.cell_count();
        let mut f = vec![0usize; n];
        for x in 0..n {
            f[x] = self.face_map(x);
        }
        let cycles = cycles_of(&f);
        let mut by_min: std::collections::BTreeMap<Quadricell, Vec<Quadricell>> =
            Default::default();
        for c in cycles {
            by_min.insert(c[0], c);
        }
        let mut out = Vec::new();
        let mut consumed: std::collections::BTreeSet<Quadricell> = Default::default();
        for (&rep, cycle) in &by_min {
            if consumed.contains(&rep) {
                continue;
            }
            let conj_min = cycle.iter().map(|&x| beta(x)).min().unwrap();
            consumed.insert(rep);
            consumed.insert(conj_min);
            out.push(cycle.clone());
        }
        out
    }

    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count as i64 + self.face_count() as i64
    }

    /// Orientability: `⟨αβ, P⟩` splits the cells into two orbits exactly
    /// when the map is orientable. Forward closure suffices: powers of a
    /// permutation reach its inverse.
    pub fn is_orientable(&self) -> bool {
        let n = self.cell_count();
        if n == 0 {
            return true;
        }
        let orbit = orbit_under(n, 0, |x| [alpha_beta(x), self.p[x], self.p[x]]);
        orbit.len() < n
    }

    /// Surface classification from the Euler characteristic.
    pub fn surface(&self) -> Result<SurfaceKind, MapError> {
        let chi = self.euler_characteristic();
        if self.is_orientable() {
            let two_minus = 2 - chi;
            if two_minus % 2 != 0 || two_minus < 0 {
                return Err(MapError::InvalidInput(format!(
                    "orientable surface with chi = {chi}"
                )));
            }
            Ok(SurfaceKind::Orientable { genus: (two_minus / 2) as usize })
        } else {
            let q = 2 - chi;
            if q <= 0 {
                return Err(MapError::InvalidInput(format!(
                    "non-orientable surface with chi = {chi}"
                )));
            }
            Ok(SurfaceKind::NonOrientable { crosscaps: q as usize })
        }
    }

    /// The dual map: faces become vertices. Quadricells are renamed by
    /// swapping the α and β roles.
    pub fn dual(&self) -> CombinatorialMap {
        let n = self.cell_count();
        let rename = |x: Quadricell| -> Quadricell {
            let k = k_of(x);
            let swapped = match k {
                1 => 2,
                2 => 1,
                other => other,
            };
            4 * edge_of(x) + swapped
        };
        let mut p = vec![0usize; n];
        for x in 0..n {
            p[rename(x)] = rename(self.face_map(x));
        }
        CombinatorialMap { edge_count: self.edge_count, p }
    }

    /// Underlying multigraph: vertices from cycle pairs, one edge per
    /// quadricell class, endpoints located by which vertex owns each
    /// end's cells.
    pub fn underlying_graph(&self) -> msg_core::Multigraph {
        let verts = self.vertices();
        let n = self.cell_count();
        let mut owner = vec![usize::MAX; n];
        for (vi, cycle) in verts.iter().enumerate() {
            for &x in cycle {
                owner[x] = vi;
                owner[alpha(x)] = vi;
            }
        }
        let mut edges = Vec::new();
        for e in 0..self.edge_count {
            let tail = owner[4 * e];
            let head = owner[4 * e + 2];
            edges.push((tail, head));
        }
        msg_core::Multigraph::new(verts.len(), edges).expect("owners assigned")
    }
}

/// Disjoint cycles of a permutation vector, each rotated to start at its
/// least element, sorted by that element.
pub fn cycles_of(p: &[usize]) -> Vec<Vec<usize>> {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut y = p[start];
        while y != start {
            seen[y] = true;
            cycle.push(y);
            y = p[y];
        }
        out.push(cycle);
    }
    out
}

/// Orbit of `start` under a 3-generator action.
pub fn orbit_under<F>(n: usize, start: usize, gens: F) -> Vec<usize>
where
    F: Fn(usize) -> [usize; 3],
{
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut frontier = vec![start];
    let mut orbit = vec![start];
    while let Some(x) = frontier.pop() {
        for y in gens(x) {
            if !seen[y] {
                seen[y] = true;
                orbit.push(y);
                frontier.push(y);
            }
        }
    }
    orbit.sort_unstable();
    orbit
}

/// The Klein-bottle map of the 4-dipole printed in the source material:
/// P = (x,y,z,w)(αβx,αβy,βz,βw)(αx,αw,αz,αy)(βx,αβw,αβz,βy) with
/// x,y,z,w the base cells of edges 0..3.
pub fn klein_dipole_map() -> CombinatorialMap {
    let x = 0usize;
    let y = 4;
    let z = 8;
    let w = 12;
    let cycles = vec![
        vec![x, y, z, w],
        vec![alpha_beta(x), alpha_beta(y), beta(z), beta(w)],
        vec![alpha(x), alpha(w), alpha(z), alpha(y)],
        vec![beta(x), alpha_beta(w), alpha_beta(z), beta(y)],
    ];
    CombinatorialMap::from_cycles(4, &cycles).expect("printed map is well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_dipole_validates() {
        let m = klein_dipole_map();
        assert_eq!(m.validate(), Ok(()));
    }

    #[test]
    fn klein_dipole_orbits() {
        let m = klein_dipole_map();
        assert_eq!(m.vertex_count(), 2);
        assert_eq!(m.edge_count(), 4);
        assert_eq!(m.face_count(), 2);
        assert_eq!(m.euler_characteristic(), 0);
        assert!(!m.is_orientable());
        assert_eq!(m.surface(), Ok(SurfaceKind::NonOrientable { crosscaps: 2 }));
    }

    #[test]
    fn identity_on_one_edge_is_the_segment_map() {
        // the one-edge map on the sphere: P = identity
        let m = CombinatorialMap::from_cycles(1, &[]).unwrap();
        assert_eq!(m.validate(), Ok(()));
        assert_eq!(m.vertex_count(), 2);
        assert_eq!(m.face_count(), 1);
        assert_eq!(m.euler_characteristic(), 2);
        assert!(m.is_orientable());
    }

    #[test]
    fn identity_on_two_edges_fails_transitivity() {
        let m = CombinatorialMap::from_cycles(2, &[]).unwrap();
        assert!(matches!(
            m.validate(),
            Err(MapError::InvalidMap(MapDefect::AxiomThree { .. }))
        ));
    }

    #[test]
    fn axiom_one_violation_detected() {
        // P maps x directly to αx
        let m = CombinatorialMap::from_cycles(1, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert!(matches!(
            m.validate(),
            Err(MapError::InvalidMap(MapDefect::AxiomOne { .. }))
                | Err(MapError::InvalidMap(MapDefect::AxiomTwo { .. }))
        ));
    }

    #[test]
    fn axiom_two_violation_detected() {
        // a 3-cycle on one edge's cells cannot commute correctly
        let m = CombinatorialMap::from_cycles(1, &[vec![0, 2, 1]]).unwrap();
        assert!(matches!(
            m.validate(),
            Err(MapError::InvalidMap(MapDefect::AxiomTwo { .. }))
        ));
    }

    #[test]
    fn sphere_loop_and_projective_loop() {
        // untwisted loop: (x, αβx)(βx, αx)
        let sphere = CombinatorialMap::from_cycles(1, &[vec![0, 3], vec![2, 1]]).unwrap();
        assert_eq!(sphere.validate(), Ok(()));
        assert_eq!(sphere.vertex_count(), 1);
        assert_eq!(sphere.face_count(), 2);
        assert_eq!(sphere.euler_characteristic(), 2);
        assert!(sphere.is_orientable());

        // twisted loop: (x, βx)(αβx, αx)
        let projective = CombinatorialMap::from_cycles(1, &[vec![0, 2], vec![3, 1]]).unwrap();
        assert_eq!(projective.validate(), Ok(()));
        assert_eq!(projective.vertex_count(), 1);
        assert_eq!(projective.face_count(), 1);
        assert_eq!(projective.euler_characteristic(), 1);
        assert!(!projective.is_orientable());
    }

    #[test]
    fn dual_swaps_vertices_and_faces() {
        let m = klein_dipole_map();
        let d = m.dual();
        assert_eq!(d.validate(), Ok(()));
        assert_eq!(d.vertex_count(), m.face_count());
        assert_eq!(d.face_count(), m.vertex_count());
        assert_eq!(d.euler_characteristic(), m.euler_characteristic());
    }

    #[test]
    fn underlying_graph_of_klein_dipole() {
        let g = klein_dipole_map().underlying_graph();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.multiplicity(0, 1), 4);
    }

    #[test]
    fn quadricell_names_round_trip() {
        for x in 0..12 {
            assert_eq!(parse_quadricell(&quadricell_name(x)), Some(x));
        }
    }
}
