//! The five sphere maps with regular faces and vertices.

use crate::error::MapError;
use crate::map::CombinatorialMap;
use crate::rotation::RotationSystem;
use msg_core::{Multigraph, SemiArc};

/// A regular polyhedron: all faces of length `face_len`, all vertices of
/// valency `valency`, realized as a sphere map.
pub struct Polyhedron {
    pub face_len: usize,
    pub valency: usize,
    pub map: CombinatorialMap,
}

/// Build a sphere map from a consistently oriented face list (every
/// directed edge used exactly once across the faces).
pub fn map_from_faces(vertex_count: usize, faces: &[Vec<usize>]) -> Result<CombinatorialMap, MapError> {
    // undirected edge list; keyed both ways
    let mut edge_id: std::collections::HashMap<(usize, usize), usize> = Default::default();
    let mut edges = Vec::new();
    for f in faces {
        for i in 0..f.len() {
            let a = f[i];
            let b = f[(i + 1) % f.len()];
            if !edge_id.contains_key(&(a, b)) && !edge_id.contains_key(&(b, a)) {
                edge_id.insert((a, b), edges.len());
                edges.push((a, b));
            }
        }
    }
    let g = Multigraph::new(vertex_count, edges.clone())
        .map_err(|e| MapError::InvalidInput(e.to_string()))?;
    // corner successor at each vertex: in-edge {a,v} -> out-edge {v,b}
    let arc_of = |a: usize, b: usize| -> SemiArc {
        if let Some(&e) = edge_id.get(&(a, b)) {
            SemiArc { edge: e, end: 0 }
        } else {
            let e = edge_id[&(b, a)];
            SemiArc { edge: e, end: 1 }
        }
    };
    let mut succ: std::collections::HashMap<(usize, usize), SemiArc> = Default::default();
    for f in faces {
        let l = f.len();
        for i in 0..l {
            let a = f[i];
            let v = f[(i + 1) % l];
            let b = f[(i + 2) % l];
            // at the corner of v between edges (a,v) and (v,b): the arc of
            // edge {a,v} rooted at v is followed by the arc of {v,b} at v
            let in_arc = arc_of(v, a); // arc rooted at v along edge {a,v}
            let out_arc = arc_of(v, b);
            if succ.insert((v, in_arc.index()), out_arc).is_some() {
                return Err(MapError::InvalidInput(format!(
                    "directed corner reused at vertex {v}"
                )));
            }
        }
    }
    let mut rotation = Vec::new();
    for v in 0..vertex_count {
        let incident = g.semi_arcs_at(v);
        if incident.is_empty() {
            rotation.push(Vec::new());
            continue;
        }
        let mut cycle = vec![incident[0]];
        loop {
            let cur = *cycle.last().unwrap();
            let next = *succ
                .get(&(v, cur.index()))
                .ok_or_else(|| MapError::InvalidInput(format!("no corner after arc at {v}")))?;
            if next == cycle[0] {
                break;
            }
            cycle.push(next);
            if cycle.len() > incident.len() {
                return Err(MapError::InvalidInput(format!(
                    "corners at vertex {v} do not close into one cycle"
                )));
            }
        }
        if cycle.len() != incident.len() {
            return Err(MapError::InvalidInput(format!(
                "vertex {v} link is disconnected"
            )));
        }
        rotation.push(cycle);
    }
    let rs = RotationSystem::new(g, rotation, vec![false; edges.len()])?;
    Ok(rs.to_map())
}

fn tetrahedron() -> CombinatorialMap {
    map_from_faces(4, &[vec![0, 1, 2], vec![0, 3, 1], vec![0, 2, 3], vec![1, 3, 2]])
        .expect("tetrahedron face data")
}

fn cube() -> CombinatorialMap {
    // vertices: bits (x, y, z)
    let faces = vec![
        vec![0, 1, 3, 2], // z = 0 viewed from below
        vec![4, 6, 7, 5], // z = 1 viewed from above
        vec![0, 4, 5, 1], // y = 0
        vec![2, 3, 7, 6], // y = 1
        vec![0, 2, 6, 4], // x = 0
        vec![1, 5, 7, 3], // x = 1
    ];
    map_from_faces(8, &faces).expect("cube face data")
}

fn icosahedron() -> CombinatorialMap {
    // north pole 0, upper ring 1..=5, lower ring 6..=10, south pole 11
    let u = |i: usize| 1 + i % 5;
    let l = |i: usize| 6 + i % 5;
    let mut faces = Vec::new();
    for i in 0..5 {
        faces.push(vec![0, u(i), u(i + 1)]);
        faces.push(vec![u(i), l(i), u(i + 1)]);
        faces.push(vec![l(i), l(i + 1), u(i + 1)]);
        faces.push(vec![11, l(i + 1), l(i)]);
    }
    map_from_faces(12, &faces).expect("icosahedron face data")
}

/// The five (face length, valency) pairs with sphere maps realizing
/// them: (3,3), (3,4), (3,5), (4,3), (5,3).
pub fn platonic_solids() -> Vec<Polyhedron> {
    let tetra = tetrahedron();
    let cube_map = cube();
    let octa = cube_map.dual();
    let icosa = icosahedron();
    let dodeca = icosa.dual();
    vec![
        Polyhedron { face_len: 3, valency: 3, map: tetra },
        Polyhedron { face_len: 3, valency: 4, map: octa },
        Polyhedron { face_len: 3, valency: 5, map: icosa },
        Polyhedron { face_len: 4, valency: 3, map: cube_map },
        Polyhedron { face_len: 5, valency: 3, map: dodeca },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_solids_are_spheres_with_regular_data() {
        let solids = platonic_solids();
        assert_eq!(solids.len(), 5);
        let expected = [
            (3, 3, 4, 6, 4),
            (3, 4, 6, 12, 8),
            (3, 5, 12, 30, 20),
            (4, 3, 8, 12, 6),
            (5, 3, 20, 30, 12),
        ];
        for (solid, &(l, k, v, e, f)) in solids.iter().zip(&expected) {
            assert_eq!((solid.face_len, solid.valency), (l, k));
            let m = &solid.map;
            assert_eq!(m.validate(), Ok(()), "({l},{k})");
            assert_eq!(m.vertex_count(), v, "({l},{k}) vertices");
            assert_eq!(m.edge_count(), e, "({l},{k}) edges");
            assert_eq!(m.face_count(), f, "({l},{k}) faces");
            assert_eq!(m.euler_characteristic(), 2, "({l},{k}) euler");
            assert!(m.is_orientable());
            for face in m.faces() {
                assert_eq!(face.len(), l, "({l},{k}) face length");
            }
            for vertex in m.vertices() {
                assert_eq!(vertex.len(), k, "({l},{k}) valency");
            }
        }
    }

    #[test]
    fn tetrahedron_has_four_triangles() {
        let t = tetrahedron();
        assert_eq!(t.face_count(), 4);
        assert_eq!(t.euler_characteristic(), 2);
    }

    #[test]
    fn cube_counts() {
        let c = cube();
        assert_eq!(c.vertex_count(), 8);
        assert_eq!(c.edge_count(), 12);
        assert_eq!(c.face_count(), 6);
    }
}
