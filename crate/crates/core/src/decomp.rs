//! Edge decompositions: bouquets/dipoles and the hamiltonian-circuit
//! decomposition of odd complete graphs.

use crate::graph::Multigraph;
use crate::ham::Circuit;

/// One part of a bouquet/dipole decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompPart {
    /// All loops at one vertex.
    Bouquet { vertex: usize, edges: Vec<usize> },
    /// All edges joining one unordered vertex pair (a single edge is the
    /// dipole with one parallel edge and no loops).
    Dipole { ends: (usize, usize), edges: Vec<usize> },
}

impl DecompPart {
    pub fn edges(&self) -> &[usize] {
        match self {
            DecompPart::Bouquet { edges, .. } => edges,
            DecompPart::Dipole { edges, .. } => edges,
        }
    }
}

/// Partition the edge set into per-vertex loop bouquets and per-pair
/// dipoles.
pub fn decompose_bouquets_dipoles(g: &Multigraph) -> Vec<DecompPart> {
    let mut loops: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    let mut bundles: std::collections::BTreeMap<(usize, usize), Vec<usize>> = Default::default();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if a == b {
            loops.entry(a).or_default().push(e);
        } else {
            let key = if a < b { (a, b) } else { (b, a) };
            bundles.entry(key).or_default().push(e);
        }
    }
    let mut out = Vec::new();
    for (vertex, edges) in loops {
        out.push(DecompPart::Bouquet { vertex, edges });
    }
    for (ends, edges) in bundles {
        out.push(DecompPart::Dipole { ends, edges });
    }
    out
}

/// Decompose `K_{2n+1}` into `n` edge-disjoint hamiltonian circuits: the
/// i-th circuit walks the zig-zag v_i, v_{i+1}, v_{i-1}, v_{i+2}, ...
/// around the even gon and closes through v_0.
pub fn decompose_complete_odd(n: usize) -> Vec<Circuit> {
    assert!(n >= 1);
    let order = 2 * n + 1;
    let g = Multigraph::complete(order);
    let edge_index = |u: usize, v: usize| -> usize {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        // edges of complete() are emitted in lexicographic order
        (0..a).map(|r| order - 1 - r).sum::<usize>() + (b - a - 1)
    };
    // gon vertices are 1..=2n; arithmetic on their labels is mod 2n,
    // with representative shifted into 1..=2n.
    let gon = |x: isize| -> usize {
        let m = 2 * n as isize;
        (((x - 1).rem_euclid(m)) + 1) as usize
    };
    let mut out = Vec::new();
    for i in 1..=n {
        let mut vertices = vec![0usize];
        for step in 0..2 * n {
            // zig-zag offsets 0, +1, -1, +2, -2, ..., ending at +n
            let d = if step % 2 == 0 {
                -((step / 2) as isize)
            } else {
                ((step + 1) / 2) as isize
            };
            vertices.push(gon(i as isize + d));
        }
        let mut edges = Vec::new();
        for w in 0..vertices.len() {
            let u = vertices[w];
            let v = vertices[(w + 1) % vertices.len()];
            edges.push(edge_index(u, v));
        }
        debug_assert!(edges.iter().all(|&e| e < g.edge_count()));
        out.push(Circuit { vertices, edges });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn bouquet_decomposes_to_itself() {
        let parts = decompose_bouquets_dipoles(&Multigraph::bouquet(3));
        assert_eq!(parts.len(), 1);
        assert!(matches!(parts[0], DecompPart::Bouquet { vertex: 0, .. }));
        assert_eq!(parts[0].edges().len(), 3);
    }

    #[test]
    fn k2_is_one_dipole() {
        let parts = decompose_bouquets_dipoles(&Multigraph::complete(2));
        assert_eq!(parts.len(), 1);
        assert!(matches!(parts[0], DecompPart::Dipole { ends: (0, 1), .. }));
    }

    #[test]
    fn k3_gives_three_dipoles_partitioning_edges() {
        let g = Multigraph::complete(3);
        let parts = decompose_bouquets_dipoles(&g);
        assert_eq!(parts.len(), 3);
        let mut covered = HashSet::new();
        for p in &parts {
            for &e in p.edges() {
                assert!(covered.insert(e), "edge {e} covered twice");
            }
        }
        assert_eq!(covered.len(), g.edge_count());
    }

    #[test]
    fn decomposition_partitions_any_multigraph() {
        let g = Multigraph::new(3, vec![(0, 0), (0, 1), (0, 1), (1, 2), (2, 2)]).unwrap();
        let parts = decompose_bouquets_dipoles(&g);
        let mut covered = HashSet::new();
        for p in &parts {
            for &e in p.edges() {
                assert!(covered.insert(e));
            }
        }
        assert_eq!(covered.len(), g.edge_count());
    }

    fn check_odd_decomposition(n: usize) {
        let order = 2 * n + 1;
        let g = Multigraph::complete(order);
        let circuits = decompose_complete_odd(n);
        assert_eq!(circuits.len(), n);
        let mut covered = HashSet::new();
        for c in &circuits {
            assert_eq!(c.vertices.len(), order, "each circuit spans");
            let distinct: HashSet<usize> = c.vertices.iter().copied().collect();
            assert_eq!(distinct.len(), order);
            for (w, &e) in c.edges.iter().enumerate() {
                let (a, b) = g.edge(e);
                let u = c.vertices[w];
                let v = c.vertices[(w + 1) % c.vertices.len()];
                assert!((a, b) == (u, v) || (a, b) == (v, u), "edge indices follow the walk");
                assert!(covered.insert(e), "edge {e} reused");
            }
        }
        assert_eq!(covered.len(), g.edge_count(), "union covers K_{{{order}}}");
    }

    #[test]
    fn k3_decomposition() {
        check_odd_decomposition(1);
    }

    #[test]
    fn k5_decomposition() {
        check_odd_decomposition(2);
    }

    #[test]
    fn k7_decomposition() {
        check_odd_decomposition(3);
    }

    #[test]
    fn larger_decompositions() {
        check_odd_decomposition(4);
        check_odd_decomposition(5);
    }
}
