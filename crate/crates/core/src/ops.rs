//! Union, join and cartesian product.

use crate::graph::Multigraph;

/// Union over a shared vertex namespace. Edge multiplicities combine by
/// maximum, so `union_shared(g, g) == g`.
pub fn union_shared(g1: &Multigraph, g2: &Multigraph) -> Multigraph {
    let n = g1.vertex_count().max(g2.vertex_count());
    let norm = |(a, b): (usize, usize)| if a <= b { (a, b) } else { (b, a) };
    let mut count: std::collections::BTreeMap<(usize, usize), (usize, usize)> =
        std::collections::BTreeMap::new();
    for &e in g1.edges() {
        count.entry(norm(e)).or_insert((0, 0)).0 += 1;
    }
    for &e in g2.edges() {
        count.entry(norm(e)).or_insert((0, 0)).1 += 1;
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (k, (a, b)) in count {
        for _ in 0..a.max(b) {
            edges.push(k);
        }
    }
    Multigraph::new(n, edges).expect("endpoints in range")
}

/// Disjoint union: `g2`'s vertex ids are shifted past `g1`'s.
pub fn disjoint_union(g1: &Multigraph, g2: &Multigraph) -> Multigraph {
    let shift = g1.vertex_count();
    let mut edges = g1.edges().to_vec();
    edges.extend(g2.edges().iter().map(|&(a, b)| (a + shift, b + shift)));
    Multigraph::new(shift + g2.vertex_count(), edges).expect("endpoints in range")
}

/// Join: disjoint union plus all edges between the two sides.
pub fn graph_join(g1: &Multigraph, g2: &Multigraph) -> Multigraph {
    let shift = g1.vertex_count();
    let mut g = disjoint_union(g1, g2);
    for u in 0..shift {
        for v in 0..g2.vertex_count() {
            g.add_edge(u, shift + v);
        }
    }
    g
}

/// Cartesian product: vertices are pairs, edges move in one coordinate.
pub fn cartesian_product(g1: &Multigraph, g2: &Multigraph) -> Multigraph {
    let n1 = g1.vertex_count();
    let n2 = g2.vertex_count();
    let id = |u: usize, v: usize| u * n2 + v;
    let mut edges = Vec::new();
    for u in 0..n1 {
        for &(a, b) in g2.edges() {
            edges.push((id(u, a), id(u, b)));
        }
    }
    for v in 0..n2 {
        for &(a, b) in g1.edges() {
            edges.push((id(a, v), id(b, v)));
        }
    }
    Multigraph::new(n1 * n2, edges).expect("endpoints in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn join_of_complements_is_complete_bipartite() {
        let km = Multigraph::complete(2).complement().unwrap();
        let kn = Multigraph::complete(3).complement().unwrap();
        let j = graph_join(&km, &kn);
        let target = Multigraph::complete_bipartite(2, 3);
        assert_eq!(j.vertex_count(), target.vertex_count());
        assert_eq!(j.edge_count(), target.edge_count());
        for u in 0..j.vertex_count() {
            for v in 0..j.vertex_count() {
                assert_eq!(j.multiplicity(u, v), target.multiplicity(u, v));
            }
        }
    }

    #[test]
    fn torus_grid_product() {
        let c3 = Multigraph::cycle(3);
        let p = cartesian_product(&c3, &c3);
        assert_eq!(p.vertex_count(), 9);
        assert_eq!(p.edge_count(), 18);
        assert!((0..9).all(|v| p.valency(v) == 4));
    }

    #[test]
    fn union_is_idempotent() {
        let g = Multigraph::new(4, vec![(0, 1), (0, 1), (2, 3)]).unwrap();
        let u = union_shared(&g, &g);
        assert_eq!(u.vertex_count(), 4);
        assert_eq!(u.edge_count(), 3);
        assert_eq!(u.multiplicity(0, 1), 2);
    }

    #[test]
    fn union_merges_overlap() {
        let c6 = Multigraph::cycle(6);
        let k4 = Multigraph::new(6, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let u = union_shared(&c6, &k4);
        assert_eq!(u.multiplicity(0, 1), 1);
        // shared edges (0,1), (1,2) and (2,3)
        assert_eq!(u.edge_count(), 6 + 6 - 3);
    }
}
