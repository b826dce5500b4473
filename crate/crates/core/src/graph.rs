use crate::error::CoreError;
use std::collections::VecDeque;

/// One half of an edge, rooted at an endpoint. Edge `e` contributes the
/// semi-arcs `(e, 0)` (tail end) and `(e, 1)` (head end).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemiArc {
    pub edge: usize,
    pub end: u8,
}

impl SemiArc {
    pub fn index(&self) -> usize {
        2 * self.edge + self.end as usize
    }

    pub fn from_index(i: usize) -> Self {
        SemiArc { edge: i / 2, end: (i % 2) as u8 }
    }

    /// The other end of the same edge.
    pub fn mate(&self) -> Self {
        SemiArc { edge: self.edge, end: 1 - self.end }
    }
}

/// A finite multigraph: dense integer vertex ids and an ordered edge list.
/// Loops and repeated endpoint pairs are allowed; the position of an edge
/// in the list is its stable index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, CoreError> {
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(CoreError::VertexOutOfRange { vertex: w, vertex_count });
                }
            }
        }
        Ok(Multigraph { vertex_count, edges })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Multigraph { vertex_count, edges: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Root vertex of a semi-arc.
    pub fn root(&self, s: SemiArc) -> usize {
        let (u, v) = self.edges[s.edge];
        if s.end == 0 { u } else { v }
    }

    /// All `2|E|` semi-arcs, ordered by index.
    pub fn semi_arcs(&self) -> Vec<SemiArc> {
        (0..2 * self.edges.len()).map(SemiArc::from_index).collect()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> usize {
        assert!(u < self.vertex_count && v < self.vertex_count);
        self.edges.push((u, v));
        self.edges.len() - 1
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    /// Valency: loops count twice at their vertex.
    pub fn valency(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    pub fn valency_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (0..self.vertex_count).map(|v| self.valency(v)).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    /// Incident edges of `v`, with multiplicity (loops listed once).
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&e| {
                let (a, b) = self.edges[e];
                a == v || b == v
            })
            .collect()
    }

    /// Semi-arcs rooted at `v`; a loop contributes both of its ends.
    pub fn semi_arcs_at(&self, v: usize) -> Vec<SemiArc> {
        let mut out = Vec::new();
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            if a == v {
                out.push(SemiArc { edge: e, end: 0 });
            }
            if b == v {
                out.push(SemiArc { edge: e, end: 1 });
            }
        }
        out
    }

    /// Distinct neighbors (a loop makes a vertex its own neighbor).
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Number of edges joining `u` and `v` (loops when `u == v`).
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| (a == u && b == v) || (a == v && b == u))
            .count()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.multiplicity(u, v) > 0
    }

    pub fn is_simple(&self) -> bool {
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if a == b {
                return false;
            }
            for &(c, d) in &self.edges[i + 1..] {
                if (a, b) == (c, d) || (a, b) == (d, c) {
                    return false;
                }
            }
        }
        true
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(a, b)| a == b)
    }

    /// Symmetric vertex-by-vertex matrix; entry (i,j) counts joining edges,
    /// the diagonal counts loops once each.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u64>> {
        let n = self.vertex_count;
        let mut m = vec![vec![0u64; n]; n];
        for &(a, b) in &self.edges {
            if a == b {
                m[a][a] += 1;
            } else {
                m[a][b] += 1;
                m[b][a] += 1;
            }
        }
        m
    }

    /// BFS distances from `src`; `usize::MAX` marks unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        self.distances_from(0).iter().all(|&d| d != usize::MAX)
    }

    /// Vertex sets of the connected components, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        for v in 0..self.vertex_count {
            if seen[v] {
                continue;
            }
            let dist = self.distances_from(v);
            let comp: Vec<usize> = (0..self.vertex_count)
                .filter(|&w| dist[w] != usize::MAX)
                .collect();
            for &w in &comp {
                seen[w] = true;
            }
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by a vertex subset, with vertices renumbered in the
    /// order given.
    pub fn induced(&self, vertices: &[usize]) -> Multigraph {
        let mut index = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
            .map(|&(a, b)| (index[a], index[b]))
            .collect();
        Multigraph { vertex_count: vertices.len(), edges }
    }

    /// Simple-graph complement.
    pub fn complement(&self) -> Result<Multigraph, CoreError> {
        if !self.is_simple() {
            return Err(CoreError::NotSimple);
        }
        let n = self.vertex_count;
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Ok(Multigraph { vertex_count: n, edges })
    }

    /// Betti number of a connected graph.
    pub fn betti(&self) -> usize {
        self.edge_count() + 1 - self.vertex_count
    }

    // --- standard families ---

    pub fn complete(n: usize) -> Multigraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Multigraph { vertex_count: n, edges }
    }

    pub fn complete_bipartite(m: usize, n: usize) -> Multigraph {
        let mut edges = Vec::new();
        for u in 0..m {
            for v in 0..n {
                edges.push((u, m + v));
            }
        }
        Multigraph { vertex_count: m + n, edges }
    }

    /// Circuit on `n >= 2` vertices; `n == 2` is the 2-gon (double edge).
    pub fn cycle(n: usize) -> Multigraph {
        assert!(n >= 2);
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Multigraph { vertex_count: n, edges }
    }

    pub fn path(n: usize) -> Multigraph {
        let edges = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Multigraph { vertex_count: n, edges }
    }

    /// One vertex with `n` loops.
    pub fn bouquet(n: usize) -> Multigraph {
        Multigraph { vertex_count: 1, edges: vec![(0, 0); n] }
    }

    /// Two vertices with `s` loops at the first, `l` parallel edges, and
    /// `t` loops at the second.
    pub fn dipole(s: usize, l: usize, t: usize) -> Multigraph {
        let mut edges = vec![(0, 0); s];
        edges.extend(std::iter::repeat((0, 1)).take(l));
        edges.extend(std::iter::repeat((1, 1)).take(t));
        Multigraph { vertex_count: 2, edges }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig_2_1_adjacency_matrix() {
        // Four looped vertices, one v1v2 edge, two v2v3 edges, one v3v4
        // edge and two v4v1 edges.
        let g = Multigraph::new(
            4,
            vec![
                (0, 0),
                (1, 1),
                (2, 2),
                (3, 3),
                (0, 1),
                (1, 2),
                (1, 2),
                (2, 3),
                (3, 0),
                (3, 0),
            ],
        )
        .unwrap();
        assert_eq!(
            g.adjacency_matrix(),
            vec![
                vec![1, 1, 0, 2],
                vec![1, 1, 2, 0],
                vec![0, 2, 1, 1],
                vec![2, 0, 1, 1],
            ]
        );
    }

    #[test]
    fn adjacency_edgeless_and_complete() {
        assert_eq!(Multigraph::empty(3).adjacency_matrix(), vec![vec![0; 3]; 3]);
        let k3 = Multigraph::complete(3);
        assert_eq!(
            k3.adjacency_matrix(),
            vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]
        );
    }

    #[test]
    fn valency_counts_loops_twice() {
        let g = Multigraph::new(2, vec![(0, 0), (0, 1)]).unwrap();
        assert_eq!(g.valency(0), 3);
        assert_eq!(g.valency(1), 1);
        let total: usize = (0..g.vertex_count()).map(|v| g.valency(v)).sum();
        assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn semi_arc_set_size() {
        let g = Multigraph::bouquet(3);
        assert_eq!(g.semi_arcs().len(), 6);
        assert_eq!(g.semi_arcs_at(0).len(), 6);
    }

    #[test]
    fn endpoint_validation() {
        assert!(Multigraph::new(2, vec![(0, 2)]).is_err());
    }

    #[test]
    fn components_of_disjoint_pieces() {
        let g = Multigraph::new(5, vec![(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert!(!g.is_connected());
    }
}
