//! Edge connectivity by unit-capacity max-flow.

use msg_core::Multigraph;
use std::collections::VecDeque;

/// Max-flow between `s` and `t` with one unit of capacity per edge per
/// direction (parallel edges add capacity).
pub fn max_flow(g: &Multigraph, s: usize, t: usize) -> usize {
    let n = g.vertex_count();
    let mut cap = vec![vec![0i64; n]; n];
    for &(a, b) in g.edges() {
        if a != b {
            cap[a][b] += 1;
            cap[b][a] += 1;
        }
    }
    let mut flow = 0usize;
    loop {
        // BFS augmenting path
        let mut prev = vec![usize::MAX; n];
        prev[s] = s;
        let mut q = VecDeque::new();
        q.push_back(s);
        while let Some(u) = q.pop_front() {
            for v in 0..n {
                if prev[v] == usize::MAX && cap[u][v] > 0 {
                    prev[v] = u;
                    q.push_back(v);
                }
            }
        }
        if prev[t] == usize::MAX {
            return flow;
        }
        let mut v = t;
        while v != s {
            let u = prev[v];
            cap[u][v] -= 1;
            cap[v][u] += 1;
            v = u;
        }
        flow += 1;
    }
}

/// Minimum over vertex pairs of the pairwise max-flow.
pub fn edge_connectivity(g: &Multigraph) -> usize {
    let n = g.vertex_count();
    if n < 2 {
        return 0;
    }
    if !g.is_connected() {
        return 0;
    }
    // lambda(G) = min over t != 0 of maxflow(0, t)
    (1..n).map(|t| max_flow(g, 0, t)).min().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_has_connectivity_two() {
        assert_eq!(edge_connectivity(&Multigraph::cycle(5)), 2);
    }

    #[test]
    fn complete_graph_connectivity() {
        assert_eq!(edge_connectivity(&Multigraph::complete(4)), 3);
    }

    #[test]
    fn parallel_edges_add_capacity() {
        let g = Multigraph::dipole(0, 3, 0);
        assert_eq!(edge_connectivity(&g), 3);
    }

    #[test]
    fn disconnected_graph_is_zero() {
        let g = Multigraph::new(3, vec![(0, 1)]).unwrap();
        assert_eq!(edge_connectivity(&g), 0);
    }
}
