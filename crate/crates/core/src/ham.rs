//! Hamiltonicity: a backtracking oracle, the edge-cut circuit criterion,
//! the Bondy–Chvátal closure and the splitting operator.

use crate::error::CoreError;
use crate::graph::Multigraph;

pub const DEFAULT_HAMILTONIAN_BUDGET: usize = 12;

/// A circuit as an edge-index sequence; consecutive edges share a vertex
/// and the walk closes up visiting each vertex once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

/// Backtracking search for a hamiltonian circuit. `None` when the graph
/// has none. Respects a vertex-count budget (default 12).
pub fn brute_force_hamiltonian(
    g: &Multigraph,
    budget: Option<usize>,
) -> Result<Option<Circuit>, CoreError> {
    let limit = budget.unwrap_or(DEFAULT_HAMILTONIAN_BUDGET);
    let n = g.vertex_count();
    if n > limit {
        return Err(CoreError::BudgetExceeded { needed: n as u128, budget: limit as u128 });
    }
    if n == 0 {
        return Ok(None);
    }
    if n == 1 {
        // A loop is the circuit of length one.
        return Ok((0..g.edge_count()).find(|&e| g.is_loop(e)).map(|e| Circuit {
            vertices: vec![0],
            edges: vec![e],
        }));
    }
    // adjacency with edge indices
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if u != v {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
    }
    let mut visited = vec![false; n];
    visited[0] = true;
    let mut path = vec![0usize];
    let mut edges = Vec::new();
    let mut used_edge = vec![false; g.edge_count()];

    fn rec(
        adj: &[Vec<(usize, usize)>],
        n: usize,
        visited: &mut [bool],
        path: &mut Vec<usize>,
        edges: &mut Vec<usize>,
        used_edge: &mut [bool],
    ) -> bool {
        let u = *path.last().unwrap();
        if path.len() == n {
            for &(w, e) in &adj[u] {
                if w == 0 && !used_edge[e] {
                    edges.push(e);
                    return true;
                }
            }
            return false;
        }
        for &(w, e) in &adj[u] {
            if !visited[w] && !used_edge[e] {
                visited[w] = true;
                path.push(w);
                edges.push(e);
                used_edge[e] = true;
                if rec(adj, n, visited, path, edges, used_edge) {
                    return true;
                }
                used_edge[e] = false;
                edges.pop();
                path.pop();
                visited[w] = false;
            }
        }
        false
    }

    if rec(&adj, n, &mut visited, &mut path, &mut edges, &mut used_edge) {
        Ok(Some(Circuit { vertices: path, edges }))
    } else {
        Ok(None)
    }
}

/// Check that an edge subset is a circuit: the induced subgraph is
/// connected with every touched vertex of circuit-degree two (or a single
/// loop, or a double edge).
pub fn circuit_from_edges(g: &Multigraph, edge_set: &[usize]) -> Result<Circuit, CoreError> {
    if edge_set.is_empty() {
        return Err(CoreError::InvalidInput("empty edge set is not a circuit".into()));
    }
    let mut deg = vec![0usize; g.vertex_count()];
    for &e in edge_set {
        let (u, v) = g.edge(e);
        deg[u] += 1;
        deg[v] += 1;
    }
    let touched: Vec<usize> = (0..g.vertex_count()).filter(|&v| deg[v] > 0).collect();
    if touched.iter().any(|&v| deg[v] != 2) {
        return Err(CoreError::InvalidInput("edge set is not 2-regular on its support".into()));
    }
    // walk the circuit
    let mut edge_at: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for &e in edge_set {
        let (u, v) = g.edge(e);
        edge_at[u].push(e);
        if u != v {
            edge_at[v].push(e);
        }
    }
    let start = touched[0];
    let mut vertices = vec![start];
    let mut edges = Vec::new();
    let mut used = std::collections::HashSet::new();
    let mut cur = start;
    loop {
        let next_edge = edge_at[cur].iter().copied().find(|e| !used.contains(e));
        let Some(e) = next_edge else { break };
        used.insert(e);
        let (u, v) = g.edge(e);
        let nxt = if u == cur { v } else { u };
        edges.push(e);
        if nxt == start {
            break;
        }
        vertices.push(nxt);
        cur = nxt;
    }
    if used.len() != edge_set.len() {
        return Err(CoreError::InvalidInput("edge set is not a single circuit".into()));
    }
    Ok(Circuit { vertices, edges })
}

/// Edge-cut criterion: a circuit is hamiltonian iff its intersection with
/// every bipartition edge cut is even and at least two. Exhausts all
/// `2^(n-1) - 1` bipartitions, so small graphs only.
pub fn is_hamiltonian_circuit_via_cuts(
    g: &Multigraph,
    circuit_edges: &[usize],
    budget: Option<usize>,
) -> Result<bool, CoreError> {
    let limit = budget.unwrap_or(DEFAULT_HAMILTONIAN_BUDGET + 8);
    let n = g.vertex_count();
    if n > limit {
        return Err(CoreError::BudgetExceeded { needed: n as u128, budget: limit as u128 });
    }
    if (0..n).any(|v| g.valency(v) == 0) {
        return Err(CoreError::InvalidInput("graph has isolated vertices".into()));
    }
    let circuit = circuit_from_edges(g, circuit_edges)?;
    let in_circuit: std::collections::HashSet<usize> = circuit.edges.iter().copied().collect();
    // vertex 0 stays on side one; masks over the remaining vertices
    for mask in 1u64..(1u64 << (n - 1)) {
        let side = |v: usize| -> bool { v != 0 && (mask >> (v - 1)) & 1 == 1 };
        let mut crossing = 0usize;
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if side(u) != side(v) && in_circuit.contains(&e) {
                crossing += 1;
            }
        }
        if crossing % 2 != 0 || crossing < 2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Bondy–Chvátal closure: repeatedly join non-adjacent vertex pairs whose
/// valency sum reaches the order. Scans in a fixed lexicographic order;
/// the fixed point does not depend on the order.
pub fn closure(g: &Multigraph) -> Result<Multigraph, CoreError> {
    if !g.is_simple() {
        return Err(CoreError::NotSimple);
    }
    let n = g.vertex_count();
    let mut h = g.clone();
    loop {
        let mut changed = false;
        'scan: for u in 0..n {
            for v in u + 1..n {
                if !h.has_edge(u, v) && h.valency(u) + h.valency(v) >= n {
                    h.add_edge(u, v);
                    changed = true;
                    break 'scan;
                }
            }
        }
        if !changed {
            return Ok(h);
        }
    }
}

/// The theta block used by the splitting gadget: vertices x, y, z, u with
/// x joined to y and z, the triangle edge yz, and u joined to y and z.
fn theta_edges() -> Vec<(usize, usize)> {
    // local ids: x=0, y=1, z=2, u=3
    vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
}

/// The non-hamiltonian gadget of degree `d`: a chain of `d+1` theta
/// blocks whose x-roles all collapse onto a single hub, plus pendant
/// vertices v_1..v_d on the first `d` block apices. Returns the gadget
/// with the attachment vertices (apices u_1..u_d carrying the pendants)
/// and the pendant ids.
pub struct SplitGadget {
    pub graph: Multigraph,
    /// u_1..u_d, where pendant v_i hangs.
    pub attach: Vec<usize>,
    /// pendant vertices v_1..v_d.
    pub pendants: Vec<usize>,
}

pub fn split_gadget(d: usize) -> SplitGadget {
    assert!(d >= 1);
    // hub absorbs every block's x; block k owns y_k, z_k, u_k.
    let hub = 0usize;
    let block = |k: usize| (1 + 3 * k, 2 + 3 * k, 3 + 3 * k); // (y, z, u)
    let chain_vertices = 1 + 3 * (d + 1);
    let mut edges = Vec::new();
    for k in 0..=d {
        let (y, z, u) = block(k);
        for (a, b) in theta_edges() {
            let map = |i: usize| match i {
                0 => hub,
                1 => y,
                2 => z,
                _ => u,
            };
            edges.push((map(a), map(b)));
        }
    }
    let mut g = Multigraph::new(chain_vertices + d, edges).unwrap();
    let mut attach = Vec::new();
    let mut pendants = Vec::new();
    for k in 0..d {
        let (_, _, u) = block(k);
        let v = chain_vertices + k;
        g.add_edge(v, u);
        attach.push(u);
        pendants.push(v);
    }
    SplitGadget { graph: g, attach, pendants }
}

/// Split vertex `u`: remove it and wire each former neighbor to one apex
/// of the degree-`d` gadget. The result is non-hamiltonian for every
/// input graph.
pub fn splitting_operator(g: &Multigraph, u: usize) -> Result<Multigraph, CoreError> {
    if u >= g.vertex_count() {
        return Err(CoreError::VertexOutOfRange { vertex: u, vertex_count: g.vertex_count() });
    }
    let d = g.valency(u);
    if d == 0 {
        return Err(CoreError::InvalidInput("cannot split an isolated vertex".into()));
    }
    let gadget = split_gadget(d);
    // keep all old vertices except u, renumbered
    let mut old_id = vec![usize::MAX; g.vertex_count()];
    let mut next = 0usize;
    for v in 0..g.vertex_count() {
        if v != u {
            old_id[v] = next;
            next += 1;
        }
    }
    let kept_old = next;
    // gadget vertices come after, minus its pendants
    let mut gadget_id = vec![usize::MAX; gadget.graph.vertex_count()];
    let pendant_set: std::collections::HashSet<usize> = gadget.pendants.iter().copied().collect();
    for v in 0..gadget.graph.vertex_count() {
        if !pendant_set.contains(&v) {
            gadget_id[v] = next;
            next += 1;
        }
    }
    let mut edges = Vec::new();
    // ends of edges at u, one entry per incidence (loops give two)
    let mut stubs = Vec::new();
    for &(a, b) in g.edges() {
        match (a == u, b == u) {
            (false, false) => edges.push((old_id[a], old_id[b])),
            (true, false) => stubs.push(b),
            (false, true) => stubs.push(a),
            (true, true) => {
                stubs.push(u);
                stubs.push(u);
            }
        }
    }
    if stubs.iter().any(|&s| s == u) {
        return Err(CoreError::InvalidInput("cannot split a vertex carrying a loop".into()));
    }
    for &(a, b) in gadget.graph.edges() {
        if !pendant_set.contains(&a) && !pendant_set.contains(&b) {
            edges.push((gadget_id[a], gadget_id[b]));
        }
    }
    for (i, &s) in stubs.iter().enumerate() {
        edges.push((old_id[s], gadget_id[gadget.attach[i]]));
    }
    let _ = kept_old;
    Multigraph::new(next, edges)
}

/// Vertex count of `splitting_operator(g, u)`: the original order minus
/// the split vertex, plus the 3d+4 chain vertices.
pub fn split_vertex_count(order: usize, d: usize) -> usize {
    order - 1 + 3 * d + 4
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_has_hamiltonian_circuit() {
        let c = brute_force_hamiltonian(&Multigraph::complete(4), None)
            .unwrap()
            .unwrap();
        assert_eq!(c.vertices.len(), 4);
        assert_eq!(c.edges.len(), 4);
    }

    #[test]
    fn unbalanced_bipartite_is_not_hamiltonian() {
        let g = Multigraph::complete_bipartite(2, 3);
        assert!(brute_force_hamiltonian(&g, None).unwrap().is_none());
    }

    #[test]
    fn path_is_not_hamiltonian() {
        assert!(brute_force_hamiltonian(&Multigraph::path(3), None)
            .unwrap()
            .is_none());
    }

    #[test]
    fn two_gon_is_hamiltonian() {
        let c = brute_force_hamiltonian(&Multigraph::cycle(2), None)
            .unwrap()
            .unwrap();
        assert_eq!(c.edges.len(), 2);
    }

    #[test]
    fn budget_respected() {
        let g = Multigraph::complete(13);
        assert!(matches!(
            brute_force_hamiltonian(&g, None),
            Err(CoreError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn cut_criterion_on_k4() {
        let g = Multigraph::complete(4);
        let four_cycle = brute_force_hamiltonian(&g, None).unwrap().unwrap();
        assert!(is_hamiltonian_circuit_via_cuts(&g, &four_cycle.edges, None).unwrap());
        // a triangle misses one vertex
        let tri: Vec<usize> = (0..g.edge_count())
            .filter(|&e| {
                let (u, v) = g.edge(e);
                u < 3 && v < 3
            })
            .collect();
        assert_eq!(tri.len(), 3);
        assert!(!is_hamiltonian_circuit_via_cuts(&g, &tri, None).unwrap());
    }

    #[test]
    fn cut_criterion_on_c5() {
        let g = Multigraph::cycle(5);
        let all: Vec<usize> = (0..5).collect();
        assert!(is_hamiltonian_circuit_via_cuts(&g, &all, None).unwrap());
    }

    #[test]
    fn cut_criterion_rejects_non_circuit() {
        let g = Multigraph::complete(4);
        assert!(is_hamiltonian_circuit_via_cuts(&g, &[0, 1], None).is_err());
    }

    #[test]
    fn cut_criterion_agrees_with_spanning_definition() {
        // all circuits of all connected simple graphs on 5 vertices with
        // few edges; compare against "circuit spans every vertex".
        let g = Multigraph::new(5, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (0, 3)])
            .unwrap();
        let m = g.edge_count();
        for mask in 1u32..(1 << m) {
            let edges: Vec<usize> = (0..m).filter(|&e| mask >> e & 1 == 1).collect();
            if let Ok(c) = circuit_from_edges(&g, &edges) {
                let spanning = c.vertices.len() == g.vertex_count();
                assert_eq!(
                    is_hamiltonian_circuit_via_cuts(&g, &edges, None).unwrap(),
                    spanning
                );
            }
        }
    }

    #[test]
    fn closure_of_c4_is_k4() {
        let c = closure(&Multigraph::cycle(4)).unwrap();
        assert_eq!(c.edge_count(), 6);
        assert!(c.is_simple());
    }

    #[test]
    fn closure_of_complete_is_fixed() {
        let k5 = Multigraph::complete(5);
        assert_eq!(closure(&k5).unwrap().edge_count(), 10);
    }

    #[test]
    fn closure_of_p4_is_p4() {
        let p4 = Multigraph::path(4);
        assert_eq!(closure(&p4).unwrap().edge_count(), 3);
    }

    #[test]
    fn closure_is_order_independent() {
        // relabel vertices, close, pull back: same edge set
        let g = Multigraph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)]).unwrap();
        let perm = [3usize, 0, 4, 1, 2];
        let relabeled = Multigraph::new(
            5,
            g.edges().iter().map(|&(a, b)| (perm[a], perm[b])).collect(),
        )
        .unwrap();
        let c1 = closure(&g).unwrap();
        let c2 = closure(&relabeled).unwrap();
        let mut back: Vec<(usize, usize)> = c2
            .edges()
            .iter()
            .map(|&(a, b)| {
                let inv = |x: usize| perm.iter().position(|&p| p == x).unwrap();
                let (mut u, mut v) = (inv(a), inv(b));
                if u > v {
                    std::mem::swap(&mut u, &mut v);
                }
                (u, v)
            })
            .collect();
        back.sort_unstable();
        let mut fwd: Vec<(usize, usize)> = c1
            .edges()
            .iter()
            .map(|&(a, b)| if a > b { (b, a) } else { (a, b) })
            .collect();
        fwd.sort_unstable();
        assert_eq!(back, fwd);
    }

    #[test]
    fn splitting_gives_non_hamiltonian_c3() {
        let g = Multigraph::complete(3);
        let split = splitting_operator(&g, 0).unwrap();
        assert_eq!(split.vertex_count(), split_vertex_count(3, 2));
        assert!(brute_force_hamiltonian(&split, Some(split.vertex_count()))
            .unwrap()
            .is_none());
    }

    #[test]
    fn splitting_gives_non_hamiltonian_k4() {
        let g = Multigraph::complete(4);
        let split = splitting_operator(&g, 1).unwrap();
        assert_eq!(split.vertex_count(), split_vertex_count(4, 3));
        assert!(brute_force_hamiltonian(&split, Some(split.vertex_count()))
            .unwrap()
            .is_none());
    }
}
