//! Closed-form genus values for complete and complete bipartite graphs,
//! and the two exact maximum-genus computations.

use crate::error::MapError;
use msg_core::Multigraph;

/// Minimum orientable genus of `K_n`, `n >= 3`.
pub fn gamma_complete(n: usize) -> Result<usize, MapError> {
    if n < 3 {
        return Err(MapError::InvalidInput("need n >= 3".into()));
    }
    Ok(((n - 3) * (n - 4)).div_ceil(12))
}

/// Minimum crosscap number of `K_n`, `n >= 3`, with the K_7 exception.
/// The formula value is 0 for the planar cases n = 3, 4.
pub fn gamma_tilde_complete(n: usize) -> Result<usize, MapError> {
    if n < 3 {
        return Err(MapError::InvalidInput("need n >= 3".into()));
    }
    if n == 7 {
        return Ok(3);
    }
    Ok(((n - 3) * (n - 4)).div_ceil(6))
}

/// Minimum orientable genus of `K(m,n)`, `m, n >= 3`.
pub fn gamma_bipartite(m: usize, n: usize) -> Result<usize, MapError> {
    if m < 3 || n < 3 {
        return Err(MapError::InvalidInput("need m, n >= 3".into()));
    }
    Ok(((m - 2) * (n - 2)).div_ceil(4))
}

/// Minimum crosscap number of `K(m,n)`, `m, n >= 3`.
pub fn gamma_tilde_bipartite(m: usize, n: usize) -> Result<usize, MapError> {
    if m < 3 || n < 3 {
        return Err(MapError::InvalidInput("need m, n >= 3".into()));
    }
    Ok(((m - 2) * (n - 2)).div_ceil(2))
}

/// Maximum orientable genus of `K_n`.
pub fn gamma_max_complete(n: usize) -> Result<usize, MapError> {
    if n < 3 {
        return Err(MapError::InvalidInput("need n >= 3".into()));
    }
    Ok((n - 1) * (n - 2) / 4)
}

/// Maximum orientable genus of `K(m,n)`.
pub fn gamma_max_bipartite(m: usize, n: usize) -> Result<usize, MapError> {
    if m < 3 || n < 3 {
        return Err(MapError::InvalidInput("need m, n >= 3".into()));
    }
    Ok((m - 1) * (n - 1) / 2)
}

/// Maximum crosscap number of any connected graph: the Betti number.
pub fn gamma_tilde_max(g: &Multigraph) -> Result<usize, MapError> {
    if !g.is_connected() {
        return Err(MapError::InvalidInput("need a connected graph".into()));
    }
    Ok(g.edge_count() + 1 - g.vertex_count())
}

/// All spanning trees as edge sets (small graphs: subsets of size n-1
/// are filtered for connectivity).
fn spanning_trees(g: &Multigraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n == 0 {
        return Vec::new();
    }
    let want = n - 1;
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn rec(
        g: &Multigraph,
        m: usize,
        want: usize,
        start: usize,
        pick: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pick.len() == want {
            // connected + acyclic over all n vertices: check spanning
            let n = g.vertex_count();
            let mut dsu: Vec<usize> = (0..n).collect();
            fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
                if dsu[x] != x {
                    let r = find(dsu, dsu[x]);
                    dsu[x] = r;
                }
                dsu[x]
            }
            for &e in pick.iter() {
                let (a, b) = g.edge(e);
                let (ra, rb) = (find(&mut dsu, a), find(&mut dsu, b));
                if ra == rb {
                    return; // cycle
                }
                dsu[ra] = rb;
            }
            out.push(pick.clone());
            return;
        }
        if start >= m || m - start < want - pick.len() {
            return;
        }
        for e in start..m {
            pick.push(e);
            rec(g, m, want, e + 1, pick, out);
            pick.pop();
        }
    }
    rec(g, m, want, 0, &mut pick, &mut out);
    out
}

/// Number of odd-size edge components of the co-tree (components are
/// taken in the spanning subgraph on the co-tree edges; isolated
/// vertices carry no edges and do not count).
fn c_odd(g: &Multigraph, tree: &[usize]) -> usize {
    let in_tree: std::collections::HashSet<usize> = tree.iter().copied().collect();
    let cotree: Vec<usize> = (0..g.edge_count()).filter(|e| !in_tree.contains(e)).collect();
    let n = g.vertex_count();
    let mut dsu: Vec<usize> = (0..n).collect();
    fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
        if dsu[x] != x {
            let r = find(dsu, dsu[x]);
            dsu[x] = r;
        }
        dsu[x]
    }
    for &e in &cotree {
        let (a, b) = g.edge(e);
        let (ra, rb) = (find(&mut dsu, a), find(&mut dsu, b));
        if ra != rb {
            dsu[ra] = rb;
        }
    }
    let mut edge_count: std::collections::HashMap<usize, usize> = Default::default();
    for &e in &cotree {
        let (a, _) = g.edge(e);
        let root = find(&mut dsu, a);
        *edge_count.entry(root).or_insert(0) += 1;
    }
    edge_count.values().filter(|&&c| c % 2 == 1).count()
}

/// Exact maximum genus by minimizing the odd co-tree components over all
/// spanning trees.
pub fn xuong_max_genus(g: &Multigraph) -> Result<usize, MapError> {
    if !g.is_connected() {
        return Err(MapError::InvalidInput("need a connected graph".into()));
    }
    let beta = g.edge_count() + 1 - g.vertex_count();
    if g.vertex_count() == 1 {
        // the single vertex is its own spanning tree
        let all: Vec<usize> = Vec::new();
        let codd = c_odd(g, &all);
        return Ok((beta - codd) / 2);
    }
    let trees = spanning_trees(g);
    let min_codd = trees.iter().map(|t| c_odd(g, t)).min().expect("connected graph has a tree");
    Ok((beta - min_codd) / 2)
}

/// Exact maximum genus from the edge-subset formula: half of
/// `(q - n + 2) - max_A (c(A) + b(A) - |A|)`, where `c` counts the
/// components after deleting `A` and `b` those with edge count congruent
/// to vertex count mod 2.
pub fn nebesky_max_genus(g: &Multigraph) -> Result<usize, MapError> {
    if !g.is_connected() {
        return Err(MapError::InvalidInput("need a connected graph".into()));
    }
    let m = g.edge_count();
    if m > 20 {
        return Err(MapError::BudgetExceeded { needed: 1u128 << m, budget: 1 << 20 });
    }
    let n = g.vertex_count();
    let mut best: i64 = i64::MIN;
    for mask in 0u32..(1u32 << m) {
        let kept: Vec<(usize, usize)> = (0..m)
            .filter(|&e| mask >> e & 1 == 0)
            .map(|e| g.edge(e))
            .collect();
        let removed = mask.count_ones() as i64;
        let h = Multigraph::new(n, kept).expect("in range");
        let comps = h.components();
        let c = comps.len() as i64;
        let b = comps
            .iter()
            .filter(|comp| {
                let sub = h.induced(comp);
                sub.edge_count() % 2 == comp.len() % 2
            })
            .count() as i64;
        best = best.max(c + b - removed);
    }
    let value = (m as i64 - n as i64 + 2) - best;
    if value < 0 || value % 2 != 0 {
        return Err(MapError::InvalidInput(format!(
            "inconsistent maximum-genus value {value}/2"
        )));
    }
    Ok((value / 2) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_formulas() {
        assert_eq!(gamma_complete(7).unwrap(), 1);
        assert_eq!(gamma_tilde_complete(7).unwrap(), 3);
        assert_eq!(gamma_tilde_complete(8).unwrap(), 4);
        assert_eq!(gamma_complete(5).unwrap(), 1);
        assert_eq!(gamma_max_complete(4).unwrap(), 1);
        assert_eq!(gamma_max_complete(5).unwrap(), 3);
    }

    #[test]
    fn bipartite_formulas() {
        assert_eq!(gamma_bipartite(3, 3).unwrap(), 1);
        assert_eq!(gamma_tilde_bipartite(3, 3).unwrap(), 1);
        assert_eq!(gamma_max_bipartite(3, 3).unwrap(), 2);
    }

    #[test]
    fn out_of_domain_rejected() {
        assert!(gamma_complete(2).is_err());
        assert!(gamma_bipartite(2, 5).is_err());
    }

    #[test]
    fn xuong_on_small_graphs() {
        assert_eq!(xuong_max_genus(&Multigraph::complete(4)).unwrap(), 1);
        assert_eq!(xuong_max_genus(&Multigraph::path(4)).unwrap(), 0);
        assert_eq!(xuong_max_genus(&Multigraph::cycle(5)).unwrap(), 0);
        assert_eq!(xuong_max_genus(&Multigraph::bouquet(2)).unwrap(), 1);
    }

    #[test]
    fn nebesky_matches_xuong() {
        for g in [
            Multigraph::complete(4),
            Multigraph::complete(5),
            Multigraph::path(4),
            Multigraph::cycle(5),
            Multigraph::complete_bipartite(2, 3),
            Multigraph::complete_bipartite(3, 3),
        ] {
            assert_eq!(
                nebesky_max_genus(&g).unwrap(),
                xuong_max_genus(&g).unwrap(),
                "disagreement on {g:?}"
            );
        }
        assert_eq!(nebesky_max_genus(&Multigraph::complete(5)).unwrap(), 3);
    }

    #[test]
    fn betti_number_is_max_crosscap() {
        assert_eq!(gamma_tilde_max(&Multigraph::complete(4)).unwrap(), 3);
        assert_eq!(gamma_tilde_max(&Multigraph::cycle(5)).unwrap(), 1);
    }
}
