//! Semi-arc automorphisms.
//!
//! A semi-arc automorphism is a bijection of the semi-arc set that
//! preserves both the same-root relation and the same-edge relation. For
//! loopless graphs this group is the automorphism group of the graph with
//! its faithful induced action, so the vertex-level search is used there;
//! the generic search works on the semi-arcs directly.

use crate::error::CoreError;
use crate::graph::Multigraph;

pub const DEFAULT_SEMI_ARC_BUDGET: usize = 10;

/// A multigraph automorphism: a vertex permutation together with a
/// compatible edge permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphAut {
    pub vertex_perm: Vec<usize>,
    pub edge_perm: Vec<usize>,
}

impl GraphAut {
    pub fn is_valid(&self, g: &Multigraph) -> bool {
        let vp = &self.vertex_perm;
        let ep = &self.edge_perm;
        if vp.len() != g.vertex_count() || ep.len() != g.edge_count() {
            return false;
        }
        let mut seen_v = vec![false; vp.len()];
        for &v in vp {
            if v >= vp.len() || seen_v[v] {
                return false;
            }
            seen_v[v] = true;
        }
        let mut seen_e = vec![false; ep.len()];
        for &e in ep {
            if e >= ep.len() || seen_e[e] {
                return false;
            }
            seen_e[e] = true;
        }
        g.edges().iter().enumerate().all(|(e, &(u, v))| {
            let (a, b) = g.edge(ep[e]);
            (vp[u], vp[v]) == (a, b) || (vp[u], vp[v]) == (b, a)
        })
    }
}

/// All automorphisms of a multigraph by backtracking over vertex images
/// with forced edge matching. Exponential, for small graphs.
pub fn graph_automorphisms(g: &Multigraph) -> Vec<GraphAut> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut vp = vec![usize::MAX; n];
    let mut used = vec![false; n];
    // degree profile pruning
    let degs: Vec<usize> = (0..n).map(|v| g.valency(v)).collect();

    fn rec(
        g: &Multigraph,
        degs: &[usize],
        vp: &mut Vec<usize>,
        used: &mut Vec<bool>,
        next: usize,
        out: &mut Vec<GraphAut>,
    ) {
        let n = g.vertex_count();
        if next == n {
            // assign edges: bundles between mapped pairs must biject; use
            // backtracking over edge images
            let m = g.edge_count();
            let mut ep = vec![usize::MAX; m];
            let mut used_e = vec![false; m];
            fn assign(
                g: &Multigraph,
                vp: &[usize],
                ep: &mut Vec<usize>,
                used_e: &mut Vec<bool>,
                e: usize,
                out: &mut Vec<GraphAut>,
            ) {
                if e == g.edge_count() {
                    out.push(GraphAut { vertex_perm: vp.to_vec(), edge_perm: ep.clone() });
                    return;
                }
                let (u, v) = g.edge(e);
                for f in 0..g.edge_count() {
                    if used_e[f] {
                        continue;
                    }
                    let (a, b) = g.edge(f);
                    if (a, b) == (vp[u], vp[v]) || (a, b) == (vp[v], vp[u]) {
                        ep[e] = f;
                        used_e[f] = true;
                        assign(g, vp, ep, used_e, e + 1, out);
                        used_e[f] = false;
                        ep[e] = usize::MAX;
                    }
                }
            }
            assign(g, vp, &mut ep, &mut used_e, 0, out);
            return;
        }
        for img in 0..n {
            if used[img] || degs[img] != degs[next] {
                continue;
            }
            // adjacency multiplicities with already-mapped vertices must match
            let ok = (0..next).all(|w| g.multiplicity(next, w) == g.multiplicity(img, vp[w]))
                && g.multiplicity(next, next) == g.multiplicity(img, img);
            if !ok {
                continue;
            }
            vp[next] = img;
            used[img] = true;
            rec(g, degs, vp, used, next + 1, out);
            used[img] = false;
            vp[next] = usize::MAX;
        }
    }

    rec(g, &degs, &mut vp, &mut used, 0, &mut out);
    out
}

/// Order of the semi-arc automorphism group.
///
/// Loopless graphs use the vertex/edge automorphism count (the induced
/// action on semi-arcs is faithful and onto the semi-arc group there).
/// Graphs with loops run the exhaustive semi-arc search, budgeted by the
/// number of semi-arcs (default 10).
pub fn semi_arc_automorphism_order(
    g: &Multigraph,
    budget: Option<usize>,
) -> Result<u64, CoreError> {
    if !g.has_loops() {
        return Ok(graph_automorphisms(g).len() as u64);
    }
    let limit = budget.unwrap_or(DEFAULT_SEMI_ARC_BUDGET);
    let m = 2 * g.edge_count();
    if m > limit {
        return Err(CoreError::BudgetExceeded { needed: m as u128, budget: limit as u128 });
    }
    Ok(semi_arc_automorphisms_exhaustive(g))
}

/// Count semi-arc bijections preserving v-incidence and e-incidence by
/// backtracking on semi-arc images.
fn semi_arc_automorphisms_exhaustive(g: &Multigraph) -> u64 {
    let arcs = g.semi_arcs();
    let m = arcs.len();
    let roots: Vec<usize> = arcs.iter().map(|&s| g.root(s)).collect();
    let mates: Vec<usize> = arcs.iter().map(|&s| s.mate().index()).collect();
    let mut image = vec![usize::MAX; m];
    let mut used = vec![false; m];
    // root image forced per vertex as soon as one arc at it is mapped
    // Root correspondence is booked when an arc is *visited*, so
    // mate-forced assignments get their root checked too.
    fn rec(
        m: usize,
        roots: &[usize],
        mates: &[usize],
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        vmap: &mut std::collections::HashMap<usize, usize>,
        next: usize,
        count: &mut u64,
    ) {
        if next == m {
            *count += 1;
            return;
        }

        let visit = |img: usize,
                     image: &mut Vec<usize>,
                     used: &mut Vec<bool>,
                     vmap: &mut std::collections::HashMap<usize, usize>,
                     count: &mut u64| {
            // v-incidence both ways: roots correspond bijectively
            let r = roots[next];
            let ri = roots[img];
            let prior = vmap.get(&r).copied();
            if let Some(p) = prior {
                if p != ri {
                    return;
                }
            } else if vmap.values().any(|&x| x == ri) {
                return;
            }
            let inserted = prior.is_none();
            if inserted {
                vmap.insert(r, ri);
            }
            rec(m, roots, mates, image, used, vmap, next + 1, count);
            if inserted {
                vmap.remove(&r);
            }
        };

        if image[next] != usize::MAX {
            let img = image[next];
            visit(img, image, used, vmap, count);
            return;
        }
        for img in 0..m {
            if used[img] {
                continue;
            }
            // e-incidence: the mate is forced to the image's mate
            let mate = mates[next];
            let mate_img = mates[img];
            if used[mate_img] && image[mate] != mate_img {
                continue;
            }
            let set_mate = image[mate] == usize::MAX && mate != next;
            if set_mate && used[mate_img] {
                continue;
            }
            image[next] = img;
            used[img] = true;
            if set_mate {
                image[mate] = mate_img;
                used[mate_img] = true;
            }
            visit(img, image, used, vmap, count);
            if set_mate {
                image[mate] = usize::MAX;
                used[mate_img] = false;
            }
            image[next] = usize::MAX;
            used[img] = false;
        }
    }
    let mut count = 0;
    rec(
        m,
        &roots,
        &mates,
        &mut image,
        &mut used,
        &mut std::collections::HashMap::new(),
        0,
        &mut count,
    );
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bouquet_orders_match_wreath_product() {
        // |S_n[S_2]| = n! * 2^n
        assert_eq!(semi_arc_automorphism_order(&Multigraph::bouquet(1), None).unwrap(), 2);
        assert_eq!(semi_arc_automorphism_order(&Multigraph::bouquet(2), None).unwrap(), 8);
        assert_eq!(semi_arc_automorphism_order(&Multigraph::bouquet(3), None).unwrap(), 48);
    }

    #[test]
    fn k3_matches_vertex_automorphisms() {
        assert_eq!(semi_arc_automorphism_order(&Multigraph::complete(3), None).unwrap(), 6);
    }

    #[test]
    fn k4_order() {
        assert_eq!(semi_arc_automorphism_order(&Multigraph::complete(4), None).unwrap(), 24);
    }

    #[test]
    fn loopless_induced_action_agrees_with_exhaustive_search() {
        // small loopless graphs: both computations agree
        for g in [
            Multigraph::complete(3),
            Multigraph::path(3),
            Multigraph::cycle(4),
            Multigraph::dipole(0, 2, 0),
        ] {
            let fast = semi_arc_automorphism_order(&g, None).unwrap();
            let slow = super::semi_arc_automorphisms_exhaustive(&g);
            assert_eq!(fast, slow, "graph {g:?}");
        }
    }

    #[test]
    fn double_edge_group() {
        // two parallel edges: swap edges x swap vertices
        let g = Multigraph::dipole(0, 2, 0);
        assert_eq!(semi_arc_automorphism_order(&g, None).unwrap(), 4);
    }

    #[test]
    fn budget_guard_on_loopy_graphs() {
        let g = Multigraph::bouquet(6);
        assert!(matches!(
            semi_arc_automorphism_order(&g, None),
            Err(CoreError::BudgetExceeded { .. })
        ));
        assert_eq!(semi_arc_automorphism_order(&g, Some(12)).unwrap(), 46080);
    }

    #[test]
    fn automorphisms_are_valid() {
        let g = Multigraph::new(3, vec![(0, 1), (1, 2), (0, 1)]).unwrap();
        for a in graph_automorphisms(&g) {
            assert!(a.is_valid(&g));
        }
    }
}
