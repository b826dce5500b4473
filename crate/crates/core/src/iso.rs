//! Small-graph isomorphism by backtracking. Oracle-grade: meant for the
//! round-trip and lifting checks, not for big inputs.

use crate::graph::Multigraph;

/// Find a vertex bijection carrying edge multiplicities of `g` onto `h`.
pub fn find_isomorphism(g: &Multigraph, h: &Multigraph) -> Option<Vec<usize>> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let n = g.vertex_count();
    let dg: Vec<usize> = (0..n).map(|v| g.valency(v)).collect();
    let dh: Vec<usize> = (0..n).map(|v| h.valency(v)).collect();
    {
        let mut a = dg.clone();
        let mut b = dh.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        g: &Multigraph,
        h: &Multigraph,
        dg: &[usize],
        dh: &[usize],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        v: usize,
    ) -> bool {
        let n = g.vertex_count();
        if v == n {
            return true;
        }
        for img in 0..n {
            if used[img] || dg[v] != dh[img] {
                continue;
            }
            if g.multiplicity(v, v) != h.multiplicity(img, img) {
                continue;
            }
            if (0..v).all(|w| g.multiplicity(v, w) == h.multiplicity(img, map[w])) {
                map[v] = img;
                used[img] = true;
                if rec(g, h, dg, dh, map, used, v + 1) {
                    return true;
                }
                used[img] = false;
                map[v] = usize::MAX;
            }
        }
        false
    }
    if rec(g, h, &dg, &dh, &mut map, &mut used, 0) {
        Some(map)
    } else {
        None
    }
}

pub fn are_isomorphic(g: &Multigraph, h: &Multigraph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Check a given vertex map: multiplicities must carry over exactly.
pub fn is_isomorphism(g: &Multigraph, h: &Multigraph, map: &[usize]) -> bool {
    if map.len() != g.vertex_count() || g.vertex_count() != h.vertex_count() {
        return false;
    }
    let mut used = vec![false; map.len()];
    for &m in map {
        if m >= map.len() || used[m] {
            return false;
        }
        used[m] = true;
    }
    if g.edge_count() != h.edge_count() {
        return false;
    }
    for u in 0..g.vertex_count() {
        for v in u..g.vertex_count() {
            if g.multiplicity(u, v) != h.multiplicity(map[u], map[v]) {
                return false;
            }
        }
    }
    true
}
