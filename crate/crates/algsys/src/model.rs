//! The weighted-graph model of a partial system, and its inverse.

use crate::digraph::{Arc, WeightedDigraph};
use crate::error::AlgsysError;
use crate::system::PartialBinarySystem;

/// One arc per defined product: `a∘b = c` becomes `a -> c` with weight
/// `∘b`.
pub fn graph_model(sys: &PartialBinarySystem) -> WeightedDigraph {
    graph_model_tagged(sys, 0)
}

fn graph_model_tagged(sys: &PartialBinarySystem, op_tag: usize) -> WeightedDigraph {
    let mut arcs = Vec::new();
    for (a, row) in sys.table.iter().enumerate() {
        for (b, &cell) in row.iter().enumerate() {
            if let Some(c) = cell {
                arcs.push(Arc { from: a, to: c, op_tag, weight: b });
            }
        }
    }
    WeightedDigraph { labels: sys.labels.clone(), arcs }
}

/// Union of per-system models over a shared label namespace; arcs keep
/// their source system as the operation tag.
pub fn multispace_graph(systems: &[PartialBinarySystem]) -> WeightedDigraph {
    let mut labels: Vec<String> = Vec::new();
    let mut arcs = Vec::new();
    for (tag, sys) in systems.iter().enumerate() {
        let ids: Vec<usize> = sys
            .labels
            .iter()
            .map(|l| {
                if let Some(i) = labels.iter().position(|x| x == l) {
                    i
                } else {
                    labels.push(l.clone());
                    labels.len() - 1
                }
            })
            .collect();
        let local = graph_model_tagged(sys, tag);
        arcs.extend(local.arcs.into_iter().map(|a| Arc {
            from: ids[a.from],
            to: ids[a.to],
            op_tag: tag,
            weight: ids[a.weight],
        }));
    }
    WeightedDigraph { labels, arcs }
}

/// Rebuild the partial table from a single-system model. Fails with a
/// witness when two arcs from one vertex carry the same weight to
/// different heads.
pub fn reconstruct_system(d: &WeightedDigraph) -> Result<PartialBinarySystem, AlgsysError> {
    let n = d.vertex_count();
    let mut table: Vec<Vec<Option<usize>>> = vec![vec![None; n]; n];
    for arc in &d.arcs {
        if arc.weight >= n || arc.from >= n || arc.to >= n {
            return Err(AlgsysError::UnknownElement(format!("{arc:?}")));
        }
        match table[arc.from][arc.weight] {
            None => table[arc.from][arc.weight] = Some(arc.to),
            Some(existing) if existing == arc.to => {}
            Some(existing) => {
                return Err(AlgsysError::ConflictingArcs {
                    from: arc.from,
                    weight: (arc.op_tag, arc.weight),
                    heads: (existing, arc.to),
                })
            }
        }
    }
    PartialBinarySystem::new(d.labels.clone(), table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z4_model_has_sixteen_arcs() {
        let z4 = PartialBinarySystem::cyclic(4);
        let d = graph_model(&z4);
        assert_eq!(d.arcs.len(), 16);
        // loops from a∘0 = a
        assert!(d.arcs.iter().any(|a| a.from == a.to));
        // every unordered pair carries an opposite 2-edge
        let pairs = d.opposite_pairs();
        assert_eq!(pairs.len(), 6);
    }

    #[test]
    fn sparse_example_has_six_arcs() {
        let d = graph_model(&PartialBinarySystem::sparse_example());
        assert_eq!(d.arcs.len(), 6);
    }

    #[test]
    fn empty_table_gives_arcless_graph() {
        let sys = PartialBinarySystem::new(
            vec!["a".into(), "b".into()],
            vec![vec![None, None], vec![None, None]],
        )
        .unwrap();
        assert!(graph_model(&sys).arcs.is_empty());
    }

    #[test]
    fn round_trip_z4() {
        let z4 = PartialBinarySystem::cyclic(4);
        assert_eq!(reconstruct_system(&graph_model(&z4)).unwrap(), z4);
    }

    #[test]
    fn round_trip_sparse() {
        let s = PartialBinarySystem::sparse_example();
        assert_eq!(reconstruct_system(&graph_model(&s)).unwrap(), s);
    }

    #[test]
    fn corrupted_digraph_reports_conflict() {
        let mut d = graph_model(&PartialBinarySystem::cyclic(3));
        let first = d.arcs[0];
        d.arcs.push(Arc { to: (first.to + 1) % 3, ..first });
        assert!(matches!(
            reconstruct_system(&d),
            Err(AlgsysError::ConflictingArcs { .. })
        ));
    }

    #[test]
    fn multispace_union_structure() {
        let systems = [
            PartialBinarySystem::cyclic(3),
            PartialBinarySystem::triple_example(),
            PartialBinarySystem::sparse_example(),
        ];
        let d = multispace_graph(&systems);
        // labels: {0,1,2} ∪ {e,a,b} ∪ {1,2,a,b}: "1","2" shared with the
        // first system and "a","b" with the second
        assert_eq!(d.vertex_count(), 6);
        assert_eq!(d.arcs.len(), 9 + 9 + 6);
        assert_eq!(d.weak_components().len(), 1);
    }

    #[test]
    fn disjoint_systems_stay_apart() {
        let a = PartialBinarySystem::total(
            vec!["x".into(), "y".into()],
            vec![vec![0, 1], vec![1, 0]],
        )
        .unwrap();
        let b = PartialBinarySystem::total(
            vec!["p".into(), "q".into()],
            vec![vec![0, 1], vec![1, 0]],
        )
        .unwrap();
        let d = multispace_graph(&[a, b]);
        assert_eq!(d.weak_components().len(), 2);
    }
}
