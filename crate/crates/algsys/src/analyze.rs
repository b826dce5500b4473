//! Structural property detectors for associated graphs, and the Euler
//! traversal analysis with its arc-pairing witness.

use crate::digraph::WeightedDigraph;
use crate::error::AlgsysError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub connected: bool,
    /// two nonempty label-id sets with no product defined across them
    pub partition_witness: Option<(Vec<usize>, Vec<usize>)>,
    /// vertices acting as identities on every defined product, one-sided
    pub left_units: Vec<usize>,
    pub right_units: Vec<usize>,
    pub two_sided_units: Vec<usize>,
    /// pairs `(a, a^{-1})` through the first two-sided unit, if any
    pub inverse_pairs: Vec<(usize, usize)>,
    /// pairs with `a∘b = b∘a` both defined
    pub commuting_pairs: Vec<(usize, usize)>,
    /// no two arcs from one vertex with different weights reach one head
    pub cancellation: bool,
    /// witness when cancellation fails: (from, to, weight1, weight2)
    pub cancellation_witness: Option<(usize, usize, usize, usize)>,
}

pub fn analyze_properties(d: &WeightedDigraph) -> PropertyReport {
    let n = d.vertex_count();
    let comps = d.weak_components();
    let connected = comps.len() <= 1;
    let partition_witness = if connected {
        None
    } else {
        let first = comps[0].clone();
        let rest: Vec<usize> = comps[1..].iter().flatten().copied().collect();
        Some((first, rest))
    };
    // product lookup: from a with weight b
    let product = |a: usize, b: usize| -> Option<usize> {
        d.arcs
            .iter()
            .find(|arc| arc.from == a && arc.weight == b)
            .map(|arc| arc.to)
    };
    let mut left_units = Vec::new();
    let mut right_units = Vec::new();
    for u in 0..n {
        // u is a left unit when u∘x = x wherever defined, with at least
        // one defined product
        let defined: Vec<usize> = (0..n).filter(|&x| product(u, x).is_some()).collect();
        if !defined.is_empty() && defined.iter().all(|&x| product(u, x) == Some(x)) {
            left_units.push(u);
        }
        let defined_right: Vec<usize> = (0..n).filter(|&x| product(x, u).is_some()).collect();
        if !defined_right.is_empty()
            && defined_right.iter().all(|&x| product(x, u) == Some(x))
        {
            right_units.push(u);
        }
    }
    let two_sided_units: Vec<usize> = left_units
        .iter()
        .copied()
        .filter(|u| right_units.contains(u))
        .collect();
    let mut inverse_pairs = Vec::new();
    if let Some(&unit) = two_sided_units.first() {
        for a in 0..n {
            if let Some(b) = (0..n).find(|&b| product(a, b) == Some(unit) && product(b, a) == Some(unit)) {
                inverse_pairs.push((a, b));
            }
        }
    }
    let mut commuting_pairs = Vec::new();
    for a in 0..n {
        for b in a..n {
            let ab = product(a, b);
            if ab.is_some() && ab == product(b, a) {
                commuting_pairs.push((a, b));
            }
        }
    }
    // cancellation fails iff some vertex has two same-direction arcs to
    // one head with different weights (a parallel multiple 2-edge)
    let mut cancellation = true;
    let mut cancellation_witness = None;
    'outer: for (i, x) in d.arcs.iter().enumerate() {
        for y in &d.arcs[i + 1..] {
            if x.from == y.from && x.to == y.to && x.op_tag == y.op_tag && x.weight != y.weight {
                cancellation = false;
                cancellation_witness = Some((x.from, x.to, x.weight, y.weight));
                break 'outer;
            }
        }
    }
    PropertyReport {
        connected,
        partition_witness,
        left_units,
        right_units,
        two_sided_units,
        inverse_pairs,
        commuting_pairs,
        cancellation,
        cancellation_witness,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerReport {
    pub is_euler: bool,
    /// a vertex with unbalanced in/out degrees, when not eulerian
    pub unbalanced_vertex: Option<usize>,
    /// per-vertex pairing of in-arc indices with out-arc indices, when
    /// eulerian: the one-way-function witness
    pub pairing: Option<Vec<Vec<(usize, usize)>>>,
}

/// Degree balance plus weak connectivity of the non-isolated part; on
/// success, pairs every in-arc with an out-arc at each vertex.
pub fn euler_analysis(d: &WeightedDigraph) -> Result<EulerReport, AlgsysError> {
    let n = d.vertex_count();
    for v in 0..n {
        if d.out_degree(v) != d.in_degree(v) {
            return Ok(EulerReport {
                is_euler: false,
                unbalanced_vertex: Some(v),
                pairing: None,
            });
        }
    }
    // non-isolated part must be one weak component
    let nontrivial: Vec<Vec<usize>> = d
        .weak_components()
        .into_iter()
        .filter(|c| c.iter().any(|&v| d.out_degree(v) + d.in_degree(v) > 0))
        .collect();
    if nontrivial.len() > 1 {
        return Ok(EulerReport {
            is_euler: false,
            unbalanced_vertex: None,
            pairing: None,
        });
    }
    let mut pairing = Vec::with_capacity(n);
    for v in 0..n {
        let ins: Vec<usize> = (0..d.arcs.len()).filter(|&i| d.arcs[i].to == v).collect();
        let outs: Vec<usize> = (0..d.arcs.len()).filter(|&i| d.arcs[i].from == v).collect();
        pairing.push(ins.into_iter().zip(outs).collect());
    }
    Ok(EulerReport { is_euler: true, unbalanced_vertex: None, pairing: Some(pairing) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::graph_model;
    use crate::system::PartialBinarySystem;

    #[test]
    fn group_model_properties() {
        let d = graph_model(&PartialBinarySystem::cyclic(4));
        let report = analyze_properties(&d);
        assert!(report.connected);
        assert_eq!(report.two_sided_units, vec![0]);
        assert_eq!(report.inverse_pairs.len(), 4);
        assert!(report.cancellation);
        // abelian: every pair commutes
        assert_eq!(report.commuting_pairs.len(), 4 + 6);
    }

    #[test]
    fn sparse_example_has_no_unit_and_is_not_euler() {
        let d = graph_model(&PartialBinarySystem::sparse_example());
        let report = analyze_properties(&d);
        assert!(report.two_sided_units.is_empty());
        let euler = euler_analysis(&d).unwrap();
        assert!(!euler.is_euler);
        assert!(euler.unbalanced_vertex.is_some());
    }

    #[test]
    fn disconnected_partition_witness() {
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
        let d = crate::model::multispace_graph(&[a, b]);
        let report = analyze_properties(&d);
        assert!(!report.connected);
        let (s, t) = report.partition_witness.unwrap();
        assert_eq!(s.len() + t.len(), 4);
    }

    #[test]
    fn group_models_are_euler_with_full_pairing() {
        let d = graph_model(&PartialBinarySystem::cyclic(5));
        let e = euler_analysis(&d).unwrap();
        assert!(e.is_euler);
        let pairing = e.pairing.unwrap();
        for v in 0..5 {
            assert_eq!(pairing[v].len(), 5);
            // each pairing entry matches an in-arc with an out-arc at v
            for &(i, o) in &pairing[v] {
                assert_eq!(d.arcs[i].to, v);
                assert_eq!(d.arcs[o].from, v);
            }
        }
    }

    #[test]
    fn cancellation_failure_detected() {
        // a∘x = a for both x: two arcs a -> a with different weights
        let sys = PartialBinarySystem::new(
            vec!["a".into(), "b".into()],
            vec![vec![Some(0), Some(0)], vec![None, None]],
        )
        .unwrap();
        let report = analyze_properties(&graph_model(&sys));
        assert!(!report.cancellation);
        assert!(report.cancellation_witness.is_some());
    }
}
