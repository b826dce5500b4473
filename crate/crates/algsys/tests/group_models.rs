//! Properties of associated graphs of verified groups: round trips,
//! completeness of the 2-edge structure, Euler pairing, and the
//! even-order involution observation.

use msg_algsys::*;
use msg_groups::FiniteGroup;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn from_group(g: &FiniteGroup) -> PartialBinarySystem {
    PartialBinarySystem::total(g.labels().to_vec(), g.table().to_vec()).unwrap()
}

#[test]
fn random_partial_systems_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..200 {
        let n = rng.gen_range(1..=8usize);
        let labels = (0..n).map(|i| format!("x{i}")).collect();
        let table: Vec<Vec<Option<usize>>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        if rng.gen_bool(0.5) {
                            Some(rng.gen_range(0..n))
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect();
        let sys = PartialBinarySystem::new(labels, table).unwrap();
        assert_eq!(reconstruct_system(&graph_model(&sys)).unwrap(), sys);
    }
}

#[test]
fn group_models_are_complete_two_graphs_with_loops() {
    for g in [
        FiniteGroup::cyclic(3),
        FiniteGroup::cyclic(4),
        FiniteGroup::cyclic(6),
        FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)),
    ] {
        let d = graph_model(&from_group(&g));
        let n = g.order();
        let report = analyze_properties(&d);
        assert!(report.connected);
        assert_eq!(report.two_sided_units, vec![g.identity()]);
        assert_eq!(report.inverse_pairs.len(), n, "all elements invertible");
        assert!(report.cancellation);
        // loops at every vertex
        for v in 0..n {
            assert!(d.arcs.iter().any(|a| a.from == v && a.to == v));
        }
        // opposite 2-edges between every vertex pair
        assert_eq!(d.opposite_pairs().len(), n * (n - 1) / 2);
        // out-degree |A| everywhere (complete system)
        assert!((0..n).all(|v| d.out_degree(v) == n));
    }
}

#[test]
fn euler_pairing_property_on_groups() {
    for g in [FiniteGroup::cyclic(4), FiniteGroup::cyclic(7)] {
        let d = graph_model(&from_group(&g));
        let e = euler_analysis(&d).unwrap();
        assert!(e.is_euler);
        let pairing = e.pairing.unwrap();
        // the pairing is a bijection at every vertex (the defining
        // property of the traversal witness)
        for v in 0..g.order() {
            let ins: std::collections::HashSet<usize> =
                pairing[v].iter().map(|&(i, _)| i).collect();
            let outs: std::collections::HashSet<usize> =
                pairing[v].iter().map(|&(_, o)| o).collect();
            assert_eq!(ins.len(), pairing[v].len());
            assert_eq!(outs.len(), pairing[v].len());
        }
    }
}

#[test]
fn even_order_groups_have_equal_weight_opposite_edges() {
    // an involution s gives arcs a -> a∘s both ways with the same weight
    for g in [FiniteGroup::cyclic(4), FiniteGroup::cyclic(6), FiniteGroup::cyclic(8)] {
        let d = graph_model(&from_group(&g));
        let found = d.arcs.iter().any(|x| {
            x.from != x.to
                && d.arcs.iter().any(|y| {
                    y.from == x.to && y.to == x.from && y.weight == x.weight
                })
        });
        assert!(found, "order {} has an involution edge pair", g.order());
    }
}
