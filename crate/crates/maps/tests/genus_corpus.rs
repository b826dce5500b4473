//! Cross-checks between the census, the two maximum-genus computations
//! and the closed-form counts, over a small regression corpus.

use msg_core::Multigraph;
use msg_maps::census::{census_size, enumerate_embeddings};
use msg_maps::genus::{gamma_tilde_max, nebesky_max_genus, xuong_max_genus};

fn corpus() -> Vec<(&'static str, Multigraph)> {
    vec![
        ("K4", Multigraph::complete(4)),
        ("K(2,3)", Multigraph::complete_bipartite(2, 3)),
        ("C5", Multigraph::cycle(5)),
        ("C6", Multigraph::cycle(6)),
        ("P4", Multigraph::path(4)),
        ("B2", Multigraph::bouquet(2)),
        ("B3", Multigraph::bouquet(3)),
        ("D(0,3,0)", Multigraph::dipole(0, 3, 0)),
        ("D(1,2,1)", Multigraph::dipole(1, 2, 1)),
        ("theta+tail", Multigraph::new(4, vec![(0, 1), (0, 1), (0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()),
        ("wheel4", Multigraph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)]).unwrap()),
    ]
}

#[test]
fn closed_form_totals() {
    for (name, g) in corpus() {
        let census = enumerate_embeddings(&g, Some(2_000_000)).unwrap();
        let rotations: u64 = (0..g.vertex_count())
            .map(|v| (1..=g.valency(v).saturating_sub(1) as u64).product::<u64>())
            .product();
        let beta = g.betti() as u32;
        assert_eq!(census.orientable_total(), rotations, "{name} orientable");
        assert_eq!(census.total(), rotations << beta, "{name} total");
        assert_eq!(
            census.nonorientable_total(),
            ((1u64 << beta) - 1) * rotations,
            "{name} non-orientable"
        );
        assert_eq!(census.total() as u128, census_size(&g), "{name} census size");
    }
}

#[test]
fn genus_ranges_are_gapless() {
    for (name, g) in corpus() {
        let census = enumerate_embeddings(&g, Some(2_000_000)).unwrap();
        assert!(census.orientable_gapless(), "{name} orientable range");
        assert!(census.nonorientable_gapless(), "{name} non-orientable range");
        if g.betti() > 0 {
            assert_eq!(
                census.max_crosscap(),
                Some(gamma_tilde_max(&g).unwrap()),
                "{name} max crosscap is the Betti number"
            );
        }
    }
}

#[test]
fn max_genus_three_ways() {
    for (name, g) in corpus() {
        let census = enumerate_embeddings(&g, Some(2_000_000)).unwrap();
        let enumerated = census.max_genus().unwrap();
        let xuong = xuong_max_genus(&g).unwrap();
        let nebesky = nebesky_max_genus(&g).unwrap();
        assert_eq!(xuong, enumerated, "{name}: xuong vs census");
        assert_eq!(nebesky, enumerated, "{name}: nebesky vs census");
    }
}

#[test]
fn k4_rooted_count_formula_vs_oracle() {
    let g = Multigraph::complete(4);
    let formula = msg_maps::rooted::rooted_map_count(&g, None).unwrap();
    assert_eq!(formula, 64);
    let oracle = msg_maps::rooted::rooted_map_oracle(&g, Some(4_000_000)).unwrap();
    assert_eq!(formula, oracle);
}
