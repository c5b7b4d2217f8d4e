mod common;

use chordck::graph::{
    canonical_form, canonical_labeling, cut_vertices, is_isomorphic, is_two_connected, parse_graph6, to_graph6,
};
use chordck::{Graph, VertexSet};
use proptest::prelude::*;

use common::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let bits = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), bits).prop_map(move |b| {
            let mask = b.iter().enumerate().fold(0u64, |m, (i, &x)| m | (x as u64) << i);
            graph_from_mask(n, mask)
        })
    })
}

fn arb_graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn graph6_matches_reference_encoder(g in arb_graph(11)) {
        let text = to_graph6(&g).unwrap();
        prop_assert_eq!(&text, &reference_graph6(&g));
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in arb_graph_with_perm(9)) {
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        let (labels, canon) = canonical_labeling(&g).unwrap();
        prop_assert_eq!(g.relabel(&labels), canon.clone());
        prop_assert_eq!(to_graph6(&canon).unwrap(), canonical_form(&g).unwrap().into_string());
    }

    #[test]
    fn cut_vertices_match_deletion_oracle(g in arb_graph(9)) {
        let truth: VertexSet = if connected(&g, None) {
            (0..g.order()).filter(|&v| g.order() > 2 && !connected(&g, Some(v))).collect()
        } else {
            VertexSet::EMPTY
        };
        if connected(&g, None) {
            prop_assert_eq!(cut_vertices(&g), truth);
        }
        prop_assert_eq!(is_two_connected(&g), two_connected(&g));
    }

    #[test]
    fn vertex_set_behaves_like_a_sorted_set(items in proptest::collection::btree_set(0usize..64, 0..20)) {
        let s: VertexSet = items.iter().copied().collect();
        prop_assert_eq!(s.len(), items.len());
        prop_assert_eq!(s.to_vec(), items.iter().copied().collect::<Vec<_>>());
        for v in 0..64 {
            prop_assert_eq!(s.contains(v), items.contains(&v));
        }
    }
}

#[test]
fn canonical_codes_separate_all_graphs_of_order_five() {
    let perms = permutations(5);
    let mut by_key = std::collections::HashMap::new();
    for g in labeled_graphs(5) {
        let code = canonical_form(&g).unwrap();
        let key = brute_key(&g, &perms);
        let prev = by_key.entry(key).or_insert_with(|| code.clone());
        assert_eq!(*prev, code, "same class, different codes");
    }
    let codes: std::collections::HashSet<_> = by_key.values().collect();
    assert_eq!(by_key.len(), 34);
    assert_eq!(codes.len(), 34);
}

#[test]
fn isomorphism_agrees_with_brute_force_on_order_four() {
    let all: Vec<Graph> = labeled_graphs(4).collect();
    for g in all.iter().step_by(3) {
        for h in all.iter().step_by(5) {
            assert_eq!(is_isomorphic(g, h), brute_isomorphic(g, h));
        }
    }
}

#[test]
fn malformed_graph6_is_rejected() {
    for bad in ["", "C", "C~~", "\u{7f}", "B\u{3e}"] {
        assert!(parse_graph6(bad).is_err(), "{bad:?}");
    }
}
