use proptest::prelude::*;

use sncorona::generate::{random_connected, random_signed_graph, random_switch_set, seeded};
use sncorona::graph::{
    catalog, format_graph, is_isomorphic, is_switching_isomorphic, parse_graph, s_neighbourhood_corona, Sign,
    SignedGraph, SwitchSet,
};

fn graph(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (1..=max_n, 0.0f64..=1.0, 0.0f64..=1.0, any::<u64>())
        .prop_map(|(n, p, q, seed)| random_signed_graph(&mut seeded(seed), n, p, q))
}

/// Balance by brute force: some ±1 labelling makes every edge sign equal to
/// the product of its endpoint labels.
fn balanced_by_search(g: &SignedGraph) -> bool {
    let n = g.order();
    (0u32..1 << n).any(|mask| {
        let label = |v: usize| if mask >> v & 1 == 1 { -1 } else { 1 };
        g.edges().iter().all(|e| e.sign.value() == label(e.u) * label(e.v))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn corona_size_laws(s1 in graph(6), s2 in graph(5)) {
        let c = s_neighbourhood_corona(&s1, &s2);
        let (n1, n2) = (s1.order(), s2.order());
        prop_assert_eq!(c.order(), n1 * (n2 + 1));
        prop_assert_eq!(c.edge_count(), s1.edge_count() + n1 * s2.edge_count() + 2 * n2 * s1.edge_count());
    }

    #[test]
    fn corona_link_edges_copy_signs(s1 in graph(5), s2 in graph(4)) {
        let c = s_neighbourhood_corona(&s1, &s2);
        let (n1, n2) = (s1.order(), s2.order());
        for e in s1.edges() {
            for u in 0..n2 {
                prop_assert_eq!(c.sign(e.u, n1 + e.v * n2 + u), Some(e.sign));
                prop_assert_eq!(c.sign(e.v, n1 + e.u * n2 + u), Some(e.sign));
            }
        }
    }

    #[test]
    fn degree_sums(g in graph(8)) {
        let d = g.degrees();
        let m = g.edge_count();
        let negatives = g.edges().iter().filter(|e| e.sign == Sign::Negative).count() as i64;
        let total: usize = (0..g.order()).map(|v| d.degree(v)).sum();
        let net: i64 = (0..g.order()).map(|v| d.net(v)).sum();
        prop_assert_eq!(total, 2 * m);
        prop_assert_eq!(net, 2 * (m as i64 - 2 * negatives));
    }

    #[test]
    fn switching_is_an_involution(g in graph(8), seed in any::<u64>()) {
        let x = random_switch_set(&mut seeded(seed), g.order());
        prop_assert_eq!(g.switch(&x).switch(&x), g);
    }

    #[test]
    fn switching_preserves_balance(g in graph(7), seed in any::<u64>()) {
        let x = random_switch_set(&mut seeded(seed), g.order());
        prop_assert_eq!(g.switch(&x).is_balanced(), g.is_balanced());
        prop_assert_eq!(g.is_balanced(), balanced_by_search(&g));
    }

    #[test]
    fn format_parse_round_trip(g in graph(9)) {
        prop_assert_eq!(parse_graph(&format_graph(&g)).unwrap(), g);
    }

    #[test]
    fn relabelled_graphs_are_isomorphic(g in graph(7), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut seeded(seed));
        let h = g.relabel(&perm);
        prop_assert!(is_isomorphic(&g, &h).unwrap());
        let x = random_switch_set(&mut seeded(seed ^ 1), g.order());
        prop_assert!(is_switching_isomorphic(&g, &h.switch(&x)).unwrap());
    }

    #[test]
    fn negation_changes_isomorphism_only_with_edges(g in graph(6)) {
        let neg = g.negated();
        if g.edge_count() == 0 {
            prop_assert!(is_isomorphic(&g, &neg).unwrap());
        } else {
            let positives = g.edges().iter().filter(|e| e.sign == Sign::Positive).count();
            if 2 * positives != g.edge_count() {
                prop_assert!(!is_isomorphic(&g, &neg).unwrap());
            }
        }
    }
}

#[test]
fn connected_generator_is_connected() {
    let mut rng = seeded(3);
    for n in 1..10 {
        assert!(random_connected(&mut rng, n, 0.2, 0.5).is_connected());
    }
}

#[test]
fn k2_corona_with_k1_is_p4() {
    let c = s_neighbourhood_corona(&catalog::complete(2, Sign::Positive), &catalog::k1());
    assert!(is_isomorphic(&c, &catalog::path(4, Sign::Positive)).unwrap());
}

#[test]
fn c4_minus_is_not_switching_equivalent_to_c4() {
    let c4 = catalog::cycle(4, Sign::Positive);
    assert!(!is_switching_isomorphic(&c4, &catalog::c4_minus()).unwrap());
    let switched = catalog::c4_minus().switch(&SwitchSet::new(4, [0]).unwrap());
    assert!(is_switching_isomorphic(&switched, &catalog::c4_minus()).unwrap());
}
