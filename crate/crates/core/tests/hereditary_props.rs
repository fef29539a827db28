use std::collections::HashSet;

use itertools::Itertools;
use pivd_core::graph::named::*;
use pivd_core::graph::{is_isomorphic, Graph};
use pivd_core::hereditary::{
    alpha_sequence, build_gadget_plan, gamma_key, is_member, normalize_family, select_h_pi, CPrimeMode, GammaKey,
};
use pivd_core::verify::{enumerate_graphs, Constraints};
use proptest::prelude::*;

fn connected_up_to(n: usize) -> Vec<Graph> {
    enumerate_graphs(n, &Constraints { connected: true, ..Default::default() })
        .into_iter()
        .filter(|g| g.n() > 0)
        .collect()
}

/// Minimum over vertices of the sorted-descending component sizes after
/// deleting that vertex, with a strict prefix counting as smaller.
fn alpha_by_definition(h: &Graph) -> Vec<usize> {
    h.vertices()
        .map(|c| {
            let rest = h.remove_vertices(&[c]);
            rest.connected_components().iter().map(Vec::len).sorted().rev().collect_vec()
        })
        .min()
        .unwrap()
}

#[test]
fn gamma_keys_separate_isomorphism_classes() {
    let graphs = connected_up_to(7);
    let keys: Vec<GammaKey> = graphs.iter().map(|g| gamma_key(g).unwrap()).collect();
    let distinct: HashSet<&GammaKey> = keys.iter().collect();
    assert_eq!(distinct.len(), graphs.len());
    for (a, b) in keys.iter().tuple_combinations().take(200_000) {
        let relations = [a < b, a == b, a > b].iter().filter(|&&x| x).count();
        assert_eq!(relations, 1);
    }
}

#[test]
fn gamma_order_refines_alpha_order() {
    let graphs = connected_up_to(6);
    let data: Vec<(GammaKey, Vec<usize>)> =
        graphs.iter().map(|g| (gamma_key(g).unwrap(), alpha_by_definition(g))).collect();
    for (g, h) in data.iter().cartesian_product(&data) {
        if g.0 >= h.0 {
            assert!(g.1 >= h.1, "{:?} vs {:?}", g.1, h.1);
        }
    }
}

#[test]
fn alpha_matches_definition() {
    for g in connected_up_to(6) {
        let (alpha, c) = alpha_sequence(&g).unwrap();
        assert_eq!(alpha, alpha_by_definition(&g));
        let rest = g.remove_vertices(&[c]);
        assert_eq!(alpha, rest.connected_components().iter().map(Vec::len).sorted().rev().collect_vec());
    }
}

#[test]
fn gadget_plans_partition_the_component() {
    for h in connected_up_to(7).into_iter().filter(|g| g.m() > 0) {
        for mode in [CPrimeMode::Degeneracy, CPrimeMode::Arbitrary] {
            let plan = build_gadget_plan(&h, mode).unwrap();
            let j: HashSet<usize> = plan.j_vertices.iter().copied().collect();
            let d: HashSet<usize> = plan.d_vertices.iter().copied().collect();
            assert_eq!(j.union(&d).count(), h.n());
            assert_eq!(j.intersection(&d).copied().collect_vec(), vec![plan.c]);
            assert!(j.contains(&plan.c_prime) && plan.c_prime != plan.c);
            assert_eq!(plan.j, h.induced_subgraph(&plan.j_vertices).unwrap());
            assert_eq!(plan.d_graph, h.induced_subgraph(&plan.d_vertices).unwrap());
            assert!(plan.j.is_connected());
            assert_eq!(plan.d, 1);
        }
    }
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=6).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |bits| {
            let edges: Vec<_> = pairs.iter().zip(bits).filter(|(_, b)| *b).map(|(e, _)| *e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn connected_small_graph() -> impl Strategy<Value = Graph> {
    small_graph().prop_filter("connected", Graph::is_connected)
}

fn shuffled(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn alpha_ignores_labels((g, perm) in connected_small_graph().prop_flat_map(|g| { let n = g.n(); (Just(g), shuffled(n)) })) {
        prop_assert_eq!(alpha_sequence(&g).unwrap().0, alpha_sequence(&g.permute(&perm)).unwrap().0);
    }

    #[test]
    fn selection_ignores_labels_and_order(
        gs in proptest::collection::vec(small_graph().prop_filter("edge", |g| g.m() > 0), 1..4),
        seed in any::<u64>(),
    ) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let chosen = select_h_pi(&normalize_family(gs.clone()).unwrap(), false).unwrap();
        let mut moved: Vec<Graph> = gs
            .iter()
            .map(|g| {
                let mut perm: Vec<usize> = g.vertices().collect();
                perm.shuffle(&mut rng);
                g.permute(&perm)
            })
            .collect();
        moved.shuffle(&mut rng);
        let again = select_h_pi(&normalize_family(moved).unwrap(), false).unwrap();
        prop_assert!(is_isomorphic(&chosen, &again));
    }

    #[test]
    fn membership_is_hereditary(g in small_graph(), mask in any::<u8>(), which in 0usize..4) {
        let families = [vec![p(3)], vec![k(3)], vec![two_k2()], vec![co_diamond(), co_claw()]];
        let fam = normalize_family(families[which].clone()).unwrap();
        let sub: Vec<usize> = g.vertices().filter(|v| mask >> v & 1 == 1).collect();
        if is_member(&g, &fam) {
            prop_assert!(is_member(&g.induced_subgraph(&sub).unwrap(), &fam));
        }
    }
}

#[test]
fn named_examples() {
    let (alpha, c) = alpha_sequence(&alpha_example()).unwrap();
    assert_eq!((alpha, c), (vec![3, 2, 1], 0));
    let plan = build_gadget_plan(&p(3), CPrimeMode::Degeneracy).unwrap();
    assert!(is_isomorphic(&plan.h1, &p(3)));
    assert!(is_isomorphic(&plan.j, &k(2)) && is_isomorphic(&plan.d_graph, &k(2)));
    let big = build_gadget_plan(&alpha_example(), CPrimeMode::Degeneracy).unwrap();
    assert_eq!(big.j.n(), 4);
}
