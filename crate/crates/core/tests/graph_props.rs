use itertools::Itertools;
use pivd_core::graph::io::{parse_family, parse_graph, write_family, write_graph};
use pivd_core::graph::{contains_induced, degeneracy, girth, is_isomorphic, Girth, Graph};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |bits| {
            let edges: Vec<_> = pairs.iter().zip(bits).filter(|(_, b)| *b).map(|(e, _)| *e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn relabeled(g: Graph) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    let n = g.n();
    Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(move |perm| (g.clone(), perm))
}

fn iso_by_permutations(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let ea = a.edges();
    (0..a.n()).permutations(a.n()).any(|p| ea.iter().all(|&(u, v)| b.has_edge(p[u], p[v])))
}

fn induced_by_subsets(host: &Graph, pattern: &Graph) -> bool {
    host.vertices()
        .combinations(pattern.n())
        .any(|s| iso_by_permutations(&host.induced_subgraph(&s).unwrap(), pattern))
}

fn shortest_cycle_by_paths(g: &Graph) -> Option<usize> {
    fn walk(g: &Graph, start: usize, path: &mut Vec<usize>, best: &mut Option<usize>) {
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w == start && path.len() >= 3 {
                *best = Some(best.map_or(path.len(), |b| b.min(path.len())));
            } else if w > start && !path.contains(&w) {
                path.push(w);
                walk(g, start, path, best);
                path.pop();
            }
        }
    }
    let mut best = None;
    for s in g.vertices() {
        walk(g, s, &mut vec![s], &mut best);
    }
    best
}

fn degeneracy_by_subsets(g: &Graph) -> usize {
    (1..1usize << g.n())
        .map(|mask| {
            let s: Vec<usize> = g.vertices().filter(|v| mask >> v & 1 == 1).collect();
            g.induced_subgraph(&s).unwrap().min_degree()
        })
        .max()
        .unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn relabeling_is_isomorphic((g, perm) in graph_strategy(7).prop_flat_map(relabeled)) {
        prop_assert!(is_isomorphic(&g, &g.permute(&perm)));
    }

    #[test]
    fn isomorphism_matches_permutation_search(a in graph_strategy(6), b in graph_strategy(6)) {
        prop_assert_eq!(is_isomorphic(&a, &b), iso_by_permutations(&a, &b));
    }

    #[test]
    fn same_order_and_size_pairs_match_permutation_search(a in graph_strategy(6), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut pairs: Vec<(usize, usize)> = (0..a.n()).tuple_combinations().collect();
        pairs.shuffle(&mut rng);
        pairs.truncate(a.m());
        let b = Graph::from_edges(a.n(), &pairs).unwrap();
        prop_assert_eq!(is_isomorphic(&a, &b), iso_by_permutations(&a, &b));
    }

    #[test]
    fn induced_search_matches_subsets(host in graph_strategy(7), pattern in graph_strategy(4)) {
        let found = contains_induced(&host, &pattern);
        prop_assert_eq!(found.is_some(), induced_by_subsets(&host, &pattern));
        if let Some(emb) = found {
            for (u, v) in pattern.vertices().tuple_combinations() {
                prop_assert_eq!(pattern.has_edge(u, v), host.has_edge(emb[u], emb[v]));
            }
        }
    }

    #[test]
    fn complement_is_an_involution(g in graph_strategy(8)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn complement_commutes_with_induced(g in graph_strategy(8), mask in any::<u8>()) {
        let s: Vec<usize> = g.vertices().filter(|v| mask >> v & 1 == 1).collect();
        prop_assert_eq!(
            g.complement().induced_subgraph(&s).unwrap(),
            g.induced_subgraph(&s).unwrap().complement()
        );
    }

    #[test]
    fn degeneracy_order_is_a_witness(g in graph_strategy(7)) {
        let (d, order) = degeneracy(&g);
        prop_assert_eq!(order.iter().copied().sorted().collect_vec(), g.vertices().collect_vec());
        for (i, &v) in order.iter().enumerate() {
            let later = g.neighbors(v).iter().filter(|w| order[i + 1..].contains(w)).count();
            prop_assert!(later <= d);
        }
        prop_assert_eq!(d, degeneracy_by_subsets(&g));
    }

    #[test]
    fn girth_matches_cycle_search(g in graph_strategy(8)) {
        let expected = match shortest_cycle_by_paths(&g) {
            Some(len) => Girth::Finite(len),
            None => Girth::Infinite,
        };
        prop_assert_eq!(girth(&g), expected);
    }

    #[test]
    fn graph_text_round_trips(g in graph_strategy(9)) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn family_text_round_trips(gs in proptest::collection::vec(graph_strategy(6), 1..4)) {
        prop_assert_eq!(parse_family(&write_family(&gs)).unwrap(), gs);
    }
}
