use std::collections::HashMap;

use itertools::Itertools;
use pivd_core::graph::{canonical_certificate, planar_embedding};
use pivd_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn has_k5_or_k33_subgraph(g: &Graph) -> bool {
    let n = g.n();
    let k5 = (0..n)
        .combinations(5)
        .any(|s| s.iter().tuple_combinations().all(|(&a, &b)| g.has_edge(a, b)));
    if k5 {
        return true;
    }
    (0..n).combinations(6).any(|s| {
        s[1..].iter().copied().combinations(2).any(|rest| {
            let left = [s[0], rest[0], rest[1]];
            let right: Vec<_> = s.iter().copied().filter(|v| !left.contains(v)).collect();
            left.iter().all(|&a| right.iter().all(|&b| g.has_edge(a, b)))
        })
    })
}

fn contract(g: &Graph, u: usize, v: usize) -> Graph {
    let mut h = g.clone();
    h.remove_edge(u, v);
    h.identify(u, v).unwrap()
}

/// Wagner: nonplanar iff some minor contains K5 or K3,3 as a subgraph.
fn nonplanar(g: &Graph, memo: &mut HashMap<Vec<u8>, bool>) -> bool {
    if g.n() < 5 || g.m() < 9 {
        return false;
    }
    let key = canonical_certificate(g);
    if let Some(&r) = memo.get(&key) {
        return r;
    }
    let r = has_k5_or_k33_subgraph(g)
        || g.edges().into_iter().any(|(u, v)| {
            let mut d = g.clone();
            d.remove_edge(u, v);
            nonplanar(&d, memo) || nonplanar(&contract(g, u, v), memo)
        });
    memo.insert(key, r);
    r
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let e: Vec<_> = (0..n).tuple_combinations().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, &e).unwrap()
}

#[test]
fn agrees_with_minor_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut memo = HashMap::new();
    let mut seen = [0usize; 2];
    for _ in 0..400 {
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(&mut rng, n, p);
        let expected = !nonplanar(&g, &mut memo);
        let got = planar_embedding(&g);
        assert_eq!(got.is_planar(), expected, "{g:?}");
        seen[expected as usize] += 1;
        if let Some(e) = got.embedding() {
            assert!(e.euler_holds(&g));
            for v in g.vertices() {
                let mut r = e.rotation[v].clone();
                r.sort_unstable();
                assert_eq!(r, g.neighbors(v));
            }
            let darts: usize = e.faces.iter().map(|f| f.len()).sum();
            assert_eq!(darts, 2 * g.m());
        }
    }
    assert!(seen[0] > 20 && seen[1] > 20, "{seen:?}");
}
