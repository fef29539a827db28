use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use super::{Graph, Vertex};

/// Shortest cycle length; `Infinite` for forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn at_least(self, bound: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= bound,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_str("inf"),
        }
    }
}

/// BFS from every vertex; the minimum over roots of `dist(u) + dist(w) + 1`
/// over non-tree edges is exact.
pub fn girth(g: &Graph) -> Girth {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            if 2 * dist[v] >= best {
                break;
            }
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    best = best.min(dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// Smallest-last elimination: repeatedly removes a minimum-degree vertex
/// (smallest id on ties). Returns `d` and the removal order; every vertex
/// has at most `d` neighbours later in the order.
pub fn degeneracy(g: &Graph) -> (usize, Vec<Vertex>) {
    let n = g.n();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut d = 0;
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (deg[v], v)).unwrap();
        d = d.max(deg[v]);
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    (d, order)
}

#[cfg(test)]
mod tests {
    use super::super::named::*;
    use super::*;
    use itertools::Itertools;

    fn brute_girth(g: &Graph) -> Girth {
        // every cyclic vertex sequence, shortest first
        let n = g.n();
        for len in 3..=n {
            for set in (0..n).combinations(len) {
                let first = set[0];
                for rest in set[1..].iter().permutations(len - 1) {
                    let mut cyc = vec![first];
                    cyc.extend(rest.into_iter().copied());
                    if (0..len).all(|i| g.has_edge(cyc[i], cyc[(i + 1) % len])) {
                        return Girth::Finite(len);
                    }
                }
            }
        }
        Girth::Infinite
    }

    fn brute_degeneracy(g: &Graph) -> usize {
        // max over induced subgraphs of min degree
        let n = g.n();
        let mut best = 0;
        for mask in 1u32..1 << n {
            let set: Vec<_> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let h = g.induced_subgraph(&set).unwrap();
            best = best.max(h.min_degree());
        }
        best
    }

    fn random_graph(n: usize, seed: u64) -> Graph {
        let mut x = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if (x >> 33) % 3 == 0 {
                    e.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&k(3)), Girth::Finite(3));
        assert_eq!(girth(&p(6)), Girth::Infinite);
        assert_eq!(girth(&claw()), Girth::Infinite);
        assert_eq!(girth(&petersen()), Girth::Finite(5));
        assert_eq!(girth(&c(7)), Girth::Finite(7));
        assert_eq!(Girth::Infinite.to_string(), "inf");
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(degeneracy(&k(4)).0, 3);
        assert_eq!(degeneracy(&p(5)).0, 1);
        assert_eq!(degeneracy(&claw()).0, 1);
        assert_eq!(degeneracy(&c(5)).0, 2);
        assert_eq!(degeneracy(&Graph::empty(3)).0, 0);
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        for seed in 0..150 {
            let g = random_graph(2 + (seed as usize % 7), seed);
            assert_eq!(girth(&g), brute_girth(&g), "{g:?}");
            let (d, order) = degeneracy(&g);
            assert_eq!(d, brute_degeneracy(&g), "{g:?}");
            let mut pos = vec![0; g.n()];
            for (i, &v) in order.iter().enumerate() {
                pos[v] = i;
            }
            for v in g.vertices() {
                let later = g.neighbors(v).iter().filter(|&&w| pos[w] > pos[v]).count();
                assert!(later <= d);
            }
        }
    }
}
