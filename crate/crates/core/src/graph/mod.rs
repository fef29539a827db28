//! Simple undirected graphs on dense vertex ids `0..n`.

mod canon;
mod induced;
pub mod io;
mod metrics;
mod planar;

pub use canon::{canonical_certificate, is_isomorphic};
pub use induced::{contains_induced, Matcher};
pub use metrics::{degeneracy, girth, Girth};
pub use planar::{planar_embedding, PlanarityResult, RotationEmbedding};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// An undirected simple graph. Adjacency lists are kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "GraphRepr", try_from = "GraphRepr")]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    labels: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n(),
            edges: g.edges(),
            labels: g.labels,
        }
    }
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;
    fn try_from(r: GraphRepr) -> Result<Self> {
        let mut g = Graph::from_edges(r.n, &r.edges)?;
        if let Some(l) = r.labels {
            g.set_labels(l)?;
        }
        Ok(g)
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a graph, deduplicating repeated edges. Self-loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EdgeOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
        }
        for list in &mut g.adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        Graph::from_edges(a + b, &edges).unwrap()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Sorted edge list with `u < v`.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.m());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(Vec::is_empty)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<()> {
        if labels.len() != self.n() {
            return Err(Error::Invalid(format!(
                "{} labels for a graph on {} vertices",
                labels.len(),
                self.n()
            )));
        }
        self.labels = Some(labels);
        Ok(())
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.adj.push(Vec::new());
        if let Some(l) = &mut self.labels {
            l.push(String::new());
        }
        self.adj.len() - 1
    }

    /// Inserts an edge; returns false if it was already present.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::EdgeOutOfRange { u, v, n });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(true)
            }
        }
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).unwrap();
                self.adj[v].remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    /// `G[S]`; vertex `i` of the result is the `i`-th smallest element of `S`.
    pub fn induced_subgraph(&self, set: &[Vertex]) -> Result<Graph> {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&bad) = sorted.iter().find(|&&v| v >= self.n()) {
            return Err(Error::VertexOutOfRange { v: bad, n: self.n() });
        }
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in sorted.iter().enumerate() {
            index[v] = i;
        }
        let adj = sorted
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX)
                    .map(|&w| index[w])
                    .collect()
            })
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| sorted.iter().map(|&v| l[v].clone()).collect());
        Ok(Graph { adj, labels })
    }

    /// `G - S`.
    pub fn remove_vertices(&self, set: &[Vertex]) -> Graph {
        let mut keep = vec![true; self.n()];
        for &v in set {
            if v < self.n() {
                keep[v] = false;
            }
        }
        let rest: Vec<_> = self.vertices().filter(|&v| keep[v]).collect();
        self.induced_subgraph(&rest).unwrap()
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|u| {
                let mut out = Vec::with_capacity(n - 1 - self.adj[u].len());
                let mut it = self.adj[u].iter().peekable();
                for v in 0..n {
                    if it.peek() == Some(&&v) {
                        it.next();
                    } else if v != u {
                        out.push(v);
                    }
                }
                out
            })
            .collect();
        Graph {
            adj,
            labels: self.labels.clone(),
        }
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.connected_components().len() == 1
    }

    /// Whether `set` induces a connected subgraph. The empty set counts as
    /// connected.
    pub fn induces_connected(&self, set: &[Vertex]) -> bool {
        if set.len() <= 1 {
            return true;
        }
        let mut inside = vec![false; self.n()];
        for &v in set {
            inside[v] = true;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![set[0]];
        seen[set[0]] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        let distinct = {
            let mut s = set.to_vec();
            s.sort_unstable();
            s.dedup();
            s.len()
        };
        count == distinct
    }

    /// Vertices of `H` are relabelled to `n(G)..n(G)+n(H)`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| l.iter().map(|&w| w + off).collect::<Vec<_>>()),
        );
        let labels = match (&self.labels, &other.labels) {
            (None, None) => None,
            (a, b) => {
                let mut l = a.clone().unwrap_or_else(|| vec![String::new(); self.n()]);
                l.extend(b.clone().unwrap_or_else(|| vec![String::new(); other.n()]));
                Some(l)
            }
        };
        Graph { adj, labels }
    }

    /// Merges `v` into `u`. The result has `n - 1` vertices; ids above `v`
    /// shift down by one.
    pub fn identify(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        let n = self.n();
        if u >= n {
            return Err(Error::VertexOutOfRange { v: u, n });
        }
        if v >= n {
            return Err(Error::VertexOutOfRange { v, n });
        }
        if u == v {
            return Err(Error::Invalid("cannot identify a vertex with itself".into()));
        }
        if self.has_edge(u, v) {
            return Err(Error::IdentifyAdjacent { u, v });
        }
        let relabel = |w: Vertex| -> Vertex {
            let w = if w == v { u } else { w };
            if w > v {
                w - 1
            } else {
                w
            }
        };
        let mut edges = Vec::with_capacity(self.m());
        for (a, b) in self.edges() {
            edges.push((relabel(a), relabel(b)));
        }
        let mut g = Graph::from_edges(n - 1, &edges)?;
        if let Some(l) = &self.labels {
            let mut l = l.clone();
            l.remove(v);
            g.labels = Some(l);
        }
        Ok(g)
    }

    /// Replaces edge `{u, v}` by a path with `t` new internal vertices,
    /// appended after the existing ones.
    pub fn subdivide(&self, u: Vertex, v: Vertex, t: usize) -> Result<Graph> {
        if t == 0 {
            return Err(Error::Invalid("subdivision needs at least one new vertex".into()));
        }
        if u >= self.n() || v >= self.n() || !self.has_edge(u, v) {
            return Err(Error::MissingEdge { u, v });
        }
        let mut g = self.clone();
        g.remove_edge(u, v);
        let mut prev = u;
        for _ in 0..t {
            let x = g.add_vertex();
            g.add_edge(prev, x)?;
            prev = x;
        }
        g.add_edge(prev, v)?;
        Ok(g)
    }

    /// Applies the vertex map `perm` (old id -> new id).
    pub fn permute(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let edges: Vec<_> = self.edges().into_iter().map(|(a, b)| (perm[a], perm[b])).collect();
        Graph::from_edges(self.n(), &edges).unwrap()
    }

    /// Vertex whose closed neighbourhood is the whole vertex set, if any.
    pub fn universal_vertex(&self) -> Option<Vertex> {
        let n = self.n();
        self.vertices().find(|&v| self.degree(v) + 1 == n)
    }
}

/// Small named graphs used throughout tests and examples.
pub mod named {
    use super::Graph;

    pub fn k(n: usize) -> Graph {
        Graph::complete(n)
    }

    /// `n` isolated vertices.
    pub fn independent(n: usize) -> Graph {
        Graph::empty(n)
    }

    pub fn p(n: usize) -> Graph {
        Graph::path(n)
    }

    pub fn c(n: usize) -> Graph {
        Graph::cycle(n)
    }

    /// Triangle plus a pendant vertex.
    pub fn paw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap()
    }

    pub fn two_k2() -> Graph {
        Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()
    }

    /// `K2 + 2K1`.
    pub fn co_diamond() -> Graph {
        Graph::from_edges(4, &[(0, 1)]).unwrap()
    }

    /// `K3 + K1`.
    pub fn co_claw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    pub fn claw() -> Graph {
        Graph::complete_bipartite(1, 3)
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    /// Seven-vertex graph with a degree-5 cut vertex `c = 0`:
    /// `a=1, p=2, q=3, b=4, d=5, r=6`, edges a–p, a–c, p–c, c–d, c–b, c–q,
    /// p–q, d–r.
    pub fn alpha_example() -> Graph {
        Graph::from_edges(
            7,
            &[(1, 2), (1, 0), (2, 0), (0, 5), (0, 4), (0, 3), (2, 3), (5, 6)],
        )
        .unwrap()
    }
}
