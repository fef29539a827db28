use super::{Graph, Vertex};

/// Backtracking matcher for one pattern against hosts, optionally restricted
/// to a set of live host vertices.
///
/// Pattern vertices are matched in a fixed order: each next vertex is the one
/// with the most already-ordered neighbours (ties: higher degree, then lower
/// id), so connected parts are grown along edges. Candidates are drawn from
/// the host neighbourhood of a matched anchor when one exists.
#[derive(Clone, Debug)]
pub struct Matcher {
    pattern: Graph,
    order: Vec<Vertex>,
    anchor: Vec<Option<usize>>,
    /// For each position, the earlier positions and whether they must be adjacent.
    constraints: Vec<Vec<(usize, bool)>>,
    /// Previous isolated pattern vertex position; enforces increasing host ids.
    isolated_prev: Vec<Option<usize>>,
}

impl Matcher {
    pub fn new(pattern: &Graph) -> Self {
        let p = pattern.n();
        let mut order = Vec::with_capacity(p);
        let mut placed = vec![false; p];
        for _ in 0..p {
            let next = (0..p)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let links = pattern.neighbors(v).iter().filter(|&&w| placed[w]).count();
                    (links, pattern.degree(v), std::cmp::Reverse(v))
                })
                .unwrap();
            placed[next] = true;
            order.push(next);
        }
        let mut pos = vec![0; p];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let anchor = order
            .iter()
            .enumerate()
            .map(|(i, &v)| pattern.neighbors(v).iter().map(|&w| pos[w]).filter(|&j| j < i).min())
            .collect();
        let constraints = order
            .iter()
            .enumerate()
            .map(|(i, &v)| (0..i).map(|j| (j, pattern.has_edge(v, order[j]))).collect())
            .collect();
        let mut isolated_prev = vec![None; p];
        let mut last = None;
        for (i, &v) in order.iter().enumerate() {
            if pattern.degree(v) == 0 {
                isolated_prev[i] = last;
                last = Some(i);
            }
        }
        Matcher {
            pattern: pattern.clone(),
            order,
            anchor,
            constraints,
            isolated_prev,
        }
    }

    pub fn pattern(&self) -> &Graph {
        &self.pattern
    }

    /// Finds an induced embedding `phi` (indexed by pattern vertex) into the
    /// live part of `host`.
    pub fn find(&self, host: &Graph, alive: Option<&[bool]>) -> Option<Vec<Vertex>> {
        let p = self.pattern.n();
        if p == 0 {
            return Some(Vec::new());
        }
        let live = |v: Vertex| alive.map_or(true, |a| a[v]);
        let live_count = match alive {
            Some(a) => a.iter().filter(|&&x| x).count(),
            None => host.n(),
        };
        if live_count < p {
            return None;
        }
        let mut mapped = vec![usize::MAX; p];
        let mut used = vec![false; host.n()];
        if self.extend(host, &live, 0, &mut mapped, &mut used) {
            let mut phi = vec![0; p];
            for (i, &v) in self.order.iter().enumerate() {
                phi[v] = mapped[i];
            }
            Some(phi)
        } else {
            None
        }
    }

    fn extend(
        &self,
        host: &Graph,
        live: &dyn Fn(Vertex) -> bool,
        i: usize,
        mapped: &mut [Vertex],
        used: &mut [bool],
    ) -> bool {
        if i == self.order.len() {
            return true;
        }
        let need = self.pattern.degree(self.order[i]);
        let lower = self.isolated_prev[i].map_or(0, |j| mapped[j] + 1);
        let try_vertex = |h: Vertex, mapped: &mut [Vertex], used: &mut [bool]| -> bool {
            if used[h] || !live(h) || host.degree(h) < need || h < lower {
                return false;
            }
            for &(j, adj) in &self.constraints[i] {
                if host.has_edge(h, mapped[j]) != adj {
                    return false;
                }
            }
            mapped[i] = h;
            used[h] = true;
            let ok = self.extend(host, live, i + 1, mapped, used);
            used[h] = false;
            ok
        };
        match self.anchor[i] {
            Some(j) => {
                let base = mapped[j];
                for &h in host.neighbors(base) {
                    if try_vertex(h, mapped, used) {
                        return true;
                    }
                }
            }
            None => {
                for h in lower..host.n() {
                    if try_vertex(h, mapped, used) {
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// An injective map `phi` from pattern vertices into `host` with
/// `{phi(u), phi(v)}` an edge iff `{u, v}` is.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Vec<Vertex>> {
    Matcher::new(pattern).find(host, None)
}
