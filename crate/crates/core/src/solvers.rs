//! Exact solvers for Π-vertex deletion and vertex cover: brute force,
//! bounded search tree, the 2^O(√m) enumeration for classes excluding an
//! independent set, the minimum-degree algorithm, and a connected variant.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Mutex, OnceLock};

use itertools::Itertools;
use log::warn;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{canonical_certificate, Graph, Vertex};
use crate::hereditary::{classify, ForbiddenFamily, PropertyClass};
use crate::reductions::{PiVDInstance, VCInstance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CertificateKind {
    VertexCover,
    Deletion,
    ConnectedDeletion,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub vertices: Vec<Vertex>,
}

impl Certificate {
    pub fn deletion(inst: &PiVDInstance, mut vertices: Vec<Vertex>) -> Self {
        vertices.sort_unstable();
        let kind = if inst.connected_variant {
            CertificateKind::ConnectedDeletion
        } else {
            CertificateKind::Deletion
        };
        Certificate { kind, vertices }
    }

    pub fn cover(mut vertices: Vec<Vertex>) -> Self {
        vertices.sort_unstable();
        Certificate {
            kind: CertificateKind::VertexCover,
            vertices,
        }
    }

    /// Re-validates a deletion certificate against `inst`.
    pub fn check(&self, inst: &PiVDInstance) -> Result<()> {
        let g = &inst.graph;
        let set = distinct_in_range(&self.vertices, g.n())?;
        if set.len() > inst.k {
            return Err(Error::InvalidCertificate(format!("{} deletions exceed budget {}", set.len(), inst.k)));
        }
        if (self.kind == CertificateKind::ConnectedDeletion || inst.connected_variant) && !g.induces_connected(&set) {
            return Err(Error::InvalidCertificate("deletion set is not connected".into()));
        }
        if self.kind == CertificateKind::VertexCover {
            return Err(Error::InvalidCertificate("vertex cover given for a deletion instance".into()));
        }
        let alive = mask_without(g.n(), &set);
        if let Some((i, phi)) = inst.family.find(g, Some(&alive)) {
            return Err(Error::InvalidCertificate(format!("member {i} remains at {phi:?}")));
        }
        Ok(())
    }

    pub fn check_cover(&self, src: &VCInstance) -> Result<()> {
        let set = distinct_in_range(&self.vertices, src.graph.n())?;
        if set.len() > src.k {
            return Err(Error::InvalidCertificate(format!("cover of size {} exceeds {}", set.len(), src.k)));
        }
        if !is_vertex_cover(&src.graph, &set) {
            return Err(Error::InvalidCertificate("an edge is uncovered".into()));
        }
        Ok(())
    }
}

fn distinct_in_range(vs: &[Vertex], n: usize) -> Result<Vec<Vertex>> {
    let mut set = vs.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.len() != vs.len() {
        return Err(Error::InvalidCertificate("repeated vertex".into()));
    }
    if let Some(&v) = set.iter().find(|&&v| v >= n) {
        return Err(Error::InvalidCertificate(format!("vertex {v} out of range")));
    }
    Ok(set)
}

pub fn is_vertex_cover(g: &Graph, set: &[Vertex]) -> bool {
    let inside = mask_with(g.n(), set);
    g.edges().iter().all(|&(u, v)| inside[u] || inside[v])
}

fn mask_with(n: usize, set: &[Vertex]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in set {
        m[v] = true;
    }
    m
}

fn mask_without(n: usize, set: &[Vertex]) -> Vec<bool> {
    let mut m = vec![true; n];
    for &v in set {
        m[v] = false;
    }
    m
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SolveResult {
    pub answer: bool,
    pub certificate: Option<Certificate>,
    /// Leaves of the search explored.
    pub branch_count: u64,
    pub membership_calls: u64,
}

impl SolveResult {
    fn no(branch_count: u64, membership_calls: u64) -> Self {
        SolveResult {
            answer: false,
            certificate: None,
            branch_count,
            membership_calls,
        }
    }
}

fn all_vertices(inst: &PiVDInstance) -> SolveResult {
    SolveResult {
        answer: true,
        certificate: Some(Certificate::deletion(inst, inst.graph.vertices().collect())),
        branch_count: 1,
        membership_calls: 0,
    }
}

/// Every deletion set of size at most `k`, by size then lexicographically.
pub fn solve_bruteforce(inst: &PiVDInstance) -> SolveResult {
    let g = &inst.graph;
    let n = g.n();
    let (mut leaves, mut calls) = (0, 0);
    for size in 0..=inst.k.min(n) {
        for set in (0..n).combinations(size) {
            leaves += 1;
            if inst.connected_variant && !g.induces_connected(&set) {
                continue;
            }
            calls += 1;
            if inst.family.find(g, Some(&mask_without(n, &set))).is_none() {
                return SolveResult {
                    answer: true,
                    certificate: Some(Certificate::deletion(inst, set)),
                    branch_count: leaves,
                    membership_calls: calls,
                };
            }
        }
    }
    SolveResult::no(leaves, calls)
}

struct Search<'a> {
    g: &'a Graph,
    family: &'a ForbiddenFamily,
    leaves: u64,
    calls: u64,
    memo: HashMap<Vec<Vertex>, Memo>,
}

/// What is known about the optimum of one live component.
enum Memo {
    Exact(Vec<Vertex>),
    Above(usize),
}

impl Search<'_> {
    fn find(&mut self, alive: &[bool]) -> Option<Vec<Vertex>> {
        self.calls += 1;
        self.family.find(self.g, Some(alive)).map(|(_, phi)| phi)
    }

    /// Greedy packing of vertex-disjoint occurrences, stopping past `limit`.
    fn packing_bound(&mut self, alive: &mut [bool], limit: usize) -> usize {
        let mut removed = Vec::new();
        let mut count = 0;
        while count <= limit {
            match self.find(alive) {
                Some(phi) => {
                    count += 1;
                    for &v in &phi {
                        alive[v] = false;
                        removed.push(v);
                    }
                }
                None => break,
            }
        }
        for v in removed {
            alive[v] = true;
        }
        count
    }

    fn twins(&self, alive: &[bool], x: Vertex, y: Vertex) -> bool {
        let live = |v: &&Vertex| alive[**v] && **v != x && **v != y;
        self.g.neighbors(x).iter().filter(live).eq(self.g.neighbors(y).iter().filter(live))
    }

    /// Each branch deletes one vertex of an occurrence and keeps the
    /// vertices tried before it, so no deletion set is reached twice.
    fn branch(&mut self, alive: &mut [bool], kept: &mut [bool], k: usize, sol: &mut Vec<Vertex>) -> bool {
        let Some(phi) = self.find(alive) else {
            self.leaves += 1;
            return true;
        };
        if k == 0 {
            self.leaves += 1;
            return false;
        }
        if k < phi.len() && self.packing_bound(alive, k) > k {
            self.leaves += 1;
            return false;
        }
        let mut cands: Vec<Vertex> = phi.into_iter().filter(|&v| !kept[v]).collect();
        cands.sort_unstable();
        let mut tried: Vec<Vertex> = Vec::new();
        for &x in &cands {
            if tried.iter().any(|&y| self.twins(alive, x, y)) {
                continue;
            }
            alive[x] = false;
            sol.push(x);
            if self.branch(alive, kept, k - 1, sol) {
                alive[x] = true;
                for &y in &tried {
                    kept[y] = false;
                }
                return true;
            }
            sol.pop();
            alive[x] = true;
            kept[x] = true;
            tried.push(x);
        }
        for &y in &tried {
            kept[y] = false;
        }
        if cands.is_empty() {
            self.leaves += 1;
        }
        false
    }

    /// Smallest deletion set of size at most `bound` for the live part,
    /// solving each component on its own. Needs connected members only.
    fn optimum(&mut self, alive: &[bool], bound: usize) -> Option<Vec<Vertex>> {
        let mut total = Vec::new();
        for comp in live_components(self.g, alive) {
            let part = self.component_optimum(&comp, bound - total.len())?;
            total.extend(part);
        }
        Some(total)
    }

    fn component_optimum(&mut self, comp: &[Vertex], bound: usize) -> Option<Vec<Vertex>> {
        match self.memo.get(comp) {
            Some(Memo::Exact(sol)) => return (sol.len() <= bound).then(|| sol.clone()),
            Some(Memo::Above(b)) if *b >= bound => return None,
            _ => {}
        }
        let mut mask = mask_with(self.g.n(), comp);
        let Some(phi) = self.find(&mask) else {
            self.leaves += 1;
            self.memo.insert(comp.to_vec(), Memo::Exact(Vec::new()));
            return Some(Vec::new());
        };
        let lower = if bound == 0 { 1 } else { self.packing_bound(&mut mask, bound) };
        if lower > bound {
            self.leaves += 1;
            self.memo.insert(comp.to_vec(), Memo::Above(bound));
            return None;
        }
        let mut cands = phi;
        cands.sort_unstable();
        let mut tried: Vec<Vertex> = Vec::new();
        let mut best: Option<Vec<Vertex>> = None;
        for &x in &cands {
            let cap = best.as_ref().map_or(bound, |b| b.len() - 1);
            if cap < lower.max(1) {
                break;
            }
            if tried.iter().any(|&y| self.twins(&mask, x, y)) {
                continue;
            }
            tried.push(x);
            mask[x] = false;
            if let Some(mut sol) = self.optimum(&mask, cap - 1) {
                sol.push(x);
                sol.sort_unstable();
                best = Some(sol);
            }
            mask[x] = true;
        }
        match &best {
            Some(sol) => self.memo.insert(comp.to_vec(), Memo::Exact(sol.clone())),
            None => self.memo.insert(comp.to_vec(), Memo::Above(bound)),
        };
        best
    }
}

/// Components of the live subgraph, each sorted, ordered by smallest vertex.
fn live_components(g: &Graph, alive: &[bool]) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in g.vertices().filter(|&v| alive[v]) {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for &w in g.neighbors(comp[i]) {
                if alive[w] && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Bounded search tree on forbidden occurrences. With only connected
/// members, components are solved independently to optimality.
pub fn solve_branching(inst: &PiVDInstance) -> SolveResult {
    assert!(!inst.connected_variant, "use solve_connected_bruteforce for the connected variant");
    let g = &inst.graph;
    let n = g.n();
    if inst.k >= n {
        return all_vertices(inst);
    }
    let mut s = Search {
        g,
        family: &inst.family,
        leaves: 0,
        calls: 0,
        memo: HashMap::new(),
    };
    let mut alive = vec![true; n];
    let sol = if inst.family.all_connected() {
        s.optimum(&alive, inst.k)
    } else {
        let mut sol = Vec::new();
        let mut kept = vec![false; n];
        s.branch(&mut alive, &mut kept, inst.k, &mut sol).then_some(sol)
    };
    SolveResult {
        answer: sol.is_some(),
        certificate: sol.map(|s| Certificate::deletion(inst, s)),
        branch_count: s.leaves,
        membership_calls: s.calls,
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum Threshold {
    /// `⌈2√m⌉`
    #[default]
    Default,
    /// `⌈√(2m/(d−1))⌉`
    Sqrt2mOverD,
}

fn ceil_sqrt(x: f64) -> usize {
    let mut r = x.sqrt().ceil() as usize;
    while r > 0 && ((r - 1) * (r - 1)) as f64 >= x {
        r -= 1;
    }
    while ((r * r) as f64) < x {
        r += 1;
    }
    r
}

/// `⌈2√m⌉`, computed exactly.
pub fn default_threshold(m: usize) -> usize {
    ceil_sqrt(4.0 * m as f64)
}

/// The bound `2^⌈√m⌉ · n^(d−1) · 2^((d−1)·⌈2√m⌉)` as a base-2 logarithm.
pub fn subexp_log2_bound(n: usize, m: usize, d: usize) -> f64 {
    let dm1 = d.saturating_sub(1) as f64;
    ceil_sqrt(m as f64) as f64 + dm1 * (n.max(1) as f64).log2() + dm1 * default_threshold(m) as f64
}

/// Enumeration over high-degree subsets and small independent sets of the
/// low-degree part with their neighbourhood subsets.
pub fn solve_subexp(inst: &PiVDInstance, threshold: Threshold) -> Result<SolveResult> {
    let d = match classify(&inst.family) {
        PropertyClass::ExcludesIndependentSet { d_is } => d_is,
        PropertyClass::ContainsAllIndependentSets => {
            return Err(Error::Incompatible(
                "the family contains every independent set; no edgeless member bounds kept sets".into(),
            ))
        }
    };
    let g = &inst.graph;
    let n = g.n();
    let m = g.m();
    if inst.k >= n {
        return Ok(all_vertices(inst));
    }
    if d == 1 {
        return Ok(SolveResult::no(1, 0));
    }
    let mut k = inst.k;
    let mut forced = Vec::new();
    if !inst.connected_variant {
        let isolated: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) == 0).collect();
        if isolated.len() > d - 1 {
            forced = isolated[d - 1..].to_vec();
            if forced.len() > k {
                return Ok(SolveResult::no(1, 0));
            }
            k -= forced.len();
        }
    }
    let alive0 = mask_without(n, &forced);
    let live: Vec<Vertex> = g.vertices().filter(|&v| alive0[v]).collect();
    let need = live.len().saturating_sub(k);

    let mut leaves = 0u64;
    let mut calls = 0u64;
    let mut accept = |kept: &[Vertex], leaves: &mut u64| -> Option<Vec<Vertex>> {
        *leaves += 1;
        if kept.len() < need {
            return None;
        }
        let mask = mask_with(n, kept);
        let deleted: Vec<Vertex> = g.vertices().filter(|&v| !mask[v]).collect();
        if inst.connected_variant && !g.induces_connected(&deleted) {
            return None;
        }
        calls += 1;
        inst.family.find(g, Some(&mask)).is_none().then_some(deleted)
    };

    if m == 0 {
        let found = accept(&live, &mut leaves);
        return Ok(finish(inst, found, leaves, calls));
    }

    let theta = match threshold {
        Threshold::Default => default_threshold(m),
        Threshold::Sqrt2mOverD => ceil_sqrt(2.0 * m as f64 / (d - 1) as f64),
    };
    let high: Vec<Vertex> = live.iter().copied().filter(|&v| g.degree(v) >= theta).collect();
    let low: Vec<Vertex> = live.iter().copied().filter(|&v| g.degree(v) < theta).collect();
    let low_graph_sets = independent_sets_within(g, &low, d);
    let is_low = mask_with(n, &low);

    let mut found = None;
    'outer: for hmask in 0u64..1 << high.len() {
        let a_h: Vec<Vertex> = (0..high.len()).filter(|i| hmask >> i & 1 == 1).map(|i| high[i]).collect();
        for iset in &low_graph_sets {
            let in_i = mask_with(n, iset);
            let mut nbhd: Vec<Vertex> = iset
                .iter()
                .flat_map(|&v| g.neighbors(v).iter().copied())
                .filter(|&w| is_low[w] && !in_i[w])
                .collect();
            nbhd.sort_unstable();
            nbhd.dedup();
            for lmask in 0u64..1 << nbhd.len() {
                let mut kept = a_h.clone();
                kept.extend(iset);
                kept.extend((0..nbhd.len()).filter(|i| lmask >> i & 1 == 1).map(|i| nbhd[i]));
                if let Some(del) = accept(&kept, &mut leaves) {
                    found = Some(del);
                    break 'outer;
                }
            }
        }
    }
    if threshold == Threshold::Default {
        let bound = subexp_log2_bound(n, m, d);
        assert!(
            (leaves as f64).log2() <= bound + 1e-9,
            "branch count {leaves} exceeds 2^{bound:.2} (n={n}, m={m}, d={d})"
        );
    }
    Ok(finish(inst, found, leaves, calls))
}

fn finish(inst: &PiVDInstance, found: Option<Vec<Vertex>>, leaves: u64, calls: u64) -> SolveResult {
    SolveResult {
        answer: found.is_some(),
        certificate: found.map(|s| Certificate::deletion(inst, s)),
        branch_count: leaves,
        membership_calls: calls,
    }
}

/// Independent sets of `g` inside `within` of size below `d`, by size then
/// lexicographically.
fn independent_sets_within(g: &Graph, within: &[Vertex], d: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    for size in 0..d {
        for set in within.iter().copied().combinations(size) {
            if set.iter().tuple_combinations().all(|(&a, &b)| !g.has_edge(a, b)) {
                out.push(set);
            }
        }
    }
    out
}

pub fn list_small_independent_sets(g: &Graph, d: usize) -> Vec<Vec<Vertex>> {
    let all: Vec<Vertex> = g.vertices().collect();
    independent_sets_within(g, &all, d)
}

/// Whether every member of the class with at most `max_order` vertices has
/// minimum degree at least `order − d`. Results are cached per family.
pub fn mindegree_premise_holds(family: &ForbiddenFamily, d: usize, max_order: usize) -> bool {
    static CACHE: OnceLock<Mutex<HashMap<(Vec<Vec<u8>>, usize, usize), bool>>> = OnceLock::new();
    let key = (
        family.members().iter().map(canonical_certificate).collect::<Vec<_>>(),
        d,
        max_order,
    );
    let cache = CACHE.get_or_init(Default::default);
    if let Some(&r) = cache.lock().unwrap().get(&key) {
        return r;
    }
    let holds = crate::verify::enumerate_graphs(max_order, &Default::default())
        .iter()
        .filter(|g| family.find(g, None).is_none())
        .all(|g| g.n() == 0 || g.min_degree() + d >= g.n());
    cache.lock().unwrap().insert(key, holds);
    holds
}

/// Branches on a low-degree vertex of the kept set, otherwise removes all
/// low-degree vertices and brute-forces the rest. Exact only when every
/// graph in the class misses at most `d` neighbours per vertex.
pub fn solve_mindegree(inst: &PiVDInstance, d: usize) -> SolveResult {
    if !mindegree_premise_holds(&inst.family, d, 7) {
        warn!("minimum-degree premise fails on small members; answers may be wrong");
    }
    let g = &inst.graph;
    let n = g.n();
    let m = g.m();
    if inst.k >= n {
        return all_vertices(inst);
    }
    let need = n - inst.k;
    let mut leaves = 0u64;
    let mut calls = 0u64;
    let mut test = |kept: &[Vertex], leaves: &mut u64| -> Option<Vec<Vertex>> {
        *leaves += 1;
        if kept.len() < need {
            return None;
        }
        calls += 1;
        let mask = mask_with(n, kept);
        inst.family
            .find(g, Some(&mask))
            .is_none()
            .then(|| g.vertices().filter(|&v| !mask[v]).collect())
    };
    let low: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) * g.degree(v) <= 2 * m).collect();
    for &v in &low {
        let nb = g.neighbors(v);
        let rest: Vec<Vertex> = g.vertices().filter(|&w| w != v && !g.has_edge(v, w)).collect();
        for amask in 0u64..1 << nb.len() {
            let a: Vec<Vertex> = (0..nb.len()).filter(|i| amask >> i & 1 == 1).map(|i| nb[i]).collect();
            for size in 0..=d.min(rest.len()) {
                for ad in rest.iter().copied().combinations(size) {
                    let mut kept = a.clone();
                    kept.extend(ad);
                    kept.push(v);
                    if let Some(del) = test(&kept, &mut leaves) {
                        return finish(inst, Some(del), leaves, calls);
                    }
                }
            }
        }
    }
    if low.len() > inst.k {
        return finish(inst, None, leaves, calls);
    }
    let high: Vec<Vertex> = g.vertices().filter(|v| !low.contains(v)).collect();
    let k_rest = inst.k - low.len();
    for size in (high.len().saturating_sub(k_rest)..=high.len()).rev() {
        for kept in high.iter().copied().combinations(size) {
            if let Some(del) = test(&kept, &mut leaves) {
                return finish(inst, Some(del), leaves, calls);
            }
        }
    }
    finish(inst, None, leaves, calls)
}

/// Connected deletion sets of size at most `k` by growing connected sets
/// from the vertices of one forbidden occurrence, smallest sets first.
pub fn solve_connected_bruteforce(inst: &PiVDInstance) -> SolveResult {
    let g = &inst.graph;
    let n = g.n();
    let mut calls = 1u64;
    let Some((_, occ)) = inst.family.find(g, None) else {
        return SolveResult {
            answer: true,
            certificate: Some(Certificate::deletion(inst, Vec::new())),
            branch_count: 1,
            membership_calls: 1,
        };
    };
    let mut leaves = 0u64;
    let mut roots = occ.clone();
    roots.sort_unstable();
    let mut banned = vec![false; n];
    for &r in &roots {
        if inst.k == 0 {
            break;
        }
        let mut inside = vec![false; n];
        inside[r] = true;
        let mut set = vec![r];
        let mut search = ConnectedSearch { inst, banned: banned.clone(), inside, leaves: 0, calls: 0 };
        let hit = search.grow(&mut set);
        leaves += search.leaves;
        calls += search.calls;
        if hit {
            return finish(inst, Some(set), leaves, calls);
        }
        banned[r] = true;
    }
    finish(inst, None, leaves, calls)
}

/// Include/exclude search over connected supersets of a root: each node
/// either adds the frontier vertex nearest an uncovered occurrence or bans it.
struct ConnectedSearch<'a> {
    inst: &'a PiVDInstance,
    banned: Vec<bool>,
    inside: Vec<bool>,
    leaves: u64,
    calls: u64,
}

impl ConnectedSearch<'_> {
    fn grow(&mut self, set: &mut Vec<Vertex>) -> bool {
        let g = &self.inst.graph;
        self.calls += 1;
        let alive: Vec<bool> = self.inside.iter().map(|&x| !x).collect();
        let Some((_, occ)) = self.inst.family.find(g, Some(&alive)) else {
            return true;
        };
        let Some((dist, first)) = self.nearest(&occ) else {
            self.leaves += 1;
            return false;
        };
        if set.len() + dist > self.inst.k {
            self.leaves += 1;
            return false;
        }
        self.inside[first] = true;
        set.push(first);
        if self.grow(set) {
            return true;
        }
        set.pop();
        self.inside[first] = false;
        self.banned[first] = true;
        let found = self.grow(set);
        self.banned[first] = false;
        found
    }

    /// Distance from the current set to the closest usable vertex of
    /// `occ`, and the frontier vertex on a shortest path to it.
    fn nearest(&self, occ: &[Vertex]) -> Option<(usize, Vertex)> {
        let g = &self.inst.graph;
        let n = g.n();
        let target: HashSet<Vertex> = occ.iter().copied().filter(|&v| !self.banned[v]).collect();
        let mut via = vec![usize::MAX; n];
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for v in g.vertices().filter(|&v| self.inside[v]) {
            for &w in g.neighbors(v) {
                if !self.inside[w] && !self.banned[w] && dist[w] == usize::MAX {
                    dist[w] = 1;
                    via[w] = w;
                    queue.push_back(w);
                }
            }
        }
        while let Some(v) = queue.pop_front() {
            if target.contains(&v) {
                return Some((dist[v], via[v]));
            }
            for &w in g.neighbors(v) {
                if !self.inside[w] && !self.banned[w] && dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    via[w] = via[v];
                    queue.push_back(w);
                }
            }
        }
        None
    }
}

/// Smallest vertex cover of size at most `k`, if any.
fn cover_within(g: &Graph, alive: &mut [bool], k: usize, sol: &mut Vec<Vertex>, leaves: &mut u64) -> bool {
    let deg = |v: Vertex, alive: &[bool]| g.neighbors(v).iter().filter(|&&w| alive[w]).count();
    let mut best: Option<(Vertex, usize)> = None;
    let mut pendant = None;
    for v in g.vertices().filter(|&v| alive[v]) {
        let dv = deg(v, alive);
        if dv == 1 && pendant.is_none() {
            pendant = Some(v);
        }
        if dv > 0 && best.map_or(true, |(_, b)| dv > b) {
            best = Some((v, dv));
        }
    }
    let Some((v, dv)) = best else {
        *leaves += 1;
        return true;
    };
    if k == 0 {
        *leaves += 1;
        return false;
    }
    if let Some(p) = pendant {
        let w = *g.neighbors(p).iter().find(|&&w| alive[w]).unwrap();
        alive[w] = false;
        sol.push(w);
        let ok = cover_within(g, alive, k - 1, sol, leaves);
        alive[w] = true;
        if !ok {
            sol.pop();
        }
        return ok;
    }
    alive[v] = false;
    sol.push(v);
    if cover_within(g, alive, k - 1, sol, leaves) {
        alive[v] = true;
        return true;
    }
    sol.pop();
    alive[v] = true;
    if dv <= k {
        let nb: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| alive[w]).collect();
        for &w in &nb {
            alive[w] = false;
        }
        let before = sol.len();
        sol.extend(&nb);
        let ok = cover_within(g, alive, k - dv, sol, leaves);
        for &w in &nb {
            alive[w] = true;
        }
        if ok {
            return true;
        }
        sol.truncate(before);
    }
    false
}

pub fn solve_vertex_cover(src: &VCInstance) -> SolveResult {
    let g = &src.graph;
    let mut alive = vec![true; g.n()];
    let mut sol = Vec::new();
    let mut leaves = 0;
    let answer = cover_within(g, &mut alive, src.k, &mut sol, &mut leaves);
    SolveResult {
        answer,
        certificate: answer.then(|| Certificate::cover(sol)),
        branch_count: leaves,
        membership_calls: 0,
    }
}

pub fn min_vertex_cover(g: &Graph) -> Vec<Vertex> {
    (0..=g.n())
        .find_map(|k| {
            let r = solve_vertex_cover(&VCInstance::new(g.clone(), k));
            r.certificate.map(|c| c.vertices)
        })
        .expect("the full vertex set is a cover")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::hereditary::normalize_family;

    fn inst(g: Graph, fam: Vec<Graph>, k: usize) -> PiVDInstance {
        PiVDInstance {
            graph: g,
            k,
            family: normalize_family(fam).unwrap(),
            connected_variant: false,
        }
    }

    fn conn(mut i: PiVDInstance) -> PiVDInstance {
        i.connected_variant = true;
        i
    }

    fn check_yes(i: &PiVDInstance, r: &SolveResult) {
        assert!(r.answer);
        r.certificate.as_ref().unwrap().check(i).unwrap();
    }

    #[test]
    fn bruteforce_examples() {
        let i = inst(p(4), vec![p(3)], 1);
        let r = solve_bruteforce(&i);
        check_yes(&i, &r);
        assert_eq!(r.certificate.unwrap().vertices, vec![1]);
        assert!(!solve_bruteforce(&inst(p(3), vec![p(3)], 0)).answer);
        let i = inst(two_k2(), vec![two_k2()], 1);
        check_yes(&i, &solve_bruteforce(&i));
    }

    #[test]
    fn branching_examples() {
        let tt = k(3).disjoint_union(&k(3));
        let i = inst(tt.clone(), vec![k(3)], 2);
        check_yes(&i, &solve_branching(&i));
        assert!(!solve_branching(&inst(tt, vec![k(3)], 1)).answer);
    }

    #[test]
    fn subexp_examples() {
        let i = inst(c(5), vec![independent(2)], 3);
        check_yes(&i, &solve_subexp(&i, Threshold::Default).unwrap());
        assert!(!solve_subexp(&inst(c(5), vec![independent(2)], 2), Threshold::Default).unwrap().answer);
        let i = inst(independent(3), vec![independent(2)], 2);
        check_yes(&i, &solve_subexp(&i, Threshold::Default).unwrap());
        assert!(!solve_subexp(&inst(independent(3), vec![independent(2)], 1), Threshold::Default).unwrap().answer);
        assert!(matches!(
            solve_subexp(&inst(p(3), vec![p(3)], 1), Threshold::Default),
            Err(Error::Incompatible(_))
        ));
    }

    #[test]
    fn subexp_m_zero_branches() {
        let r = solve_subexp(&inst(independent(5), vec![independent(3)], 3), Threshold::Default).unwrap();
        assert!(r.answer);
        assert!(r.branch_count <= 6);
    }

    #[test]
    fn mindegree_examples() {
        let fam = vec![independent(2)];
        let i = inst(c(5), fam.clone(), 3);
        check_yes(&i, &solve_mindegree(&i, 1));
        assert!(!solve_mindegree(&inst(c(5), fam.clone(), 2), 1).answer);
        let i = inst(k(1), fam.clone(), 0);
        check_yes(&i, &solve_mindegree(&i, 1));
        let i = inst(p(3), fam.clone(), 1);
        check_yes(&i, &solve_mindegree(&i, 1));
        assert!(mindegree_premise_holds(&normalize_family(fam).unwrap(), 1, 6));
        assert!(!mindegree_premise_holds(&normalize_family(vec![p(3)]).unwrap(), 1, 5));
    }

    #[test]
    fn connected_examples() {
        let i = conn(inst(p(4), vec![p(3)], 1));
        check_yes(&i, &solve_connected_bruteforce(&i));
        let tt = k(3).disjoint_union(&k(3));
        assert!(!solve_connected_bruteforce(&conn(inst(tt, vec![k(3)], 2))).answer);
        let i = conn(inst(c(4), vec![k(3)], 0));
        let r = solve_connected_bruteforce(&i);
        check_yes(&i, &r);
        assert!(r.certificate.unwrap().vertices.is_empty());
    }

    #[test]
    fn vertex_cover_examples() {
        assert!(solve_vertex_cover(&VCInstance::new(k(2), 1)).answer);
        assert!(!solve_vertex_cover(&VCInstance::new(k(3), 1)).answer);
        let src = VCInstance::new(k(3), 2);
        let r = solve_vertex_cover(&src);
        r.certificate.unwrap().check_cover(&src).unwrap();
        assert!(solve_vertex_cover(&VCInstance::new(p(4), 2)).answer);
        assert_eq!(min_vertex_cover(&petersen()).len(), 6);
    }

    #[test]
    fn independent_set_listing() {
        assert_eq!(list_small_independent_sets(&k(3), 2), vec![vec![], vec![0], vec![1], vec![2]]);
        assert_eq!(list_small_independent_sets(&independent(2), 2).len(), 3);
        assert_eq!(list_small_independent_sets(&c(5), 3).len(), 11);
    }

    #[test]
    fn threshold_rounding() {
        assert_eq!(default_threshold(0), 0);
        assert_eq!(default_threshold(1), 2);
        assert_eq!(default_threshold(2), 3);
        assert_eq!(default_threshold(4), 4);
        assert_eq!(ceil_sqrt(9.0), 3);
        assert_eq!(ceil_sqrt(10.0), 4);
    }
}
