//! Instance generators and the empirical harness: reduction equivalence
//! against exact oracles, structural audits, lifting and branch counts.

use std::collections::{BTreeMap, HashSet};

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::graph::io::write_graph;
use crate::graph::{canonical_certificate, degeneracy, girth, planar_embedding, Graph};
use crate::hereditary::{CPrimeMode, ForbiddenFamily, GadgetPlan};
use crate::reductions::{
    lift_vertex_cover, plan_for, reduce, subdivide_for_girth, validate_source, Options, Reduction, VCInstance, Variant,
};
use crate::solvers::{
    is_vertex_cover, min_vertex_cover, solve_branching, solve_connected_bruteforce, solve_vertex_cover,
    subexp_log2_bound, SolveResult,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Constraints {
    pub max_degree: Option<usize>,
    pub connected: bool,
    pub planar: bool,
}

impl Constraints {
    pub fn subcubic() -> Self {
        Constraints {
            max_degree: Some(3),
            ..Default::default()
        }
    }
}

/// All graphs with at most `n_max` vertices up to isomorphism, including
/// the empty graph, ordered by order. Bounded degree and planarity are
/// hereditary, so they prune intermediate levels.
pub fn enumerate_graphs(n_max: usize, c: &Constraints) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0)];
    let mut out = if c.connected { vec![] } else { vec![Graph::empty(0)] };
    for n in 1..=n_max {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..1 << (n - 1) {
                if c.max_degree.is_some_and(|d| mask.count_ones() as usize > d) {
                    continue;
                }
                let mut h = g.clone();
                let v = h.add_vertex();
                for u in 0..v {
                    if mask >> u & 1 == 1 {
                        h.add_edge(u, v).unwrap();
                    }
                }
                if c.max_degree.is_some_and(|d| h.max_degree() > d) {
                    continue;
                }
                let cert = canonical_certificate(&h);
                if seen.contains(&cert) {
                    continue;
                }
                if c.planar && !planar_embedding(&h).is_planar() {
                    continue;
                }
                seen.insert(cert);
                next.push(h);
            }
        }
        out.extend(next.iter().filter(|g| !c.connected || g.is_connected()).cloned());
        level = next;
    }
    out
}

/// Random graph with maximum degree 3: edges are offered in random order
/// until a random target count is reached.
pub fn random_subcubic(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    pairs.shuffle(&mut rng);
    let target = rng.gen_range(n / 2..=(3 * n / 2).max(n / 2));
    let mut g = Graph::empty(n);
    for (u, v) in pairs {
        if g.m() >= target {
            break;
        }
        if g.degree(u) < 3 && g.degree(v) < 3 {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Uniform graph with exactly `m` edges.
pub fn random_gnm(n: usize, m: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let chosen: Vec<_> = pairs.choose_multiple(&mut rng, m.min(pairs.len())).copied().collect();
    Graph::from_edges(n, &chosen).unwrap()
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SourceBudget {
    /// Every subcubic source (meeting the variant's constraints) with at
    /// most this many vertices, at every budget.
    pub exhaustive_n: usize,
    /// Random subcubic sources, tested at their optimum and one below.
    pub random: usize,
    pub random_n: (usize, usize),
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub source: String,
    pub k: usize,
    pub seed: Option<u64>,
    pub source_answer: bool,
    pub reduced_answer: bool,
    pub reduced_k: usize,
    pub reduced_n: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Audit {
    pub checked: usize,
    pub failed: usize,
    /// Largest measured value relative to its bound, when one applies.
    pub worst: f64,
}

impl Audit {
    fn record(&mut self, ok: bool, ratio: f64) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
        }
        self.worst = self.worst.max(ratio);
    }

    fn merge(&mut self, o: &Audit) {
        self.checked += o.checked;
        self.failed += o.failed;
        self.worst = self.worst.max(o.worst);
    }

    pub fn pass(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceReport {
    pub family: Vec<String>,
    pub variant: &'static str,
    pub sources_tested: usize,
    pub instances_tested: usize,
    pub yes_instances: usize,
    pub mismatches: Vec<Mismatch>,
    pub audits: BTreeMap<String, Audit>,
    pub seed: u64,
}

impl EquivalenceReport {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty() && self.audits.values().all(Audit::pass)
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct HarnessOptions {
    pub construction: Options,
    /// Also lift every yes certificate (main and planar outputs only).
    pub lifting: bool,
}

/// Source constraints a variant needs beyond subcubic.
fn source_constraints(v: Variant) -> Constraints {
    Constraints {
        max_degree: Some(3),
        planar: matches!(v, Variant::Planar | Variant::PlanarConnected),
        connected: v == Variant::PlanarConnected,
    }
}

struct Prepared {
    original: Graph,
    /// Internal vertices per subdivided edge (0 if the source was used as is).
    t: usize,
    seed: Option<u64>,
}

impl Prepared {
    /// Construction input for budget `k` on the original source.
    fn input(&self, k: usize) -> VCInstance {
        let src = VCInstance::new(self.original.clone(), k);
        if self.t == 0 {
            src
        } else {
            subdivide_for_girth(&src, self.t).unwrap()
        }
    }
}

/// Random sources are always subdivided; enumerated ones only when their
/// girth is below `3d`.
fn prepare(g: Graph, plan: &GadgetPlan, seed: Option<u64>) -> Prepared {
    let t = if seed.is_none() && girth(&g).at_least(3 * plan.d) {
        0
    } else {
        plan.d.next_multiple_of(2)
    };
    Prepared { original: g, t, seed }
}

fn sources(variant: Variant, budget: &SourceBudget) -> Vec<(Graph, Option<u64>)> {
    let c = source_constraints(variant);
    let mut out: Vec<(Graph, Option<u64>)> = enumerate_graphs(budget.exhaustive_n, &c)
        .into_iter()
        .filter(|g| g.n() > 0)
        .map(|g| (g, None))
        .collect();
    let (lo, hi) = budget.random_n;
    let mut seed = budget.seed;
    let mut made = 0;
    while made < budget.random {
        let n = lo + (seed as usize % (hi - lo + 1));
        let g = random_subcubic(n, seed);
        let ok = (!c.planar || planar_embedding(&g).is_planar()) && (!c.connected || g.is_connected());
        if ok {
            out.push((g, Some(seed)));
            made += 1;
        }
        seed += 1;
    }
    out
}

pub fn solve_reduced(r: &Reduction) -> SolveResult {
    if r.instance.connected_variant {
        solve_connected_bruteforce(&r.instance)
    } else {
        solve_branching(&r.instance)
    }
}

struct SourceOutcome {
    instances: usize,
    yes: usize,
    mismatches: Vec<Mismatch>,
    audits: BTreeMap<String, Audit>,
}

fn run_source(variant: Variant, family: &ForbiddenFamily, plan: &GadgetPlan, p: &Prepared, opts: &HarnessOptions) -> SourceOutcome {
    let n = p.original.n();
    let ks: Vec<usize> = match p.seed {
        None => (0..=n).collect(),
        Some(_) => {
            let opt = min_vertex_cover(&p.original).len();
            (opt.saturating_sub(1)..=opt).collect()
        }
    };
    let mut out = SourceOutcome {
        instances: 0,
        yes: 0,
        mismatches: Vec::new(),
        audits: BTreeMap::new(),
    };
    for k in ks {
        let src_answer = solve_vertex_cover(&VCInstance::new(p.original.clone(), k)).answer;
        let input = p.input(k);
        let r = reduce(variant, &input, family, &opts.construction).expect("variant checked up front");
        let res = solve_reduced(&r);
        out.instances += 1;
        if let Some(cert) = &res.certificate {
            cert.check(&r.instance).expect("solver certificate must re-validate");
        }
        if res.answer != src_answer {
            out.mismatches.push(Mismatch {
                source: write_graph(&p.original),
                k,
                seed: p.seed,
                source_answer: src_answer,
                reduced_answer: res.answer,
                reduced_k: r.instance.k,
                reduced_n: r.instance.graph.n(),
            });
        }
        let s = structural_audit(variant, &r, &input, plan, opts.construction.c_prime_mode);
        s.record_into(&mut out.audits);
        if res.answer {
            out.yes += 1;
            if opts.lifting && matches!(variant, Variant::Main | Variant::Planar) {
                let ok = lift_and_complete(&res, &r, &input).is_some();
                out.audits.entry("lifting".into()).or_default().record(ok, 0.0);
            }
        }
    }
    out
}

/// Runs every source through the variant and compares yes/no answers with
/// the source vertex cover oracle.
pub fn check_equivalence(
    variant: Variant,
    family: &ForbiddenFamily,
    budget: &SourceBudget,
    opts: &HarnessOptions,
) -> Result<EquivalenceReport> {
    let plan = plan_for(variant, family, opts.construction.c_prime_mode)?;
    let srcs = sources(variant, budget);
    let prepared: Vec<Prepared> = srcs.into_iter().map(|(g, s)| prepare(g, &plan, s)).collect();
    let outcomes: Vec<SourceOutcome> = prepared
        .par_iter()
        .map(|p| run_source(variant, family, &plan, p, opts))
        .collect();
    let mut report = EquivalenceReport {
        family: family.members().iter().map(write_graph).collect(),
        variant: variant.name(),
        sources_tested: prepared.len(),
        instances_tested: 0,
        yes_instances: 0,
        mismatches: Vec::new(),
        audits: BTreeMap::new(),
        seed: budget.seed,
    };
    for o in outcomes {
        report.instances_tested += o.instances;
        report.yes_instances += o.yes;
        report.mismatches.extend(o.mismatches);
        for (name, a) in o.audits {
            report.audits.entry(name).or_default().merge(&a);
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct StructuralReport {
    pub max_degree: usize,
    pub degree_bound: Option<usize>,
    pub degeneracy: usize,
    pub degeneracy_bound: Option<usize>,
    pub planar: Option<bool>,
    pub universal_vertex: Option<bool>,
    pub source_valid: bool,
    pub vertex_ratio: f64,
    pub edge_ratio: f64,
}

impl StructuralReport {
    pub fn pass(&self) -> bool {
        self.degree_bound.map_or(true, |b| self.max_degree <= b)
            && self.degeneracy_bound.map_or(true, |b| self.degeneracy <= b)
            && self.planar != Some(false)
            && self.universal_vertex != Some(false)
    }

    fn record_into(&self, audits: &mut BTreeMap<String, Audit>) {
        if let Some(b) = self.degree_bound {
            audits
                .entry("max_degree".into())
                .or_default()
                .record(self.max_degree <= b, self.max_degree as f64 / b.max(1) as f64);
        }
        if let Some(b) = self.degeneracy_bound {
            audits
                .entry("degeneracy".into())
                .or_default()
                .record(self.degeneracy <= b, self.degeneracy as f64 / b.max(1) as f64);
        }
        if let Some(p) = self.planar {
            audits.entry("planar".into()).or_default().record(p, 0.0);
        }
        if let Some(u) = self.universal_vertex {
            audits.entry("universal_vertex".into()).or_default().record(u, 0.0);
        }
    }
}

/// Measures the output against the guarantees of its variant. Degree and
/// degeneracy bounds apply only when the construction input is a valid
/// source.
pub fn structural_audit(
    variant: Variant,
    r: &Reduction,
    input: &VCInstance,
    plan: &GadgetPlan,
    mode: CPrimeMode,
) -> StructuralReport {
    let g = &r.instance.graph;
    let n = input.graph.n().max(1) as f64;
    let valid = validate_source(input, plan.d).ok();
    let delta = plan.delta_max_degree;
    let degree_bound = match variant {
        Variant::Main | Variant::Planar if valid => Some(3 * delta),
        Variant::Connected if valid => Some(3 * delta + 1),
        _ => None,
    };
    let degeneracy_bound = match variant {
        Variant::Main | Variant::Planar if valid && mode == CPrimeMode::Degeneracy => Some(plan.delta_degeneracy + 1),
        _ => None,
    };
    StructuralReport {
        max_degree: g.max_degree(),
        degree_bound,
        degeneracy: degeneracy(g).0,
        degeneracy_bound,
        planar: matches!(variant, Variant::Planar | Variant::PlanarConnected).then(|| planar_embedding(g).is_planar()),
        universal_vertex: (variant == Variant::Dominating).then(|| g.universal_vertex().is_some()),
        source_valid: valid,
        vertex_ratio: g.n() as f64 / n,
        edge_ratio: g.m() as f64 / n,
    }
}

/// Analytic bounds on `|V′|/|V|` and `|E′|/|V|` for the main construction on
/// subcubic sources.
pub fn size_constants(plan: &GadgetPlan) -> (f64, f64) {
    let rest_v: usize = plan.rest.iter().map(Graph::n).sum();
    let rest_e: usize = plan.rest.iter().map(Graph::m).sum();
    let h1 = (plan.d - 1) as f64;
    let cv = 2.0 * rest_v as f64 + h1 * plan.h1.n() as f64 + 1.0 + 1.5 * (plan.j.n() - 2) as f64 + (plan.d_graph.n() - 1) as f64;
    let ce = 2.0 * rest_e as f64 + h1 * plan.h1.m() as f64 + 1.5 * plan.j.m() as f64 + plan.d_graph.m() as f64;
    (cv, ce)
}

/// Lifts a yes certificate of a main-construction output and completes it with
/// an optimal cover of the residual source graph. Returns the final cover
/// when it is within budget.
pub fn lift_and_complete(res: &SolveResult, r: &Reduction, src: &VCInstance) -> Option<Vec<usize>> {
    let cert = res.certificate.as_ref()?;
    let lifted = lift_vertex_cover(cert, r, src).ok()?;
    let g = &src.graph;
    let residual = g.remove_vertices(&lifted.vertices);
    let keep: Vec<usize> = g.vertices().filter(|v| !lifted.vertices.contains(v)).collect();
    let mut cover = lifted.vertices.clone();
    cover.extend(min_vertex_cover(&residual).into_iter().map(|i| keep[i]));
    cover.sort_unstable();
    (cover.len() <= src.k && is_vertex_cover(g, &cover)).then_some(cover)
}

#[derive(Clone, Debug, Serialize)]
pub struct LiftingReport {
    pub yes_instances: usize,
    pub failures: Vec<Mismatch>,
}

/// Lifting check on main-construction outputs for every yes instance.
pub fn check_lifting(family: &ForbiddenFamily, budget: &SourceBudget, opts: &Options) -> Result<LiftingReport> {
    let plan = plan_for(Variant::Main, family, opts.c_prime_mode)?;
    let prepared: Vec<Prepared> = sources(Variant::Main, budget)
        .into_iter()
        .map(|(g, s)| prepare(g, &plan, s))
        .collect();
    let per: Vec<(usize, Vec<Mismatch>)> = prepared
        .par_iter()
        .map(|p| {
            let mut yes = 0;
            let mut fails = Vec::new();
            for k in 0..=p.original.n() {
                let input = p.input(k);
                let r = reduce(Variant::Main, &input, family, opts).unwrap();
                let res = solve_branching(&r.instance);
                if !res.answer {
                    continue;
                }
                yes += 1;
                if lift_and_complete(&res, &r, &input).is_none() {
                    fails.push(Mismatch {
                        source: write_graph(&p.original),
                        k,
                        seed: p.seed,
                        source_answer: true,
                        reduced_answer: true,
                        reduced_k: r.instance.k,
                        reduced_n: r.instance.graph.n(),
                    });
                }
            }
            (yes, fails)
        })
        .collect();
    Ok(LiftingReport {
        yes_instances: per.iter().map(|p| p.0).sum(),
        failures: per.into_iter().flat_map(|p| p.1).collect(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BranchRun {
    pub n: usize,
    pub m: usize,
    pub branch_count: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BranchAudit {
    pub runs: usize,
    pub within_bound: usize,
    /// Largest `log2(branch_count) − log2(bound)`.
    pub max_log_ratio: f64,
}

impl BranchAudit {
    pub fn pass(&self) -> bool {
        self.within_bound == self.runs
    }
}

pub fn branch_count_audit(runs: &[BranchRun], d_is: usize) -> BranchAudit {
    let mut within = 0;
    let mut worst = f64::NEG_INFINITY;
    for r in runs {
        let diff = (r.branch_count.max(1) as f64).log2() - subexp_log2_bound(r.n, r.m, d_is);
        if diff <= 1e-9 {
            within += 1;
        }
        worst = worst.max(diff);
    }
    BranchAudit {
        runs: runs.len(),
        within_bound: within,
        max_log_ratio: worst,
    }
}
