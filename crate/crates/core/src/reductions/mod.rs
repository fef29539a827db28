//! Instance transformations from vertex cover to Π-vertex deletion, each
//! returning the reduced instance together with per-vertex provenance.

mod lift;
mod variants;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{degeneracy, girth, Girth, Graph, Vertex};
use crate::hereditary::{ForbiddenFamily, GadgetPlan};
use crate::solvers::solve_vertex_cover;

pub use lift::lift_vertex_cover;
pub use variants::{
    complement_construction, connected_complement_construction, connected_tree_construction, detect_case1,
    dominating_vertex_construction, planar_connected_construction, planar_construction, plan_for, reduce,
    Variant,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VCInstance {
    pub graph: Graph,
    pub k: usize,
}

impl VCInstance {
    /// Budgets above `n` are clamped to `n`.
    pub fn new(graph: Graph, k: usize) -> Self {
        let k = k.min(graph.n());
        VCInstance { graph, k }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PiVDInstance {
    pub graph: Graph,
    pub k: usize,
    pub family: ForbiddenFamily,
    pub connected_variant: bool,
}

impl PiVDInstance {
    pub fn new(graph: Graph, k: usize, family: ForbiddenFamily) -> Self {
        PiVDInstance { graph, k, family, connected_variant: false }
    }
}

/// Where an output vertex came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Origin {
    Original(Vertex),
    /// Isolated vertex added to round the source order up to a power of two.
    Padding(Vertex),
    JCopy { edge: (Vertex, Vertex), index: Vertex },
    DCopy { vertex: Vertex, index: Vertex },
    Base { component: usize, copy: usize, index: Vertex },
    TreeVertex { level: usize, position: usize },
    TreeAttachment { tree_vertex: usize, index: Vertex },
    FaceVertex(usize),
    FaceAttachment { face: usize, index: Vertex },
    UniversalVertex,
    WitnessVertex(usize),
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::Original(v) => write!(f, "v{v}"),
            Origin::Padding(v) => write!(f, "pad{v}"),
            Origin::JCopy { edge: (u, v), index } => write!(f, "J[{u},{v}].{index}"),
            Origin::DCopy { vertex, index } => write!(f, "D[{vertex}].{index}"),
            Origin::Base { component, copy, index } => write!(f, "B{component}.{copy}.{index}"),
            Origin::TreeVertex { level, position } => write!(f, "T{level}.{position}"),
            Origin::TreeAttachment { tree_vertex, index } => write!(f, "TA{tree_vertex}.{index}"),
            Origin::FaceVertex(face) => write!(f, "F{face}"),
            Origin::FaceAttachment { face, index } => write!(f, "FA{face}.{index}"),
            Origin::UniversalVertex => f.write_str("v*"),
            Origin::WitnessVertex(i) => write!(f, "I{i}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub origin: Vec<Origin>,
}

impl Provenance {
    pub fn labels(&self) -> Vec<String> {
        self.origin.iter().map(ToString::to_string).collect()
    }

    /// Output vertex carrying `Original(v)`, indexed by source vertex.
    pub fn originals(&self, n: usize) -> Vec<Option<Vertex>> {
        let mut out = vec![None; n];
        for (x, o) in self.origin.iter().enumerate() {
            if let Origin::Original(v) | Origin::Padding(v) = *o {
                if v < n {
                    out[v] = Some(x);
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Reduction {
    pub instance: PiVDInstance,
    pub provenance: Provenance,
    /// Gadget graph decomposition the construction used.
    pub plan: Option<GadgetPlan>,
    /// Case-1 witness of the dominating-vertex construction.
    pub witness: Option<Graph>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum SmallSourcePolicy {
    /// Always build the gadget graph.
    #[default]
    Construct,
    /// Sources with at most `|V(H_Π)|` vertices are solved directly and
    /// mapped to the empty graph (yes) or `H_Π` (no), both with budget 0.
    Shortcut,
}

/// Deliberate construction bugs for mutation testing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Mutation {
    DropBase,
    WrongBudget,
    /// `c′` is not identified with the second endpoint.
    WrongCPrime,
}

#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct Options {
    pub small_source: SmallSourcePolicy,
    pub mutation: Option<Mutation>,
    pub c_prime_mode: crate::hereditary::CPrimeMode,
    /// Component order cap for the Case-1 witness search.
    pub witness_cap: Option<usize>,
}

/// Incrementally built output graph with a tag per vertex.
pub(crate) struct Builder {
    pub graph: Graph,
    pub origin: Vec<Origin>,
}

impl Builder {
    pub fn new() -> Self {
        Builder {
            graph: Graph::empty(0),
            origin: Vec::new(),
        }
    }

    pub fn add(&mut self, tag: Origin) -> Vertex {
        self.origin.push(tag);
        self.graph.add_vertex()
    }

    pub fn edge(&mut self, u: Vertex, v: Vertex) {
        self.graph.add_edge(u, v).expect("builder edges are in range");
    }

    /// Adds a copy of `h`; vertex `i` of `h` maps to `fixed(i)` when given,
    /// otherwise to a fresh vertex tagged `tag(i)`.
    pub fn copy(
        &mut self,
        h: &Graph,
        fixed: impl Fn(Vertex) -> Option<Vertex>,
        tag: impl Fn(Vertex) -> Origin,
    ) -> Vec<Vertex> {
        let map: Vec<Vertex> = h
            .vertices()
            .map(|i| fixed(i).unwrap_or_else(|| self.add(tag(i))))
            .collect();
        for (a, b) in h.edges() {
            self.edge(map[a], map[b]);
        }
        map
    }

    pub fn finish(self) -> (Graph, Provenance) {
        (self.graph, Provenance { origin: self.origin })
    }
}

/// Replaces every edge by a path with `d` internal vertices (`d` rounded up
/// to even) and raises the budget by `d/2` per edge.
pub fn subdivide_for_girth(src: &VCInstance, d: usize) -> Result<VCInstance> {
    let g = &src.graph;
    if g.max_degree() > 3 {
        return Err(Error::NotSubcubic(g.max_degree()));
    }
    let t = d.max(1).next_multiple_of(2);
    let edges = g.edges();
    let mut out = Graph::empty(g.n() + t * edges.len());
    let mut next = g.n();
    for &(u, v) in &edges {
        let mut prev = u;
        for _ in 0..t {
            out.add_edge(prev, next)?;
            prev = next;
            next += 1;
        }
        out.add_edge(prev, v)?;
    }
    Ok(VCInstance::new(out, src.k + t / 2 * edges.len()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SourceReport {
    pub max_degree: usize,
    pub degeneracy: usize,
    pub girth: Girth,
    pub required_girth: usize,
    pub subcubic: bool,
    pub two_degenerate: bool,
    pub girth_ok: bool,
}

impl SourceReport {
    pub fn ok(&self) -> bool {
        self.subcubic && self.two_degenerate && self.girth_ok
    }
}

/// Checks the source requirements of the main construction for gadget multiplicity
/// `d`: subcubic, 2-degenerate, girth at least `3d`.
pub fn validate_source(src: &VCInstance, d: usize) -> SourceReport {
    let g = &src.graph;
    let max_degree = g.max_degree();
    let degeneracy = degeneracy(g).0;
    let girth = girth(g);
    SourceReport {
        max_degree,
        degeneracy,
        girth,
        required_girth: 3 * d,
        subcubic: max_degree <= 3,
        two_degenerate: degeneracy <= 2,
        girth_ok: girth.at_least(3 * d),
    }
}

pub fn main_construction(
    src: &VCInstance,
    family: &ForbiddenFamily,
    plan: &GadgetPlan,
    opts: &Options,
) -> Result<Reduction> {
    let h1_copies = plan.d - 1;
    if opts.small_source == SmallSourcePolicy::Shortcut && src.graph.n() <= plan.h_pi.n() {
        return Ok(shortcut(src, family, plan));
    }
    let b = build_main(&src.graph, plan, h1_copies, opts.mutation);
    let (graph, provenance) = b.finish();
    let k = if opts.mutation == Some(Mutation::WrongBudget) { src.k + 1 } else { src.k };
    Ok(Reduction {
        instance: PiVDInstance {
            graph,
            k,
            family: family.clone(),
            connected_variant: false,
        },
        provenance,
        plan: Some(plan.clone()),
        witness: None,
    })
}

fn shortcut(src: &VCInstance, family: &ForbiddenFamily, plan: &GadgetPlan) -> Reduction {
    let yes = solve_vertex_cover(src).answer;
    let (graph, origin) = if yes {
        (Graph::empty(0), Vec::new())
    } else {
        let h = plan.h_pi.clone();
        let origin = h
            .vertices()
            .map(|index| Origin::Base { component: 0, copy: 0, index })
            .collect();
        (h, origin)
    };
    Reduction {
        instance: PiVDInstance {
            graph,
            k: 0,
            family: family.clone(),
            connected_variant: false,
        },
        provenance: Provenance { origin },
        plan: Some(plan.clone()),
        witness: None,
    }
}

/// Base graph, originals, edge gadgets and vertex attachments, in that order.
pub(crate) fn build_main(g: &Graph, plan: &GadgetPlan, h1_copies: usize, mutation: Option<Mutation>) -> Builder {
    let n = g.n();
    let mut b = Builder::new();
    if mutation != Some(Mutation::DropBase) {
        for (component, h) in plan.rest.iter().enumerate() {
            for copy in 0..2 * n {
                b.copy(h, |_| None, |index| Origin::Base { component, copy, index });
            }
        }
        let component = plan.rest.len();
        for copy in 0..h1_copies {
            b.copy(&plan.h1, |_| None, |index| Origin::Base { component, copy, index });
        }
    }
    let orig: Vec<Vertex> = (0..n).map(|v| b.add(Origin::Original(v))).collect();
    let wrong_c_prime = mutation == Some(Mutation::WrongCPrime);
    for (u, v) in g.edges() {
        b.copy(
            &plan.j,
            |i| {
                if i == plan.c_in_j {
                    Some(orig[u])
                } else if i == plan.c_prime_in_j && !wrong_c_prime {
                    Some(orig[v])
                } else {
                    None
                }
            },
            |index| Origin::JCopy { edge: (u, v), index },
        );
    }
    for v in 0..n {
        attach_d(&mut b, plan, orig[v], v);
    }
    b
}

fn attach_d(b: &mut Builder, plan: &GadgetPlan, at: Vertex, vertex: Vertex) {
    b.copy(
        &plan.d_graph,
        |i| (i == plan.c_in_d).then_some(at),
        |index| Origin::DCopy { vertex, index },
    );
}

/// Attaches a copy of `H_1` at its vertex `c` to `at`.
pub(crate) fn attach_h1(b: &mut Builder, plan: &GadgetPlan, at: Vertex, tag: impl Fn(Vertex) -> Origin) {
    b.copy(&plan.h1, |i| (i == plan.c).then_some(at), tag);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;
    use crate::graph::named::*;
    use crate::hereditary::{build_gadget_plan, normalize_family, select_h_pi, CPrimeMode};

    fn setup(gs: Vec<Graph>) -> (ForbiddenFamily, GadgetPlan) {
        let f = normalize_family(gs).unwrap();
        let h = select_h_pi(&f, false).unwrap();
        let plan = build_gadget_plan(&h, CPrimeMode::Degeneracy).unwrap();
        (f, plan)
    }

    #[test]
    fn subdivision_examples() {
        let s = subdivide_for_girth(&VCInstance::new(k(2), 1), 2).unwrap();
        assert!(is_isomorphic(&s.graph, &p(4)));
        assert_eq!(s.k, 2);
        let s = subdivide_for_girth(&VCInstance::new(k(3), 2), 4).unwrap();
        assert_eq!(s.graph.n(), 15);
        assert_eq!(s.k, 8);
        let s = subdivide_for_girth(&VCInstance::new(k(3), 1), 3).unwrap();
        assert_eq!(s.graph.n(), 15);
        assert_eq!(s.k, 7);
        assert!(matches!(
            subdivide_for_girth(&VCInstance::new(k(5), 1), 2),
            Err(Error::NotSubcubic(4))
        ));
    }

    #[test]
    fn validation_examples() {
        let s = subdivide_for_girth(&VCInstance::new(k(4), 2), 2).unwrap();
        assert!(validate_source(&s, 2).ok());
        let r = validate_source(&VCInstance::new(k(4), 2), 1);
        assert!(r.subcubic && !r.two_degenerate && r.girth_ok);
        let r = validate_source(&VCInstance::new(c(4), 2), 2);
        assert!(!r.girth_ok);
        assert!(r.subcubic && r.two_degenerate);
    }

    #[test]
    fn budget_is_clamped() {
        assert_eq!(VCInstance::new(k(3), 10).k, 3);
    }

    #[test]
    fn main_examples() {
        let (f, plan) = setup(vec![p(3)]);
        let r = main_construction(&VCInstance::new(k(2), 1), &f, &plan, &Options::default()).unwrap();
        assert!(is_isomorphic(&r.instance.graph, &p(4)));
        assert_eq!(r.instance.k, 1);

        let (f, plan) = setup(vec![two_k2()]);
        for k in [0, 1] {
            let r = main_construction(&VCInstance::new(k2(), k), &f, &plan, &Options::default()).unwrap();
            assert!(is_isomorphic(&r.instance.graph, &two_k2()));
            assert_eq!(r.instance.k, k);
        }
    }

    fn k2() -> Graph {
        k(2)
    }

    #[test]
    fn layout_and_provenance() {
        let (f, plan) = setup(vec![co_diamond(), co_claw()]);
        let src = VCInstance::new(p(3), 1);
        let r = main_construction(&src, &f, &plan, &Options::default()).unwrap();
        let o = &r.provenance.origin;
        assert_eq!(o.len(), r.instance.graph.n());
        // two K1 components, 2|V| copies each, come first
        assert!(o[..12].iter().all(|t| matches!(t, Origin::Base { .. })));
        assert_eq!(o[12], Origin::Original(0));
        let originals: Vec<_> = r.provenance.originals(3);
        assert!(originals.iter().all(Option::is_some));
    }

    #[test]
    fn shortcut_policy() {
        let (f, plan) = setup(vec![p(3)]);
        let opts = Options {
            small_source: SmallSourcePolicy::Shortcut,
            ..Options::default()
        };
        let r = main_construction(&VCInstance::new(k(2), 1), &f, &plan, &opts).unwrap();
        assert_eq!(r.instance.graph.n(), 0);
        let r = main_construction(&VCInstance::new(k(2), 0), &f, &plan, &opts).unwrap();
        assert!(is_isomorphic(&r.instance.graph, &p(3)));
        assert_eq!(r.instance.k, 0);
    }

    #[test]
    fn mutations_change_output() {
        let (f, plan) = setup(vec![two_k2()]);
        let src = VCInstance::new(p(3), 1);
        let with = |m| {
            let opts = Options { mutation: Some(m), ..Options::default() };
            main_construction(&src, &f, &plan, &opts).unwrap().instance
        };
        assert_eq!(with(Mutation::DropBase).graph.n(), 3);
        assert_eq!(with(Mutation::WrongBudget).k, 2);
        assert_eq!(with(Mutation::WrongCPrime).graph.n(), 7);
    }
}
