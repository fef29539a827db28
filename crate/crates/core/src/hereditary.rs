//! Hereditary properties given by finite forbidden induced subgraph
//! families: α- and Γ-sequences, selection of the gadget graph and its
//! decomposition into the pieces used by the reductions.

use std::cmp::Reverse;

use log::warn;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{canonical_certificate, degeneracy, is_isomorphic, planar_embedding, Graph, Matcher, Vertex};

/// Pairwise non-isomorphic, minimal family of non-empty graphs, ordered by
/// Γ-sequence.
#[derive(Clone, Debug)]
pub struct ForbiddenFamily {
    members: Vec<Graph>,
    matchers: Vec<Matcher>,
    contains_k1: bool,
}

impl ForbiddenFamily {
    pub fn members(&self) -> &[Graph] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// K1 is a member: only the empty graph has the property.
    pub fn contains_k1(&self) -> bool {
        self.contains_k1
    }

    pub fn max_order(&self) -> usize {
        self.members.iter().map(Graph::n).max().unwrap_or(0)
    }

    pub fn all_connected(&self) -> bool {
        self.members.iter().all(Graph::is_connected)
    }

    /// Some member occurring induced in the live part of `g`, as
    /// `(member index, embedding)`.
    pub fn find(&self, g: &Graph, alive: Option<&[bool]>) -> Option<(usize, Vec<Vertex>)> {
        self.matchers
            .iter()
            .enumerate()
            .find_map(|(i, m)| m.find(g, alive).map(|phi| (i, phi)))
    }
}

impl Serialize for ForbiddenFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.members.serialize(s)
    }
}

pub fn normalize_family(graphs: Vec<Graph>) -> Result<ForbiddenFamily> {
    if let Some(i) = graphs.iter().position(|g| g.n() == 0) {
        return Err(Error::EmptyMember(i));
    }
    let mut keyed: Vec<(Vec<u8>, Graph)> = Vec::new();
    for g in graphs {
        let cert = canonical_certificate(&g);
        if !keyed.iter().any(|(c, _)| *c == cert) {
            keyed.push((cert, g));
        }
    }
    let all: Vec<Graph> = keyed.into_iter().map(|(_, g)| g).collect();
    let mut members: Vec<Graph> = all
        .iter()
        .enumerate()
        .filter(|&(i, g)| {
            !all.iter().enumerate().any(|(j, h)| {
                j != i && h.n() <= g.n() && Matcher::new(h).find(g, None).is_some()
            })
        })
        .map(|(_, g)| g.clone())
        .collect();
    members.sort_by_cached_key(gamma_sequence);
    let contains_k1 = members.iter().any(|g| g.n() == 1);
    if contains_k1 {
        warn!("K1 is a forbidden graph; only the empty graph has this property");
    }
    Ok(ForbiddenFamily {
        matchers: members.iter().map(Matcher::new).collect(),
        members,
        contains_k1,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "tag")]
pub enum PropertyClass {
    ContainsAllIndependentSets,
    ExcludesIndependentSet { d_is: usize },
}

pub fn classify(family: &ForbiddenFamily) -> PropertyClass {
    match family.members.iter().filter(|g| g.is_edgeless()).map(Graph::n).min() {
        Some(d_is) => PropertyClass::ExcludesIndependentSet { d_is },
        None => PropertyClass::ContainsAllIndependentSets,
    }
}

/// Non-increasing component orders of `h - c`.
pub type AlphaSequence = Vec<usize>;

fn alpha_at(h: &Graph, c: Vertex) -> AlphaSequence {
    let rest = h.remove_vertices(&[c]);
    let mut sizes: Vec<usize> = rest.connected_components().iter().map(Vec::len).collect();
    sizes.sort_unstable_by_key(|&s| Reverse(s));
    sizes
}

/// Lexicographically smallest α(h, c) over all `c`, with the smallest
/// optimal `c`.
pub fn alpha_sequence(h: &Graph) -> Result<(AlphaSequence, Vertex)> {
    if h.n() == 0 {
        return Err(Error::Invalid("α-sequence of the empty graph".into()));
    }
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut best: Option<(AlphaSequence, Vertex)> = None;
    for c in h.vertices() {
        let a = alpha_at(h, c);
        if best.as_ref().map_or(true, |(b, _)| a < *b) {
            best = Some((a, c));
        }
    }
    Ok(best.unwrap())
}

/// Total order on connected graphs refining the α-sequence order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GammaKey {
    pub alpha: AlphaSequence,
    pub cert: Vec<u8>,
}

pub fn gamma_key(h: &Graph) -> Result<GammaKey> {
    let (alpha, _) = alpha_sequence(h)?;
    Ok(GammaKey {
        alpha,
        cert: canonical_certificate(h),
    })
}

/// Component keys in non-increasing order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GammaSequence(pub Vec<GammaKey>);

pub fn gamma_sequence(h: &Graph) -> GammaSequence {
    let mut keys: Vec<GammaKey> = h
        .connected_components()
        .iter()
        .map(|comp| gamma_key(&h.induced_subgraph(comp).unwrap()).unwrap())
        .collect();
    keys.sort_unstable_by(|a, b| b.cmp(a));
    GammaSequence(keys)
}

pub fn select_h_pi(family: &ForbiddenFamily, planar_only: bool) -> Result<Graph> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    family
        .members
        .iter()
        .filter(|g| !planar_only || planar_embedding(g).is_planar())
        .min_by_key(|g| gamma_sequence(g))
        .cloned()
        .ok_or(Error::NoPlanarMember)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum CPrimeMode {
    /// Last vertex other than `c` in a degeneracy ordering of `J`.
    #[default]
    Degeneracy,
    /// Smallest vertex of `J` other than `c`.
    Arbitrary,
}

/// Decomposition of the gadget graph. Vertex ids in `j_vertices` and
/// `d_vertices` refer to `h1`; `j` and `d_graph` are the induced subgraphs
/// on those sorted sets, so local ids are positions in them.
#[derive(Clone, Debug, Serialize)]
pub struct GadgetPlan {
    pub h_pi: Graph,
    pub h1: Graph,
    pub d: usize,
    /// Components of `h_pi` not isomorphic to `h1`, one entry per instance.
    pub rest: Vec<Graph>,
    pub c: Vertex,
    pub j: Graph,
    pub j_vertices: Vec<Vertex>,
    pub c_in_j: Vertex,
    pub c_prime_in_j: Vertex,
    pub c_prime: Vertex,
    pub d_graph: Graph,
    pub d_vertices: Vec<Vertex>,
    pub c_in_d: Vertex,
    pub delta_max_degree: usize,
    pub delta_degeneracy: usize,
    pub c_prime_mode: CPrimeMode,
}

pub fn build_gadget_plan(h_pi: &Graph, mode: CPrimeMode) -> Result<GadgetPlan> {
    if h_pi.is_edgeless() {
        return Err(Error::EdgelessGadget);
    }
    let comps: Vec<Graph> = h_pi
        .connected_components()
        .iter()
        .map(|c| h_pi.induced_subgraph(c).unwrap())
        .collect();
    let keys: Vec<GammaKey> = comps.iter().map(|g| gamma_key(g).unwrap()).collect();
    let top = keys.iter().max().unwrap().clone();
    let h1 = comps[keys.iter().position(|k| *k == top).unwrap()].clone();
    let d = keys.iter().filter(|k| **k == top).count();
    let rest = comps
        .iter()
        .zip(&keys)
        .filter(|(_, k)| **k != top)
        .map(|(g, _)| g.clone())
        .collect();

    let (_, c) = alpha_sequence(&h1)?;
    let without_c: Vec<Vertex> = h1.vertices().filter(|&v| v != c).collect();
    let rest_h = h1.induced_subgraph(&without_c)?;
    let j_prime = rest_h
        .connected_components()
        .into_iter()
        .map(|comp| {
            let ids: Vec<Vertex> = comp.iter().map(|&i| without_c[i]).collect();
            let key = gamma_key(&rest_h.induced_subgraph(&comp).unwrap()).unwrap();
            (Reverse(comp.len()), key, ids)
        })
        .min()
        .map(|(_, _, ids)| ids)
        .expect("h1 has an edge, so h1 - c is non-empty");

    let mut j_vertices = j_prime.clone();
    j_vertices.push(c);
    j_vertices.sort_unstable();
    let j = h1.induced_subgraph(&j_vertices)?;
    let c_in_j = j_vertices.binary_search(&c).unwrap();
    let c_prime_in_j = match mode {
        CPrimeMode::Degeneracy => *degeneracy(&j).1.iter().rev().find(|&&v| v != c_in_j).unwrap(),
        CPrimeMode::Arbitrary => j.vertices().find(|&v| v != c_in_j).unwrap(),
    };
    let d_vertices: Vec<Vertex> = h1.vertices().filter(|v| !j_prime.contains(v)).collect();
    let d_graph = h1.induced_subgraph(&d_vertices)?;
    let c_in_d = d_vertices.binary_search(&c).unwrap();

    Ok(GadgetPlan {
        h_pi: h_pi.clone(),
        delta_max_degree: h_pi.max_degree(),
        delta_degeneracy: degeneracy(h_pi).0,
        h1,
        d,
        rest,
        c,
        c_prime: j_vertices[c_prime_in_j],
        j,
        j_vertices,
        c_in_j,
        c_prime_in_j,
        d_graph,
        d_vertices,
        c_in_d,
        c_prime_mode: mode,
    })
}

/// `None` when `g` has the property, else a member index and an embedding.
pub fn membership(g: &Graph, family: &ForbiddenFamily) -> Option<(usize, Vec<Vertex>)> {
    family.find(g, None)
}

pub fn is_member(g: &Graph, family: &ForbiddenFamily) -> bool {
    family.find(g, None).is_none()
}

pub fn complement_family(family: &ForbiddenFamily) -> ForbiddenFamily {
    let comp = normalize_family(family.members.iter().map(Graph::complement).collect())
        .expect("complements of non-empty graphs are non-empty");
    assert_eq!(comp.len(), family.len(), "complementation must preserve minimality");
    comp
}

/// Whether two families consist of the same graphs up to isomorphism.
pub fn same_family(a: &ForbiddenFamily, b: &ForbiddenFamily) -> bool {
    a.len() == b.len() && a.members.iter().zip(&b.members).all(|(x, y)| is_isomorphic(x, y))
}
