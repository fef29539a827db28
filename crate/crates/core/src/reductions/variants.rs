use itertools::Itertools;
use serde::Serialize;

use super::{attach_h1, build_main, main_construction, Builder, Mutation, Options, Origin, PiVDInstance, Reduction, VCInstance};
use crate::error::{Error, Result};
use crate::graph::{planar_embedding, Graph, Vertex};
use crate::hereditary::{
    build_gadget_plan, classify, complement_family, gamma_key, gamma_sequence, is_member, select_h_pi, CPrimeMode,
    ForbiddenFamily, GadgetPlan, PropertyClass,
};
use crate::verify::{enumerate_graphs, Constraints};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Variant {
    Main,
    Complement,
    Connected,
    ConnectedComplement,
    Planar,
    PlanarConnected,
    Dominating,
}

impl Variant {
    pub const ALL: [Variant; 7] = [
        Variant::Main,
        Variant::Complement,
        Variant::Connected,
        Variant::ConnectedComplement,
        Variant::Planar,
        Variant::PlanarConnected,
        Variant::Dominating,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Main => "main",
            Variant::Complement => "complement",
            Variant::Connected => "connected",
            Variant::ConnectedComplement => "connected-complement",
            Variant::Planar => "planar",
            Variant::PlanarConnected => "planar-connected",
            Variant::Dominating => "dominating",
        }
    }

    pub fn from_name(s: &str) -> Option<Variant> {
        Variant::ALL.into_iter().find(|v| v.name() == s)
    }

    pub fn is_connected(self) -> bool {
        matches!(self, Variant::Connected | Variant::ConnectedComplement | Variant::PlanarConnected)
    }

    pub fn is_complement(self) -> bool {
        matches!(self, Variant::Complement | Variant::ConnectedComplement)
    }

    /// Whether the variant applies to `family`; complement variants need an
    /// edgeless member, the rest need none.
    pub fn check_family(self, family: &ForbiddenFamily) -> Result<()> {
        let excludes = matches!(classify(family), PropertyClass::ExcludesIndependentSet { .. });
        match (self.is_complement(), excludes) {
            (true, false) => Err(Error::Incompatible(format!(
                "{} needs a family with an edgeless member; use a non-complement variant",
                self.name()
            ))),
            (false, true) => Err(Error::Incompatible(format!(
                "{} needs a family without edgeless members; use complement or connected-complement",
                self.name()
            ))),
            _ => Ok(()),
        }
    }
}

/// Gadget plan the variant builds from: complement variants plan on the
/// complement family, planar variants on planar members only.
pub fn plan_for(variant: Variant, family: &ForbiddenFamily, mode: CPrimeMode) -> Result<GadgetPlan> {
    variant.check_family(family)?;
    let h = match variant {
        Variant::Complement | Variant::ConnectedComplement => select_h_pi(&complement_family(family), false)?,
        Variant::Planar | Variant::PlanarConnected => select_h_pi(family, true)?,
        _ => select_h_pi(family, false)?,
    };
    build_gadget_plan(&h, mode)
}

pub fn reduce(variant: Variant, src: &VCInstance, family: &ForbiddenFamily, opts: &Options) -> Result<Reduction> {
    let plan = plan_for(variant, family, opts.c_prime_mode)?;
    match variant {
        Variant::Main => main_construction(src, family, &plan, opts),
        Variant::Complement => complement_construction(src, family, opts),
        Variant::Connected => connected_tree_construction(src, family, &plan, opts),
        Variant::ConnectedComplement => connected_complement_construction(src, family, opts),
        Variant::Planar => planar_construction(src, family, opts),
        Variant::PlanarConnected => planar_connected_construction(src, family, &plan, opts),
        Variant::Dominating => dominating_vertex_construction(src, family, &plan, None, opts),
    }
}

fn budget(k: usize, opts: &Options) -> usize {
    if opts.mutation == Some(Mutation::WrongBudget) {
        k + 1
    } else {
        k
    }
}

fn finish(b: Builder, k: usize, family: &ForbiddenFamily, connected: bool, plan: &GadgetPlan) -> Reduction {
    let (graph, provenance) = b.finish();
    Reduction {
        instance: PiVDInstance {
            graph,
            k,
            family: family.clone(),
            connected_variant: connected,
        },
        provenance,
        plan: Some(plan.clone()),
        witness: None,
    }
}

pub fn complement_construction(src: &VCInstance, family: &ForbiddenFamily, opts: &Options) -> Result<Reduction> {
    Variant::Complement.check_family(family)?;
    let comp = complement_family(family);
    let plan = build_gadget_plan(&select_h_pi(&comp, false)?, opts.c_prime_mode)?;
    let mut r = main_construction(src, &comp, &plan, opts)?;
    r.instance.graph = r.instance.graph.complement();
    r.instance.family = family.clone();
    Ok(r)
}

pub fn connected_complement_construction(
    src: &VCInstance,
    family: &ForbiddenFamily,
    opts: &Options,
) -> Result<Reduction> {
    Variant::ConnectedComplement.check_family(family)?;
    let comp = complement_family(family);
    let plan = build_gadget_plan(&select_h_pi(&comp, false)?, opts.c_prime_mode)?;
    let b = build_main(&src.graph, &plan, plan.d, opts.mutation);
    let mut r = finish(b, budget(src.k + 1, opts), family, true, &plan);
    r.instance.graph = r.instance.graph.complement();
    Ok(r)
}

/// Pads the source to `2^μ` vertices and joins the originals through a
/// complete binary tree whose vertices each carry a copy of `H_1`.
pub fn connected_tree_construction(
    src: &VCInstance,
    family: &ForbiddenFamily,
    plan: &GadgetPlan,
    opts: &Options,
) -> Result<Reduction> {
    Variant::Connected.check_family(family)?;
    let n = src.graph.n();
    let padded_n = n.max(1).next_power_of_two();
    let mut padded = src.graph.clone();
    while padded.n() < padded_n {
        padded.add_vertex();
    }
    let mut b = build_main(&padded, plan, plan.d - 1, opts.mutation);
    let mut orig = vec![0; padded_n];
    for (x, o) in b.origin.iter_mut().enumerate() {
        if let Origin::Original(v) = *o {
            orig[v] = x;
            if v >= n {
                *o = Origin::Padding(v);
            }
        }
    }
    let mu = padded_n.trailing_zeros() as usize;
    let mut tree = Vec::new();
    let mut upper: Vec<Vertex> = Vec::new();
    for level in (0..mu).rev() {
        let width = 1usize << level;
        let below: &[Vertex] = if level + 1 == mu { &orig } else { &upper };
        let below = below.to_vec();
        let mut current = Vec::with_capacity(width);
        for position in 1..=width {
            let t = b.add(Origin::TreeVertex { level, position });
            b.edge(t, below[position - 1]);
            b.edge(t, below[position - 1 + width]);
            current.push(t);
            tree.push(t);
        }
        upper = current;
    }
    for (tree_vertex, &t) in tree.iter().enumerate() {
        attach_h1(&mut b, plan, t, |index| Origin::TreeAttachment { tree_vertex, index });
    }
    Ok(finish(b, budget(src.k + tree.len(), opts), family, true, plan))
}

pub fn planar_construction(src: &VCInstance, family: &ForbiddenFamily, opts: &Options) -> Result<Reduction> {
    Variant::Planar.check_family(family)?;
    if !planar_embedding(&src.graph).is_planar() {
        return Err(Error::NotPlanar);
    }
    let plan = build_gadget_plan(&select_h_pi(family, true)?, opts.c_prime_mode)?;
    main_construction(src, family, &plan, opts)
}

/// One extra vertex per face of a fixed embedding, adjacent to the face's
/// boundary and carrying a copy of `H_1`.
pub fn planar_connected_construction(
    src: &VCInstance,
    family: &ForbiddenFamily,
    plan: &GadgetPlan,
    opts: &Options,
) -> Result<Reduction> {
    Variant::PlanarConnected.check_family(family)?;
    let g = &src.graph;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let emb = planar_embedding(g).embedding().ok_or(Error::NotPlanar)?;
    let faces = emb.face_boundaries(g);
    let mut b = build_main(g, plan, plan.d - 1, opts.mutation);
    let orig = originals(&b, g.n());
    let fv: Vec<Vertex> = faces
        .iter()
        .enumerate()
        .map(|(face, boundary)| {
            let x = b.add(Origin::FaceVertex(face));
            for &v in boundary {
                b.edge(x, orig[v]);
            }
            x
        })
        .collect();
    for (face, &x) in fv.iter().enumerate() {
        attach_h1(&mut b, plan, x, |index| Origin::FaceAttachment { face, index });
    }
    Ok(finish(b, budget(src.k + fv.len(), opts), family, true, plan))
}

fn originals(b: &Builder, n: usize) -> Vec<Vertex> {
    let mut orig = vec![0; n];
    for (x, o) in b.origin.iter().enumerate() {
        if let Origin::Original(v) = *o {
            orig[v] = x;
        }
    }
    orig
}

/// `I ⊎ (d−1)·H_1` plus a vertex adjacent to everything.
fn composite(witness: &Graph, plan: &GadgetPlan) -> Graph {
    let mut g = witness.clone();
    for _ in 1..plan.d {
        g = g.disjoint_union(&plan.h1);
    }
    let v = g.add_vertex();
    for u in 0..v {
        g.add_edge(u, v).unwrap();
    }
    g
}

/// First witness `I` (by order, then Γ-sequence) built from at most
/// `max member order` connected graphs of order `≤ order_cap` ranked below
/// `H_1`, whose composite has a forbidden subgraph.
pub fn detect_case1(plan: &GadgetPlan, family: &ForbiddenFamily, order_cap: Option<usize>) -> Option<Graph> {
    let max_order = family.max_order();
    let cap = order_cap.unwrap_or(max_order);
    let top = gamma_key(&plan.h1).unwrap();
    let mut parts: Vec<Graph> = enumerate_graphs(
        cap,
        &Constraints {
            connected: true,
            ..Default::default()
        },
    )
    .into_iter()
    .filter(|g| g.n() > 0 && gamma_key(g).unwrap() < top)
    .collect();
    parts.sort_by_cached_key(|g| (g.n(), gamma_key(g).unwrap()));
    let mut candidates: Vec<Graph> = (0..=max_order)
        .flat_map(|size| {
            (0..parts.len()).combinations_with_replacement(size).map(|ix| {
                ix.iter()
                    .fold(Graph::empty(0), |acc, &i| acc.disjoint_union(&parts[i]))
            })
        })
        .collect();
    candidates.sort_by_cached_key(|g| (g.n(), gamma_sequence(g)));
    candidates
        .into_iter()
        .find(|w| !is_member(&composite(w, plan), family))
}

pub fn dominating_vertex_construction(
    src: &VCInstance,
    family: &ForbiddenFamily,
    plan: &GadgetPlan,
    witness: Option<Graph>,
    opts: &Options,
) -> Result<Reduction> {
    Variant::Dominating.check_family(family)?;
    let witness = match witness {
        Some(w) => {
            let top = gamma_key(&plan.h1)?;
            for comp in w.connected_components() {
                let key = gamma_key(&w.induced_subgraph(&comp)?)?;
                if key >= top {
                    return Err(Error::InvalidWitness(format!(
                        "component {comp:?} does not rank below H_1 (α {:?} vs {:?})",
                        key.alpha, top.alpha
                    )));
                }
            }
            if is_member(&composite(&w, plan), family) {
                return Err(Error::InvalidWitness(
                    "witness plus (d−1)·H_1 plus a universal vertex has no forbidden subgraph".into(),
                ));
            }
            Some(w)
        }
        None => detect_case1(plan, family, opts.witness_cap),
    };
    let mut b = build_main(&src.graph, plan, plan.d - 1, opts.mutation);
    let k = match &witness {
        Some(w) => {
            b.copy(w, |_| None, Origin::WitnessVertex);
            src.k + 1
        }
        None => src.k,
    };
    let star = b.add(Origin::UniversalVertex);
    for u in 0..star {
        b.edge(u, star);
    }
    let mut r = finish(b, budget(k, opts), family, false, plan);
    r.witness = witness;
    Ok(r)
}
