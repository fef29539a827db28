use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EdgeOutOfRange { u: Vertex, v: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {v} is not in 0..{n}")]
    VertexOutOfRange { v: Vertex, n: usize },
    #[error("vertices {u} and {v} are adjacent; identifying them would create a self-loop")]
    IdentifyAdjacent { u: Vertex, v: Vertex },
    #[error("edge ({u}, {v}) does not exist")]
    MissingEdge { u: Vertex, v: Vertex },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not planar")]
    NotPlanar,
    #[error("forbidden family member {0} has no vertices")]
    EmptyMember(usize),
    #[error("forbidden family is empty")]
    EmptyFamily,
    #[error("no planar member in the forbidden family")]
    NoPlanarMember,
    #[error("gadget graph is edgeless; no edge gadget can be built from it")]
    EdgelessGadget,
    #[error("source graph has maximum degree {0}, expected at most 3")]
    NotSubcubic(usize),
    #[error("variant not applicable: {0}")]
    Incompatible(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("rejected witness: {0}")]
    InvalidWitness(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
