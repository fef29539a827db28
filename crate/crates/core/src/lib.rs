//! Gadget reductions, exact solvers and verification tooling for
//! hereditary vertex deletion problems defined by finite forbidden
//! induced subgraph families.

pub mod error;
pub mod graph;
pub mod hereditary;
pub mod reductions;
pub mod solvers;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex};
