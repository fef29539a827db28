use super::{Origin, Reduction, VCInstance};
use crate::error::{Error, Result};
use crate::solvers::{Certificate, CertificateKind};

/// Maps a deletion set of a main-construction output back to source vertices:
/// originals stay, a hit vertex-attachment copy maps to its anchor, a hit
/// edge-gadget copy maps to the smaller endpoint of its edge. The result
/// covers the source up to a residue with small matching number.
pub fn lift_vertex_cover(sol: &Certificate, reduced: &Reduction, src: &VCInstance) -> Result<Certificate> {
    sol.check(&reduced.instance)
        .map_err(|e| Error::InvalidWitness(format!("cannot lift an invalid deletion set: {e}")))?;
    if sol.kind == CertificateKind::VertexCover {
        return Err(Error::InvalidWitness("expected a deletion certificate".into()));
    }
    let n = src.graph.n();
    let mut out: Vec<usize> = sol
        .vertices
        .iter()
        .filter_map(|&x| match reduced.provenance.origin[x] {
            Origin::Original(v) => Some(v),
            Origin::DCopy { vertex, .. } => Some(vertex),
            Origin::JCopy { edge: (u, v), .. } => Some(u.min(v)),
            _ => None,
        })
        .filter(|&v| v < n)
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(Certificate::cover(out))
}
