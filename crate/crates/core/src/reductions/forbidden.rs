//! Forbidden vertices → none. Each forbidden `f` gets a clique of `2k`
//! fresh vertices all joined to `f`; every vertex of such a fan then has a
//! closed neighbourhood of at least `2k + 1`, too large for any secure set
//! of size at most `k`. Works for both exact and at-most bounds.

use crate::instance::Instance;

use super::{Emitter, MapKind, Provenance, Reduced, ReductionError};

/// `n + |V_□|·2k`.
pub fn predicted_size(inst: &Instance) -> usize {
    inst.graph().vertex_count() + inst.forbidden().len() * 2 * inst.k()
}

pub fn eliminate_forbidden(inst: &Instance) -> Result<Reduced, ReductionError> {
    if !inst.necessary().is_empty() || !inst.pairs().is_empty() {
        return Err(ReductionError::Refused("only forbidden vertices are allowed".into()));
    }
    let g = inst.graph();
    let k = inst.k();
    let mut e = Emitter::copying(MapKind::DropForbidden, inst);
    for &f in inst.forbidden() {
        let lf = g.label(f);
        let fan: Vec<_> =
            (1..=2 * k).map(|i| e.vertex(format!("f{i}@{lf}"), Provenance::gadget("fan", [f + 1, i]))).collect();
        for &x in &fan {
            e.edge(f, x);
        }
        e.clique(&fan);
    }
    let (graph, map) = e.finish();
    let instance = Instance::builder(graph, k).exact(inst.exact()).build()?;
    Ok(Reduced { instance, map })
}
