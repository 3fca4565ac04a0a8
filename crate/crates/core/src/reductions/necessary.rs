//! Exact FN → exact F: every vertex `v` that is neither forbidden nor
//! necessary gets a clique of `n + 1` open vertices joined to `v` and `n + 1`
//! forbidden ones. The open vertices travel with `v`, so every optional
//! vertex costs `n + 2` and the bound's residue mod `n + 2` forces all
//! necessary vertices in.

use crate::graph::VertexSet;
use crate::instance::Instance;

use super::{Emitter, MapKind, Provenance, Reduced, ReductionError, ReductionMap};

fn optional_vertices(inst: &Instance) -> Vec<usize> {
    inst.graph()
        .vertices()
        .filter(|v| !inst.forbidden().contains(v) && !inst.necessary().contains(v))
        .collect()
}

/// `n + |V_○|·(2n + 2)` with `V_○` the unconstrained vertices.
pub fn predicted_size(inst: &Instance) -> usize {
    let n = inst.graph().vertex_count();
    n + optional_vertices(inst).len() * (2 * n + 2)
}

pub fn reduce_essfn_to_essf(inst: &Instance) -> Result<Reduced, ReductionError> {
    if !inst.exact() {
        return Err(ReductionError::Refused("necessary-vertex elimination needs the exact variant".into()));
    }
    if !inst.pairs().is_empty() {
        return Err(ReductionError::Refused("complementary pairs must be eliminated first".into()));
    }
    let (k, needed) = (inst.k(), inst.necessary().len());
    if k < needed {
        return Err(ReductionError::TriviallyNegative(format!("{needed} necessary vertices exceed k = {k}")));
    }
    let g = inst.graph();
    let n = g.vertex_count();
    let mut e = Emitter::copying(MapKind::EssfnEssf, inst);
    let mut forbidden: VertexSet = inst.forbidden().clone();
    let optional = optional_vertices(inst);
    for &v in &optional {
        let lv = g.label(v);
        let open: Vec<_> =
            (1..=n + 1).map(|i| e.vertex(format!("c{i}@{lv}"), Provenance::gadget("c_open", [v + 1, i]))).collect();
        let boxed: Vec<_> = (1..=n + 1)
            .map(|i| e.vertex(format!("c{i}_box@{lv}"), Provenance::gadget("c_box", [v + 1, i])))
            .collect();
        for &c in &open {
            e.edge(v, c);
        }
        let all: Vec<_> = open.iter().chain(&boxed).copied().collect();
        e.clique(&all);
        forbidden.extend(boxed);
    }
    let k_out = needed + (k - needed) * (n + 2);
    let n_out = n + optional.len() * (2 * n + 2);
    if k_out > n_out {
        return Err(ReductionError::TriviallyNegative(format!(
            "k = {k} exceeds the {} vertices that are not forbidden",
            needed + optional.len()
        )));
    }
    let (graph, map) = e.finish();
    let instance = Instance::builder(graph, k_out).exact(true).forbidden(forbidden).build()?;
    Ok(Reduced { instance, map })
}

/// Adds the open clique half of every chosen optional vertex.
pub(super) fn extend(map: &ReductionMap, s: &VertexSet, out: &mut VertexSet) {
    for &v in s {
        out.extend(map.gadgets("c_open", &[v + 1]));
    }
}
