//! Exact F → at-most F. Every vertex `v` gets a clique `A_v` of `n + 2`
//! open vertices `v_0..v_{n+1}` and `n + 2` forbidden ones, with `v` joined
//! to `v_1..v_{n+1}`. The `v_0` vertices share a clique `B` with `n` open
//! vertices `W` and `k` forbidden ones; `B` forces any secure set to pick
//! at least `k` original vertices, the bound at most `k`.

use crate::graph::VertexSet;
use crate::instance::Instance;

use super::{Emitter, MapKind, Provenance, Reduced, ReductionError, ReductionMap};

/// `n + n(2n + 4) + n + k`.
pub fn predicted_size(inst: &Instance) -> usize {
    let n = inst.graph().vertex_count();
    n + n * (2 * n + 4) + n + inst.k()
}

pub fn reduce_essf_to_ssf(inst: &Instance) -> Result<Reduced, ReductionError> {
    if !inst.exact() {
        return Err(ReductionError::Refused("input must be the exact variant".into()));
    }
    if !inst.necessary().is_empty() || !inst.pairs().is_empty() {
        return Err(ReductionError::Refused("only forbidden vertices are allowed".into()));
    }
    let g = inst.graph();
    let (n, k) = (g.vertex_count(), inst.k());
    let mut e = Emitter::copying(MapKind::EssfSsf, inst);
    let mut forbidden: VertexSet = inst.forbidden().clone();
    let mut b = Vec::new();
    for v in g.vertices() {
        let lv = g.label(v);
        let open: Vec<_> =
            (0..=n + 1).map(|i| e.vertex(format!("a{i}@{lv}"), Provenance::gadget("a_open", [v + 1, i]))).collect();
        let boxed: Vec<_> = (0..=n + 1)
            .map(|i| e.vertex(format!("a{i}_box@{lv}"), Provenance::gadget("a_box", [v + 1, i])))
            .collect();
        for &a in &open[1..] {
            e.edge(v, a);
        }
        let all: Vec<_> = open.iter().chain(&boxed).copied().collect();
        e.clique(&all);
        forbidden.extend(boxed);
        b.push(open[0]);
    }
    for i in 1..=n {
        b.push(e.vertex(format!("w{i}@B"), Provenance::gadget("w", [i])));
    }
    for i in 1..=k {
        let f = e.vertex(format!("f{i}_box@B"), Provenance::gadget("f_box", [i]));
        b.push(f);
        forbidden.insert(f);
    }
    e.clique(&b);
    let (graph, map) = e.finish();
    let instance = Instance::builder(graph, k * (n + 3) + n).forbidden(forbidden).build()?;
    Ok(Reduced { instance, map })
}

/// Adds `W` and the open half of `A_v` for every chosen `v`.
pub(super) fn extend(map: &ReductionMap, s: &VertexSet, out: &mut VertexSet) {
    out.extend(map.gadgets("w", &[]));
    for &v in s {
        out.extend(map.gadgets("a_open", &[v + 1]));
    }
}
