//! Exact FNC → exact FN: each complementary pair `(a, b)` becomes a
//! necessary vertex `△` whose only neighbours are two hubs `a^ab`, `b^ab`.
//! Each side `x` gets an open clique half (`n + 1` vertices joined to `x`,
//! three joined to the hub) and an equally large forbidden half. A side's
//! open vertices, its hub and `x` enter a secure set all together or not at
//! all, and the size bound admits only one side per pair.

use crate::graph::VertexSet;
use crate::instance::Instance;

use super::{Emitter, MapKind, Provenance, Reduced, ReductionError, ReductionMap};

/// `n + |C|·(4n + 19)`.
pub fn predicted_size(inst: &Instance) -> usize {
    let n = inst.graph().vertex_count();
    n + inst.pairs().len() * (4 * n + 19)
}

pub fn reduce_essfnc_to_essfn(inst: &Instance) -> Result<Reduced, ReductionError> {
    if !inst.exact() {
        return Err(ReductionError::Refused("pair elimination needs the exact variant".into()));
    }
    let g = inst.graph();
    let n = g.vertex_count();
    let mut e = Emitter::copying(MapKind::EssfncEssfn, inst);
    let mut necessary: VertexSet = inst.necessary().clone();
    let mut forbidden: VertexSet = inst.forbidden().clone();
    for &(a, b) in inst.pairs() {
        let tag = format!("{}:{}", g.label(a), g.label(b));
        let tri = e.vertex(format!("tri@{tag}"), Provenance::gadget("pair_tri", [a + 1, b + 1]));
        necessary.insert(tri);
        for x in [a, b] {
            let lx = g.label(x);
            let hub = e.vertex(format!("{lx}@{tag}"), Provenance::gadget("pair_hub", [a + 1, b + 1, x + 1]));
            e.edge(tri, hub);
            let open: Vec<_> = (1..=n + 4)
                .map(|i| e.vertex(format!("{lx}{i}@{tag}"), Provenance::gadget("pair_open", [a + 1, b + 1, x + 1, i])))
                .collect();
            let boxed: Vec<_> = (1..=n + 4)
                .map(|i| {
                    e.vertex(format!("{lx}{i}_box@{tag}"), Provenance::gadget("pair_box", [a + 1, b + 1, x + 1, i]))
                })
                .collect();
            for &c in &open[..=n] {
                e.edge(x, c);
            }
            for &d in &open[n + 1..] {
                e.edge(hub, d);
            }
            let all: Vec<_> = open.iter().chain(&boxed).copied().collect();
            e.clique(&all);
            forbidden.extend(boxed);
        }
    }
    let k = inst.k() + inst.pairs().len() * (n + 6);
    let (graph, map) = e.finish();
    let instance = Instance::builder(graph, k).exact(true).necessary(necessary).forbidden(forbidden).build()?;
    Ok(Reduced { instance, map })
}

/// Adds `△`, the hub and the open half of the chosen side of every pair.
pub(super) fn extend(map: &ReductionMap, s: &VertexSet, out: &mut VertexSet) -> Result<(), ReductionError> {
    let pairs: Vec<(usize, usize)> = map
        .vertices
        .iter()
        .filter(|p| p.is("pair_tri"))
        .map(|p| (p.indices()[0], p.indices()[1]))
        .collect();
    for (a, b) in pairs {
        let chosen: Vec<usize> = [a, b].into_iter().filter(|x| s.contains(&(x - 1))).collect();
        let &[x] = chosen.as_slice() else {
            return Err(ReductionError::InvalidSolution(format!(
                "complementary pair ({a}, {b}) must have exactly one member in the solution"
            )));
        };
        out.extend(map.gadget("pair_tri", &[a, b]));
        out.extend(map.gadget("pair_hub", &[a, b, x]));
        out.extend(map.gadgets("pair_open", &[a, b, x]));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphBuilder;
    use crate::reductions::{lift, project, SourceSolution};
    use crate::samples;

    fn exact(inst: &Instance) -> Instance {
        let mut b = Instance::builder(inst.graph().clone(), inst.k())
            .exact(true)
            .forbidden(inst.forbidden().iter().copied())
            .necessary(inst.necessary().iter().copied());
        b = b.pairs(inst.pairs().iter().copied());
        b.build().unwrap()
    }

    #[test]
    fn no_pairs_is_identity() {
        let inst = Instance::builder(samples::five_vertex_graph(), 3).exact(true).build().unwrap();
        let r = reduce_essfnc_to_essfn(&inst).unwrap();
        assert_eq!(r.instance, inst);
    }

    #[test]
    fn constrained_sample_counts() {
        let inst = exact(&samples::constrained_instance());
        let r = reduce_essfnc_to_essfn(&inst).unwrap();
        // Per pair: 2(n+4) open + 2(n+4) forbidden + 3 = 47 new vertices at n = 7.
        assert_eq!(r.instance.graph().vertex_count(), 7 + 47);
        assert_eq!(predicted_size(&inst), 54);
        assert_eq!(r.instance.k(), 3 + 13);
        assert_eq!(r.instance.forbidden().len(), 2 + 22);
        assert_eq!(r.instance.necessary().len(), 3);
        assert!(r.instance.pairs().is_empty());
    }

    #[test]
    fn two_vertex_pair() {
        let mut b = GraphBuilder::new();
        let a = b.add_vertex("a").unwrap();
        let bb = b.add_vertex("b").unwrap();
        b.add_edge(a, bb).unwrap();
        let inst = Instance::builder(b.build(), 1).exact(true).pairs([(a, bb)]).build().unwrap();
        let r = reduce_essfnc_to_essfn(&inst).unwrap();
        assert_eq!(r.instance.graph().vertex_count(), 29);
        assert_eq!(r.instance.k(), 1 + 8);
        let s: VertexSet = [a].into_iter().collect();
        let lifted = lift(&r.map, &r.instance, &SourceSolution::Vertices(s.clone())).unwrap();
        assert_eq!(lifted.len(), 1 + 8);
        let g = r.instance.graph();
        for label in ["tri@a:b", "a@a:b", "a1@a:b", "a6@a:b"] {
            assert!(lifted.contains(&g.vertex_by_label(label).unwrap()), "{label}");
        }
        assert_eq!(project(&r.map, &lifted).unwrap(), SourceSolution::Vertices(s));
    }

    #[test]
    fn refuses_at_most_variant() {
        assert!(matches!(
            reduce_essfnc_to_essfn(&samples::constrained_instance()),
            Err(ReductionError::Refused(_))
        ));
    }
}
