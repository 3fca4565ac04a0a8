//! ∃∀ DNF formula → exact secure set with forbidden, necessary and
//! complementary vertices.
//!
//! Per existential variable a complementary pair `x_i ≠ x̄_i`; per
//! universal variable two necessary vertices `y_i`, `ȳ_i` with necessary
//! pendants and shared forbidden neighbours; per term a chain
//! `t_i ≠ t̄_i ≠ t'_i ≠ t̄'_i`. `t̄_i` is chosen exactly when the
//! existential assignment falsifies the term; `t̄'_i` then attacks every
//! universal literal vertex that would falsify the term.

use std::collections::BTreeMap;

use crate::graph::{VertexId, VertexSet};
use crate::instance::Instance;
use crate::qbf::{Assignment, Literal, QSat2Formula, Var};

use super::{Emitter, MapKind, Provenance, Reduced, ReductionError, ReductionMap};

/// `2n_x + 2n_y + 2n_y·n_t + (n_t − 1) + n_y(n_t + 1) + 3 + 8n_t`.
pub fn predicted_size(f: &QSat2Formula) -> usize {
    let (nx, ny, nt) = (f.existential().len(), f.universal().len(), f.terms().len());
    2 * nx + 2 * ny + 2 * ny * nt + nt.saturating_sub(1) + ny * (nt + 1) + 3 + 8 * nt
}

struct Literals {
    pos: BTreeMap<Var, VertexId>,
    neg: BTreeMap<Var, VertexId>,
}

impl Literals {
    fn vertex(&self, l: Literal) -> VertexId {
        if l.positive {
            self.pos[&l.var]
        } else {
            self.neg[&l.var]
        }
    }
}

pub fn reduce_qsat2_to_essfnc(f: &QSat2Formula) -> Result<Reduced, ReductionError> {
    if !f.is_normalized() {
        return Err(ReductionError::NotNormalized);
    }
    let (nx, ny, nt) = (f.existential().len(), f.universal().len(), f.terms().len());
    let mut e = Emitter::new(MapKind::Qsat2Essfnc);
    e.summary("nx", vec![nx as u64]);
    e.summary("ny", vec![ny as u64]);
    e.summary("nt", vec![nt as u64]);
    e.summary("exists", f.existential().iter().map(|&v| u64::from(v)).collect());
    e.summary("forall", f.universal().iter().map(|&v| u64::from(v)).collect());

    let mut lits = Literals { pos: BTreeMap::new(), neg: BTreeMap::new() };
    let mut pairs = Vec::new();
    let mut necessary = Vec::new();
    let mut forbidden = Vec::new();

    let xs: Vec<VertexId> =
        (1..=nx).map(|i| e.vertex(format!("x{i}"), Provenance::gadget("x", [i]))).collect();
    let xbars: Vec<VertexId> =
        (1..=nx).map(|i| e.vertex(format!("x{i}_bar"), Provenance::gadget("x_bar", [i]))).collect();
    for (i, &v) in f.existential().iter().enumerate() {
        lits.pos.insert(v, xs[i]);
        lits.neg.insert(v, xbars[i]);
        pairs.push((xs[i], xbars[i]));
    }

    let ys: Vec<VertexId> =
        (1..=ny).map(|i| e.vertex(format!("y{i}"), Provenance::gadget("y", [i]))).collect();
    let ybars: Vec<VertexId> =
        (1..=ny).map(|i| e.vertex(format!("y{i}_bar"), Provenance::gadget("y_bar", [i]))).collect();
    for (i, &v) in f.universal().iter().enumerate() {
        lits.pos.insert(v, ys[i]);
        lits.neg.insert(v, ybars[i]);
    }
    necessary.extend(ys.iter().chain(&ybars));

    // Necessary pendants: n_t on each universal literal vertex.
    for i in 1..=ny {
        for j in 1..=nt {
            let v = e.vertex(format!("y{i}_{j}_tri"), Provenance::gadget("y_tri", [i, j]));
            e.edge(ys[i - 1], v);
            necessary.push(v);
        }
    }
    for i in 1..=ny {
        for j in 1..=nt {
            let v = e.vertex(format!("y{i}_{j}_bar_tri"), Provenance::gadget("y_bar_tri", [i, j]));
            e.edge(ybars[i - 1], v);
            necessary.push(v);
        }
    }
    // n_t − 1 necessary vertices joined to every universal literal vertex.
    for j in 1..nt {
        let v = e.vertex(format!("y_tri{j}"), Provenance::gadget("y_prime_tri", [j]));
        for &y in ys.iter().chain(&ybars) {
            e.edge(v, y);
        }
        necessary.push(v);
    }
    // n_t + 1 forbidden vertices shared by y_i and ȳ_i.
    for i in 1..=ny {
        for j in 1..=nt + 1 {
            let v = e.vertex(format!("y{i}_{j}_box"), Provenance::gadget("y_box", [i, j]));
            e.edge(ys[i - 1], v);
            e.edge(ybars[i - 1], v);
            forbidden.push(v);
        }
    }

    let d1 = e.vertex("d1_box".into(), Provenance::gadget("d1_box", []));
    let d2 = e.vertex("d2_box".into(), Provenance::gadget("d2_box", []));
    let hub = e.vertex("t_bar_box".into(), Provenance::gadget("t_bar_hub", []));
    forbidden.extend([d1, d2, hub]);

    let family = |e: &mut Emitter, name: &'static str, suffix: &str| -> Vec<VertexId> {
        (1..=nt).map(|i| e.vertex(format!("t{i}{suffix}"), Provenance::gadget(name, [i]))).collect()
    };
    let t = family(&mut e, "t", "");
    let tbar = family(&mut e, "t_bar", "_bar");
    let tbar_box = family(&mut e, "t_bar_box", "_bar_box");
    let tbar_tri = family(&mut e, "t_bar_tri", "_bar_tri");
    let tp = family(&mut e, "t_prime", "_prime");
    let tbarp = family(&mut e, "t_bar_prime", "_bar_prime");
    let tp_box = family(&mut e, "t_prime_box", "_prime_box");
    let tbarp_box = family(&mut e, "t_bar_prime_box", "_bar_prime_box");
    necessary.extend(&tbar_tri);
    forbidden.extend(tbar_box.iter().chain(&tp_box).chain(&tbarp_box));

    for (i, term) in f.terms().iter().enumerate() {
        e.edge(tbar[i], hub);
        e.edge(tbar[i], tbar_tri[i]);
        e.edge(tp[i], tp_box[i]);
        e.edge(tbarp[i], tbarp_box[i]);
        for &y in ys.iter().chain(&ybars) {
            e.edge(tp[i], y);
        }
        let lx: Vec<Literal> = f.existential_literals(term).collect();
        for &l in &lx {
            let comp = lits.vertex(l.complement());
            e.edge(comp, tbar_box[i]);
            e.edge(comp, tbar[i]);
        }
        for l in f.universal_literals(term) {
            e.edge(lits.vertex(l.complement()), tbarp[i]);
        }
        if lx.len() <= 1 {
            e.edge(d1, tbar[i]);
        }
        if lx.is_empty() {
            e.edge(d2, tbar[i]);
        }
        pairs.extend([(t[i], tbar[i]), (tbar[i], tp[i]), (tp[i], tbarp[i])]);
    }

    let k = necessary.len() + nx + 2 * nt;
    let (graph, map) = e.finish();
    let instance = Instance::builder(graph, k)
        .exact(true)
        .necessary(necessary)
        .forbidden(forbidden)
        .pairs(pairs)
        .build()?;
    Ok(Reduced { instance, map })
}

fn block(map: &ReductionMap, key: &str) -> Result<Vec<Var>, ReductionError> {
    map.summary_value(key)
        .ok_or_else(|| ReductionError::MapMismatch(format!("map summary lacks `{key}`")))?
        .iter()
        .map(|&v| Var::try_from(v).map_err(|_| ReductionError::MapMismatch(format!("variable {v} out of range"))))
        .collect()
}

fn family_vertex(map: &ReductionMap, family: &str, i: usize) -> Result<VertexId, ReductionError> {
    map.gadget(family, &[i])
        .ok_or_else(|| ReductionError::MapMismatch(format!("map lacks gadget {family} {i}")))
}

/// The set built from an existential assignment: all necessary vertices,
/// the literal vertex of each chosen value, `t̄_i, t̄'_i` for terms the
/// assignment falsifies and `t_i, t'_i` for the others.
pub(super) fn lift(map: &ReductionMap, target: &Instance, a: &Assignment) -> Result<VertexSet, ReductionError> {
    let exists = block(map, "exists")?;
    let nt = map.require_scalar("nt")? as usize;
    let mut chosen = VertexSet::new();
    for (i, &var) in exists.iter().enumerate() {
        let value = a
            .get(var)
            .ok_or_else(|| ReductionError::InvalidSolution(format!("variable {var} is unassigned")))?;
        chosen.insert(family_vertex(map, if value { "x" } else { "x_bar" }, i + 1)?);
    }
    let g = target.graph();
    let mut s: VertexSet = target.necessary().clone();
    s.extend(&chosen);
    for i in 1..=nt {
        let tbar = family_vertex(map, "t_bar", i)?;
        // t̄_i's literal neighbours are the complements of its existential literals.
        let falsified = g.neighbors(tbar).iter().any(|v| chosen.contains(v));
        if falsified {
            s.extend([tbar, family_vertex(map, "t_bar_prime", i)?]);
        } else {
            s.extend([family_vertex(map, "t", i)?, family_vertex(map, "t_prime", i)?]);
        }
    }
    Ok(s)
}

/// `x_i` is true iff its literal vertex is in the set.
pub(super) fn project(map: &ReductionMap, s: &VertexSet) -> Result<Assignment, ReductionError> {
    let exists = block(map, "exists")?;
    let mut a = Assignment::new();
    for (i, &var) in exists.iter().enumerate() {
        a.set(var, s.contains(&family_vertex(map, "x", i + 1)?));
    }
    Ok(a)
}
