//! Test-only brute-force oracles and random generators. Nothing here calls
//! the library's security engine or solver.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use secureset::qbf::{Literal, QSat2Formula, Term};
use secureset::{Graph, GraphBuilder, Instance, VertexSet};

/// Secure by definition: every non-empty X ⊆ S has |N[X]∩S| ≥ |N[X]\S|.
pub fn naive_secure(g: &Graph, s: &VertexSet) -> bool {
    naive_witness(g, s).is_none()
}

/// First X (by bitmask order over sorted S) with more attackers than
/// defenders, with its counts.
pub fn naive_witness(g: &Graph, s: &VertexSet) -> Option<(VertexSet, usize, usize)> {
    let members: Vec<usize> = s.iter().copied().collect();
    assert!(members.len() <= 22, "naive oracle is exponential");
    for mask in 1u32..(1 << members.len()) {
        let x: VertexSet = (0..members.len()).filter(|i| mask >> i & 1 == 1).map(|i| members[i]).collect();
        let mut closed = VertexSet::new();
        for &v in &x {
            closed.insert(v);
            closed.extend(g.neighbors(v).iter().copied());
        }
        let def = closed.iter().filter(|v| s.contains(v)).count();
        let att = closed.len() - def;
        if att > def {
            return Some((x, def, att));
        }
    }
    None
}

pub fn naive_alliance(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|&v| {
        let inside = g.neighbors(v).iter().filter(|w| s.contains(w)).count() + 1;
        inside >= g.degree(v) + 1 - inside
    })
}

/// Side constraints and size, checked from scratch.
pub fn naive_admits(inst: &Instance, s: &VertexSet) -> bool {
    let size_ok = if inst.exact() { s.len() == inst.k() } else { s.len() <= inst.k() };
    size_ok
        && !s.is_empty()
        && inst.forbidden().iter().all(|v| !s.contains(v))
        && inst.necessary().iter().all(|v| s.contains(v))
        && inst.pairs().iter().all(|&(a, b)| s.contains(&a) != s.contains(&b))
}

/// Every qualifying secure set, by full subset enumeration, ordered by size
/// and then by sorted member list.
pub fn brute_solutions(inst: &Instance) -> Vec<VertexSet> {
    let n = inst.graph().vertex_count();
    assert!(n <= 16, "brute force is exponential");
    let mut out: Vec<VertexSet> = (1u32..(1 << n))
        .map(|mask| (0..n).filter(|v| mask >> v & 1 == 1).collect::<VertexSet>())
        .filter(|s| naive_admits(inst, s) && naive_secure(inst.graph(), s))
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().cmp(b.iter())));
    out
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut b = GraphBuilder::with_default_labels(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                b.add_edge(u, v).unwrap();
            }
        }
    }
    b.build()
}

pub fn random_subset(rng: &mut impl Rng, n: usize) -> VertexSet {
    loop {
        let s: VertexSet = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        if !s.is_empty() {
            return s;
        }
    }
}

/// Which side constraints a generated instance may carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shape {
    pub forbidden: bool,
    pub necessary: bool,
    pub pairs: bool,
    pub exact: bool,
}

impl Shape {
    /// The eight variants: {plain, F, FN, FNC} × {at-most, exact}.
    pub fn all() -> Vec<Shape> {
        let classes = [(false, false, false), (true, false, false), (true, true, false), (true, true, true)];
        let mut out = Vec::new();
        for (forbidden, necessary, pairs) in classes {
            for exact in [false, true] {
                out.push(Shape { forbidden, necessary, pairs, exact });
            }
        }
        out
    }
}

/// A random instance of `shape` on `n` vertices. Each enabled constraint
/// kind is non-empty when `n` leaves room for it.
pub fn random_instance(rng: &mut impl Rng, n: usize, shape: Shape) -> Instance {
    let p = rng.gen_range(0.2..0.8);
    let g = random_graph(rng, n, p);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut free = order.into_iter();
    let mut take = |max: usize, rng: &mut dyn rand::RngCore| -> Vec<usize> {
        let want = if max == 0 { 0 } else { rng.gen_range(1..=max) };
        free.by_ref().take(want).collect()
    };
    let forbidden = if shape.forbidden { take((n / 3).max(1), rng) } else { vec![] };
    let necessary = if shape.necessary { take((n / 4).max(1), rng) } else { vec![] };
    let mut pairs = Vec::new();
    if shape.pairs {
        let rest: Vec<usize> = take(n, rng);
        for c in rest.chunks_exact(2).take(2) {
            pairs.push((c[0], c[1]));
        }
    }
    let k = rng.gen_range(1..=n);
    Instance::builder(g, k)
        .exact(shape.exact)
        .forbidden(forbidden)
        .necessary(necessary)
        .pairs(pairs)
        .build()
        .expect("generated constraints are disjoint")
}

/// Truth of ∃x ∀y ψ by plain enumeration.
pub fn naive_qsat2(f: &QSat2Formula) -> bool {
    let ex = f.existential();
    let un = f.universal();
    let value = |v: u32, xa: u64, ya: u64| -> bool {
        if let Some(i) = ex.iter().position(|&e| e == v) {
            xa >> i & 1 == 1
        } else {
            let i = un.iter().position(|&u| u == v).unwrap();
            ya >> i & 1 == 1
        }
    };
    (0..1u64 << ex.len()).any(|xa| {
        (0..1u64 << un.len()).all(|ya| {
            f.terms().iter().any(|t| t.literals().iter().all(|l| value(l.var, xa, ya) == l.positive))
        })
    })
}

/// A random normalized formula with the given block sizes.
pub fn random_formula(rng: &mut impl Rng, nx: u32, ny: u32, nt: usize) -> QSat2Formula {
    let ex: Vec<u32> = (1..=nx).collect();
    let un: Vec<u32> = (nx + 1..=nx + ny).collect();
    loop {
        let terms: Vec<Term> = (0..nt)
            .map(|_| {
                let mut lits = vec![Literal::new(rng.gen_range(nx + 1..=nx + ny), rng.gen())];
                for _ in 0..rng.gen_range(0..=2) {
                    lits.push(Literal::new(rng.gen_range(1..=nx + ny), rng.gen()));
                }
                Term::new(lits)
            })
            .collect();
        let f = QSat2Formula::new(ex.clone(), un.clone(), terms).unwrap();
        if f.is_normalized() {
            return f;
        }
    }
}
