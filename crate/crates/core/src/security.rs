//! Security checking: attack witnesses, defensive alliances and repel
//! matchings.
//!
//! `S` is secure iff no `X ⊆ S` has `|N[X] \ S| > |N[X] ∩ S|`. Such an `X`
//! is an *attack witness*.

use std::collections::{BTreeMap, BTreeSet};

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexId, VertexSet};

/// Largest set the exhaustive oracle will enumerate by default.
pub const DEFAULT_ORACLE_CAP: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SecurityError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex {0} of the subset is not in the set")]
    NotSubset(VertexId),
    #[error("set has {size} members; exhaustive enumeration is capped at {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("defensive alliances are non-empty by definition")]
    EmptySet,
    #[error("vertex {0} of the matching lies outside N[X]")]
    OutsideNeighborhood(VertexId),
}

/// Defender and attacker counts of one subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Balance {
    pub defenders: usize,
    pub attackers: usize,
}

impl Balance {
    pub fn holds(self) -> bool {
        self.defenders >= self.attackers
    }
}

/// A subset `X ⊆ S` with more attackers than defenders.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AttackWitness {
    pub subset: VertexSet,
    pub defenders: usize,
    pub attackers: usize,
}

impl AttackWitness {
    pub fn balance(&self) -> Balance {
        Balance { defenders: self.defenders, attackers: self.attackers }
    }
}

/// An assignment of every attacker of some `X` to a distinct defender.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RepelMatching {
    pub assignment: BTreeMap<VertexId, VertexId>,
}

impl RepelMatching {
    pub fn new(pairs: impl IntoIterator<Item = (VertexId, VertexId)>) -> Self {
        RepelMatching { assignment: pairs.into_iter().collect() }
    }
}

fn check_subset(g: &Graph, s: &VertexSet, x: &VertexSet) -> Result<(), SecurityError> {
    g.check_set(s)?;
    match x.difference(s).next() {
        Some(&v) => Err(SecurityError::NotSubset(v)),
        None => Ok(()),
    }
}

/// `(|N[x] ∩ s|, |N[x] \ s|)`.
pub fn attack_balance(g: &Graph, s: &VertexSet, x: &VertexSet) -> Result<Balance, SecurityError> {
    check_subset(g, s, x)?;
    let closed = g.closed_neighborhood(x)?;
    let defenders = closed.iter().filter(|v| s.contains(v)).count();
    Ok(Balance { defenders, attackers: closed.len() - defenders })
}

fn witness_for(g: &Graph, s: &VertexSet, subset: VertexSet) -> AttackWitness {
    let b = attack_balance(g, s, &subset).expect("subset drawn from s");
    AttackWitness { subset, defenders: b.defenders, attackers: b.attackers }
}

/// A member of `S` with its attack and defence sets over the local
/// universe `N[S]`.
struct Member {
    id: VertexId,
    att: FixedBitSet,
    def: FixedBitSet,
}

impl Member {
    /// At least the same attackers and at most the same defenders.
    fn dominates(&self, other: &Member) -> bool {
        other.att.is_subset(&self.att) && self.def.is_subset(&other.def)
    }
}

fn members(g: &Graph, s: &VertexSet) -> (Vec<Member>, usize) {
    let universe: Vec<VertexId> = g.closed_neighborhood(s).expect("validated").into_iter().collect();
    let local: BTreeMap<VertexId, usize> = universe.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let all = s
        .iter()
        .map(|&v| {
            let mut att = FixedBitSet::with_capacity(universe.len());
            let mut def = FixedBitSet::with_capacity(universe.len());
            for w in std::iter::once(v).chain(g.neighbors(v).iter().copied()) {
                if s.contains(&w) {
                    def.insert(local[&w]);
                } else {
                    att.insert(local[&w]);
                }
            }
            Member { id: v, att, def }
        })
        .collect();
    (all, universe.len())
}

/// Drops members that are never needed in a witness: those without
/// attackers, and those dominated by another member (mutual domination
/// keeps the lower id). Swapping a dominated member for its dominator
/// cannot shrink `A` or grow `D`.
fn undominated(all: Vec<Member>) -> Vec<Member> {
    let keep: Vec<bool> = all
        .iter()
        .enumerate()
        .map(|(u, mu)| {
            !mu.att.is_clear()
                && !all
                    .iter()
                    .enumerate()
                    .any(|(v, mv)| v != u && mv.dominates(mu) && (v < u || !mu.dominates(mv)))
        })
        .collect();
    all.into_iter().zip(keep).filter_map(|(m, k)| k.then_some(m)).collect()
}

struct Search<'a> {
    m: &'a [Member],
    /// `comparable[i][j]`: one attack set contains the other.
    comparable: Vec<Vec<bool>>,
    /// Union of attack sets of members `i..`.
    suffix_att: Vec<FixedBitSet>,
    chosen: Vec<usize>,
}

impl Search<'_> {
    /// Depth-first over antichains (under attack-set inclusion) of members.
    /// A witness can always be shrunk to such an antichain: dropping a member
    /// whose attackers are covered by another keeps `A` and cannot grow `D`.
    fn dfs(&mut self, from: usize, att: &FixedBitSet, def: &FixedBitSet) -> bool {
        let d = def.count_ones(..);
        for j in from..self.m.len() {
            // Optimistic bound: every remaining attacker, no extra defender.
            if att.union_count(&self.suffix_att[j]) <= d {
                return false;
            }
            if self.chosen.iter().any(|&c| self.comparable[c][j]) {
                continue;
            }
            let mut a = att.clone();
            a.union_with(&self.m[j].att);
            let mut f = def.clone();
            f.union_with(&self.m[j].def);
            self.chosen.push(j);
            if a.count_ones(..) > f.count_ones(..) || self.dfs(j + 1, &a, &f) {
                return true;
            }
            self.chosen.pop();
        }
        false
    }
}

/// Branch-and-bound witness search. Returns `None` iff `s` is secure.
pub fn find_attack_witness(g: &Graph, s: &VertexSet) -> Result<Option<AttackWitness>, SecurityError> {
    g.check_set(s)?;
    Ok(witness_unchecked(g, s))
}

pub(crate) fn witness_unchecked(g: &Graph, s: &VertexSet) -> Option<AttackWitness> {
    let (all, universe) = members(g, s);
    let m = undominated(all);
    let n = m.len();
    if n == 0 {
        return None;
    }
    let comparable = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| i != j && (m[i].att.is_subset(&m[j].att) || m[j].att.is_subset(&m[i].att)))
                .collect()
        })
        .collect();
    let mut suffix_att = vec![FixedBitSet::with_capacity(universe); n + 1];
    for i in (0..n).rev() {
        let mut u = suffix_att[i + 1].clone();
        u.union_with(&m[i].att);
        suffix_att[i] = u;
    }
    let mut search = Search { m: &m, comparable, suffix_att, chosen: Vec::new() };
    let empty = FixedBitSet::with_capacity(universe);
    if !search.dfs(0, &empty, &empty) {
        return None;
    }
    let subset: VertexSet = search.chosen.iter().map(|&i| m[i].id).collect();
    Some(witness_for(g, s, subset))
}

/// Literal enumeration of every `X ⊆ S` in lexicographic order of sorted
/// member lists; returns the first witness found.
pub fn exhaustive_witness_oracle(
    g: &Graph,
    s: &VertexSet,
    cap: usize,
) -> Result<Option<AttackWitness>, SecurityError> {
    g.check_set(s)?;
    if s.len() > cap {
        return Err(SecurityError::CapExceeded { size: s.len(), cap });
    }
    let members: Vec<VertexId> = s.iter().copied().collect();
    let mut cover = vec![0u32; g.vertex_count()];
    let mut state = OracleState { g, s, members: &members, cover: &mut cover, defenders: 0, attackers: 0, chosen: Vec::new() };
    Ok(state.dfs(0).then(|| {
        let subset: VertexSet = state.chosen.iter().copied().collect();
        witness_for(g, s, subset)
    }))
}

struct OracleState<'a> {
    g: &'a Graph,
    s: &'a VertexSet,
    members: &'a [VertexId],
    /// How many chosen members have each vertex in their closed neighbourhood.
    cover: &'a mut [u32],
    defenders: usize,
    attackers: usize,
    chosen: Vec<VertexId>,
}

impl OracleState<'_> {
    fn toggle(&mut self, v: VertexId, add: bool) {
        for w in std::iter::once(v).chain(self.g.neighbors(v).iter().copied()) {
            let counter = if self.s.contains(&w) { &mut self.defenders } else { &mut self.attackers };
            if add {
                self.cover[w] += 1;
                if self.cover[w] == 1 {
                    *counter += 1;
                }
            } else {
                self.cover[w] -= 1;
                if self.cover[w] == 0 {
                    *counter -= 1;
                }
            }
        }
    }

    fn dfs(&mut self, from: usize) -> bool {
        for i in from..self.members.len() {
            let v = self.members[i];
            self.toggle(v, true);
            self.chosen.push(v);
            if self.attackers > self.defenders || self.dfs(i + 1) {
                return true;
            }
            self.chosen.pop();
            self.toggle(v, false);
        }
        false
    }
}

pub fn is_secure(g: &Graph, s: &VertexSet) -> Result<bool, SecurityError> {
    Ok(find_attack_witness(g, s)?.is_none())
}

/// Whether every single member has at least as many defenders as attackers.
pub fn is_defensive_alliance(g: &Graph, s: &VertexSet) -> Result<bool, SecurityError> {
    if s.is_empty() {
        return Err(SecurityError::EmptySet);
    }
    g.check_set(s)?;
    Ok(s.iter().all(|&v| singleton_balance(g, s, v).holds()))
}

pub(crate) fn singleton_balance(g: &Graph, s: &VertexSet, v: VertexId) -> Balance {
    let defenders = 1 + g.neighbors(v).iter().filter(|w| s.contains(w)).count();
    Balance { defenders, attackers: g.degree(v) + 1 - defenders }
}

/// Whether `m` maps every attacker of `x` injectively onto defenders of `x`.
pub fn verify_matching(
    g: &Graph,
    s: &VertexSet,
    x: &VertexSet,
    m: &RepelMatching,
) -> Result<bool, SecurityError> {
    check_subset(g, s, x)?;
    let closed = g.closed_neighborhood(x)?;
    for (&from, &to) in &m.assignment {
        for v in [from, to] {
            if !closed.contains(&v) {
                return Err(SecurityError::OutsideNeighborhood(v));
            }
        }
    }
    let attackers: BTreeSet<VertexId> = closed.iter().copied().filter(|v| !s.contains(v)).collect();
    let domain: BTreeSet<VertexId> = m.assignment.keys().copied().collect();
    let images: BTreeSet<VertexId> = m.assignment.values().copied().collect();
    Ok(domain == attackers && images.len() == m.assignment.len() && images.iter().all(|v| s.contains(v)))
}

/// A way of searching for attack witnesses, selectable by name.
pub trait WitnessSearch: Send + Sync {
    fn name(&self) -> &'static str;
    fn find(&self, g: &Graph, s: &VertexSet) -> Result<Option<AttackWitness>, SecurityError>;
}

/// Pruned search over antichains of undominated members; no size limit.
#[derive(Debug, Clone, Copy, Default)]
pub struct BranchAndBound;

impl WitnessSearch for BranchAndBound {
    fn name(&self) -> &'static str {
        "bnb"
    }

    fn find(&self, g: &Graph, s: &VertexSet) -> Result<Option<AttackWitness>, SecurityError> {
        find_attack_witness(g, s)
    }
}

/// Full subset enumeration; refuses sets larger than `cap`.
#[derive(Debug, Clone, Copy)]
pub struct Exhaustive {
    pub cap: usize,
}

impl Default for Exhaustive {
    fn default() -> Self {
        Exhaustive { cap: DEFAULT_ORACLE_CAP }
    }
}

impl WitnessSearch for Exhaustive {
    fn name(&self) -> &'static str {
        "exhaustive"
    }

    fn find(&self, g: &Graph, s: &VertexSet) -> Result<Option<AttackWitness>, SecurityError> {
        exhaustive_witness_oracle(g, s, self.cap)
    }
}

pub const WITNESS_SEARCHES: &[&str] = &["bnb", "exhaustive"];

/// Looks up a witness search by name; `cap` bounds the exhaustive strategy.
pub fn witness_search(name: &str, cap: usize) -> Option<Box<dyn WitnessSearch>> {
    match name {
        "bnb" => Some(Box::new(BranchAndBound)),
        "exhaustive" => Some(Box::new(Exhaustive { cap })),
        _ => None,
    }
}
