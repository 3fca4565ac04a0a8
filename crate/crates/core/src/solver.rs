//! Exact solver for all eight secure-set variants.
//!
//! Necessary vertices are fixed in and forbidden vertices out. Complementary
//! pairs are merged into components with a parity: choosing one vertex of a
//! component decides all of it. Remaining vertices are enumerated in
//! ascending id, include first, separately for each target size. Partial
//! candidates are cut as soon as a chosen vertex can no longer be a
//! defensive alliance member (more than half its closed neighbourhood is
//! already outside), since every secure set is a defensive alliance.
//! Complete candidates are then checked for security.

use thiserror::Error;

use crate::graph::{Graph, VertexId, VertexSet};
use crate::instance::{Instance, InstanceError, Solution, Variant};
use crate::security::{self, AttackWitness};

/// Default limit on search nodes.
pub const DEFAULT_MAX_CANDIDATES: u64 = 1 << 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Search nodes (partial and complete candidates) visited before giving up.
    pub max_candidates: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { max_candidates: DEFAULT_MAX_CANDIDATES }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("search budget of {0} candidates exhausted")]
    Budget(u64),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error(transparent)]
    Instance(#[from] InstanceError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub result: Option<Solution>,
    /// Complete candidates whose security was checked.
    pub candidates_examined: u64,
    /// Search nodes visited, including pruned partial candidates.
    pub nodes: u64,
    pub variant: Variant,
    /// Why the instance was rejected without search, if it was.
    pub note: Option<String>,
}

/// Outcome of checking a proposed solution against an instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolutionCheck {
    Valid,
    /// Size or side-constraint violation.
    Violates(String),
    Insecure(AttackWitness),
}

pub fn check_solution(inst: &Instance, s: &VertexSet) -> SolutionCheck {
    if let Some(why) = inst.constraint_violation(s) {
        return SolutionCheck::Violates(why);
    }
    match security::witness_unchecked(inst.graph(), s) {
        Some(w) => SolutionCheck::Insecure(w),
        None => SolutionCheck::Valid,
    }
}

/// Minimum-size qualifying secure set, lexicographically first among those
/// of that size.
pub fn solve(inst: &Instance, config: &SolverConfig) -> Result<SolveReport, SolveError> {
    let mut found = None;
    let (candidates_examined, nodes, note) = search(inst, config, |s| {
        found = Some(s.clone());
        false
    })?;
    Ok(SolveReport {
        result: found.and_then(Solution::new),
        candidates_examined,
        nodes,
        variant: inst.variant(),
        note,
    })
}

/// Every qualifying secure set, ordered by size and then lexicographically.
pub fn enumerate_solutions(inst: &Instance, config: &SolverConfig) -> Result<Vec<VertexSet>, SolveError> {
    let mut all = Vec::new();
    search(inst, config, |s| {
        all.push(s.clone());
        true
    })?;
    Ok(all)
}

/// Smallest non-empty secure set of `g`.
pub fn min_nonempty_secure_set(g: &Graph, config: &SolverConfig) -> Result<Solution, SolveError> {
    if g.is_empty() {
        return Err(SolveError::EmptyGraph);
    }
    let inst = Instance::plain(g.clone(), g.vertex_count())?;
    let report = solve(&inst, config)?;
    Ok(report.result.expect("the full vertex set is secure"))
}

const UNDECIDED: u8 = 0;
const IN: u8 = 1;
const OUT: u8 = 2;

/// A complementary-pair component not fixed by the side constraints.
struct Component {
    /// `sides[p]`: members of parity `p`; exactly one side is chosen.
    sides: [Vec<VertexId>; 2],
}

/// Static preprocessing shared by every target size.
struct Plan {
    initial: Vec<u8>,
    /// Undetermined component and parity of each vertex, if paired.
    comp_of: Vec<Option<(usize, usize)>>,
    comps: Vec<Component>,
}

/// Two-colours the pair graph and applies necessary/forbidden vertices.
/// `Err` carries the reason no candidate exists.
fn plan(inst: &Instance) -> Result<Plan, String> {
    let g = inst.graph();
    let n = g.vertex_count();
    let mut initial = vec![UNDECIDED; n];
    for &v in inst.necessary() {
        initial[v] = IN;
    }
    for &v in inst.forbidden() {
        initial[v] = OUT;
    }

    let mut pair_adj = vec![Vec::new(); n];
    for &(a, b) in inst.pairs() {
        pair_adj[a].push(b);
        pair_adj[b].push(a);
    }
    let mut parity = vec![usize::MAX; n];
    let mut comp_of = vec![None; n];
    let mut comps = Vec::new();
    for start in 0..n {
        if pair_adj[start].is_empty() || parity[start] != usize::MAX {
            continue;
        }
        let mut sides: [Vec<VertexId>; 2] = [Vec::new(), Vec::new()];
        parity[start] = 0;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            sides[parity[u]].push(u);
            for &w in &pair_adj[u] {
                if parity[w] == usize::MAX {
                    parity[w] = 1 - parity[u];
                    stack.push(w);
                } else if parity[w] == parity[u] {
                    return Err(format!(
                        "complementary pairs form an odd cycle through {} and {}",
                        g.label(u),
                        g.label(w)
                    ));
                }
            }
        }
        // Side forced in by a fixed vertex, if any.
        let mut forced: Option<usize> = None;
        for (p, side) in sides.iter().enumerate() {
            for &v in side {
                let want = match initial[v] {
                    IN => p,
                    OUT => 1 - p,
                    _ => continue,
                };
                if forced.is_some_and(|f| f != want) {
                    return Err(format!("complementary pairs conflict at {}", g.label(v)));
                }
                forced = Some(want);
            }
        }
        match forced {
            Some(p) => {
                for &v in &sides[p] {
                    initial[v] = IN;
                }
                for &v in &sides[1 - p] {
                    initial[v] = OUT;
                }
            }
            None => {
                let idx = comps.len();
                for (p, side) in sides.iter_mut().enumerate() {
                    side.sort_unstable();
                    for &v in side.iter() {
                        comp_of[v] = Some((idx, p));
                    }
                }
                comps.push(Component { sides });
            }
        }
    }
    Ok(Plan { initial, comp_of, comps })
}

struct Dfs<'a, F> {
    g: &'a Graph,
    plan: &'a Plan,
    closed: Vec<usize>,
    state: Vec<u8>,
    /// Closed-neighbourhood members of each vertex currently out.
    out_cnt: Vec<usize>,
    in_count: usize,
    /// Fewest / most vertices the undecided units can still add.
    min_extra: usize,
    max_extra: usize,
    target: usize,
    trail: Vec<VertexId>,
    nodes: u64,
    examined: u64,
    budget: u64,
    emit: F,
}

enum Step {
    Continue,
    Stop,
}

impl<F: FnMut(&VertexSet) -> bool> Dfs<'_, F> {
    fn unit_extent(&self, v: VertexId) -> (usize, usize) {
        match self.plan.comp_of[v] {
            Some((c, _)) => {
                let [a, b] = &self.plan.comps[c].sides;
                (a.len().min(b.len()), a.len().max(b.len()))
            }
            None => (0, 1),
        }
    }

    fn may_join(&self, v: VertexId) -> bool {
        self.closed[v] <= 2 * self.target && 2 * self.out_cnt[v] <= self.closed[v]
    }

    /// Records `v`'s value; returns false if an alliance bound is violated.
    fn set(&mut self, v: VertexId, value: u8) -> bool {
        self.state[v] = value;
        self.trail.push(v);
        if value == IN {
            self.in_count += 1;
            return self.may_join(v);
        }
        let mut ok = true;
        self.out_cnt[v] += 1;
        for &w in self.g.neighbors(v) {
            self.out_cnt[w] += 1;
            ok &= self.state[w] != IN || 2 * self.out_cnt[w] <= self.closed[w];
        }
        ok
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().unwrap();
            if self.state[v] == IN {
                self.in_count -= 1;
            } else {
                self.out_cnt[v] -= 1;
                for &w in self.g.neighbors(v) {
                    self.out_cnt[w] -= 1;
                }
            }
            self.state[v] = UNDECIDED;
        }
    }

    /// Decides the unit containing `v`, with `v` itself in or out.
    fn decide(&mut self, v: VertexId, include: bool) -> bool {
        let (lo, hi) = self.unit_extent(v);
        self.min_extra -= lo;
        self.max_extra -= hi;
        match self.plan.comp_of[v] {
            None => self.set(v, if include { IN } else { OUT }),
            Some((c, p)) => {
                let chosen = if include { p } else { 1 - p };
                let comp = &self.plan.comps[c];
                let mut ok = true;
                for (side, value) in [(chosen, IN), (1 - chosen, OUT)] {
                    for &u in &comp.sides[side] {
                        ok &= self.set(u, value);
                    }
                }
                ok
            }
        }
    }

    fn feasible_size(&self) -> bool {
        self.in_count + self.min_extra <= self.target && self.in_count + self.max_extra >= self.target
    }

    fn run(&mut self, from: usize) -> Result<Step, SolveError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(SolveError::Budget(self.budget));
        }
        let n = self.state.len();
        let Some(v) = (from..n).find(|&v| self.state[v] == UNDECIDED) else {
            return Ok(self.leaf());
        };
        for include in [true, false] {
            if include && !self.may_join(v) {
                continue;
            }
            let mark = self.trail.len();
            let (min0, max0) = (self.min_extra, self.max_extra);
            if self.decide(v, include) && self.feasible_size() {
                if let Step::Stop = self.run(v + 1)? {
                    return Ok(Step::Stop);
                }
            }
            self.undo_to(mark);
            self.min_extra = min0;
            self.max_extra = max0;
        }
        Ok(Step::Continue)
    }

    fn leaf(&mut self) -> Step {
        debug_assert_eq!(self.in_count, self.target);
        self.examined += 1;
        let s: VertexSet = (0..self.state.len()).filter(|&v| self.state[v] == IN).collect();
        if security::witness_unchecked(self.g, &s).is_none() && !(self.emit)(&s) {
            return Step::Stop;
        }
        Step::Continue
    }
}

/// Drives the enumeration over target sizes; `emit` returns whether to
/// keep going. Returns (candidates examined, nodes, rejection note).
fn search(
    inst: &Instance,
    config: &SolverConfig,
    mut emit: impl FnMut(&VertexSet) -> bool,
) -> Result<(u64, u64, Option<String>), SolveError> {
    let k = inst.k();
    if inst.necessary().len() > k {
        let note = format!("{} necessary vertices exceed k = {k}", inst.necessary().len());
        return Ok((0, 0, Some(note)));
    }
    let plan = match plan(inst) {
        Ok(p) => p,
        Err(note) => return Ok((0, 0, Some(note))),
    };
    let g = inst.graph();
    let n = g.vertex_count();
    let closed: Vec<usize> = (0..n).map(|v| g.degree(v) + 1).collect();

    let mut examined = 0;
    let mut nodes = 0;
    let sizes = if inst.exact() { k..=k } else { 1..=k };
    for target in sizes {
        let mut dfs = Dfs {
            g,
            plan: &plan,
            closed: closed.clone(),
            state: vec![UNDECIDED; n],
            out_cnt: vec![0; n],
            in_count: 0,
            min_extra: 0,
            max_extra: 0,
            target,
            trail: Vec::new(),
            nodes,
            examined,
            budget: config.max_candidates,
            emit: &mut emit,
        };
        let mut ok = true;
        for v in 0..n {
            if plan.initial[v] != UNDECIDED {
                ok &= dfs.set(v, plan.initial[v]);
            }
        }
        for v in 0..n {
            if plan.initial[v] == UNDECIDED && plan.comp_of[v].is_none() {
                dfs.max_extra += 1;
            }
        }
        for c in &plan.comps {
            dfs.min_extra += c.sides[0].len().min(c.sides[1].len());
            dfs.max_extra += c.sides[0].len().max(c.sides[1].len());
        }
        let stop = if ok && dfs.feasible_size() { matches!(dfs.run(0)?, Step::Stop) } else { false };
        examined = dfs.examined;
        nodes = dfs.nodes;
        if stop {
            break;
        }
    }
    Ok((examined, nodes, None))
}
