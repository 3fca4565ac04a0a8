//! ∃∀ quantified Boolean formulas with a DNF matrix (QSAT₂).
//!
//! The qdnf text format mirrors QDIMACS:
//!
//! ```text
//! c <comment>
//! p qdnf <nvars> <nterms>
//! e <id> ... 0
//! a <id> ... 0
//! <lit> <lit> <lit> 0     (one term per line, 1–3 literals)
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use thiserror::Error;

/// Largest `n_x + n_y` the brute-force evaluator accepts by default.
pub const DEFAULT_EVAL_CAP: usize = 24;

/// Maximum literals per term.
pub const MAX_TERM_LEN: usize = 3;

pub type Var = u32;

/// A variable or its complement, written as a signed integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub var: Var,
    pub positive: bool,
}

impl Literal {
    pub fn new(var: Var, positive: bool) -> Self {
        Literal { var, positive }
    }

    pub fn from_signed(lit: i64) -> Option<Self> {
        let var = Var::try_from(lit.unsigned_abs()).ok().filter(|&v| v > 0)?;
        Some(Literal { var, positive: lit > 0 })
    }

    pub fn signed(self) -> i64 {
        if self.positive {
            i64::from(self.var)
        } else {
            -i64::from(self.var)
        }
    }

    pub fn complement(self) -> Self {
        Literal { var: self.var, positive: !self.positive }
    }

    /// Truth value under `a`, or `None` when the variable is unassigned.
    pub fn eval(self, a: &Assignment) -> Option<bool> {
        a.get(self.var).map(|v| v == self.positive)
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.signed())
    }
}

/// A conjunction of literals, kept sorted and free of duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    literals: Vec<Literal>,
}

impl Term {
    pub fn new(literals: impl IntoIterator<Item = Literal>) -> Self {
        let set: BTreeSet<Literal> = literals.into_iter().collect();
        Term { literals: set.into_iter().collect() }
    }

    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn is_contradictory(&self) -> bool {
        self.literals.windows(2).any(|w| w[0].var == w[1].var)
    }
}

/// Truth values for some set of variables.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Assignment(BTreeMap<Var, bool>);

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, var: Var, value: bool) {
        self.0.insert(var, value);
    }

    pub fn get(&self, var: Var) -> Option<bool> {
        self.0.get(&var).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, bool)> + '_ {
        self.0.iter().map(|(&v, &b)| (v, b))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The assignment as literals, ascending by variable.
    pub fn literals(&self) -> Vec<Literal> {
        self.iter().map(|(v, b)| Literal::new(v, b)).collect()
    }

    pub fn from_literals(lits: impl IntoIterator<Item = Literal>) -> Self {
        Assignment(lits.into_iter().map(|l| (l.var, l.positive)).collect())
    }
}

impl fmt::Display for Assignment {
    /// Space-separated signed literals, e.g. `-1 2 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in self.literals() {
            if !first {
                f.write_char(' ')?;
            }
            first = false;
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QbfError {
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: QdnfParseError },
    #[error("variable {0} is unassigned")]
    Unassigned(Var),
    #[error("{0} variables exceed the evaluation cap of {1}")]
    CapExceeded(usize, usize),
    #[error("malformed assignment: {0}")]
    MalformedAssignment(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QdnfParseError {
    #[error("missing `p qdnf <nvars> <nterms>` header")]
    MissingHeader,
    #[error("malformed header")]
    MalformedHeader,
    #[error("missing existential block (`e ... 0`)")]
    MissingExistentialBlock,
    #[error("missing universal block (`a ... 0`)")]
    MissingUniversalBlock,
    #[error("quantifier blocks must be one `e` line followed by one `a` line")]
    MisplacedBlock,
    #[error("variable {0} quantified in both blocks")]
    VarInBothBlocks(Var),
    #[error("variable {0} quantified twice")]
    DuplicateQuantifier(Var),
    #[error("variable {0} is not quantified")]
    Unquantified(Var),
    #[error("variable {0} exceeds declared count {1}")]
    VarOutOfRange(i64, u32),
    #[error("term has {0} literals (at most {MAX_TERM_LEN} allowed)")]
    TooManyLiterals(usize),
    #[error("empty term")]
    EmptyTerm,
    #[error("formula has no terms")]
    NoTerms,
    #[error("header declares {expected} terms, found {found}")]
    TermCountMismatch { expected: usize, found: usize },
    #[error("line not terminated by 0")]
    MissingTerminator,
    #[error("malformed token {0:?}")]
    BadToken(String),
}

/// `∃ existential ∀ universal ⋁ terms`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSat2Formula {
    existential: Vec<Var>,
    universal: Vec<Var>,
    terms: Vec<Term>,
}

impl QSat2Formula {
    /// Builds a formula; blocks must be disjoint and every literal quantified.
    pub fn new(existential: Vec<Var>, universal: Vec<Var>, terms: Vec<Term>) -> Result<Self, QbfError> {
        let perr = |kind| QbfError::Parse { line: 0, kind };
        let mut seen = BTreeMap::new();
        for (&v, block) in existential.iter().map(|v| (v, 'e')).chain(universal.iter().map(|v| (v, 'a'))) {
            if v == 0 {
                return Err(perr(QdnfParseError::BadToken("0".into())));
            }
            match seen.insert(v, block) {
                Some(prev) if prev != block => return Err(perr(QdnfParseError::VarInBothBlocks(v))),
                Some(_) => return Err(perr(QdnfParseError::DuplicateQuantifier(v))),
                None => {}
            }
        }
        for t in &terms {
            if t.is_empty() {
                return Err(perr(QdnfParseError::EmptyTerm));
            }
            if t.len() > MAX_TERM_LEN {
                return Err(perr(QdnfParseError::TooManyLiterals(t.len())));
            }
            if let Some(l) = t.literals().iter().find(|l| !seen.contains_key(&l.var)) {
                return Err(perr(QdnfParseError::Unquantified(l.var)));
            }
        }
        Ok(QSat2Formula { existential, universal, terms })
    }

    pub fn existential(&self) -> &[Var] {
        &self.existential
    }

    pub fn universal(&self) -> &[Var] {
        &self.universal
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_existential(&self, v: Var) -> bool {
        self.existential.contains(&v)
    }

    /// Literals of `t` over existential variables.
    pub fn existential_literals<'a>(&'a self, t: &'a Term) -> impl Iterator<Item = Literal> + 'a {
        t.literals().iter().copied().filter(|l| self.is_existential(l.var))
    }

    /// Literals of `t` over universal variables.
    pub fn universal_literals<'a>(&'a self, t: &'a Term) -> impl Iterator<Item = Literal> + 'a {
        t.literals().iter().copied().filter(|l| !self.is_existential(l.var))
    }

    /// Whether both reduction preconditions hold: no contradictory term and
    /// a universal literal in every term.
    pub fn is_normalized(&self) -> bool {
        !self.terms.is_empty()
            && self
                .terms
                .iter()
                .all(|t| !t.is_contradictory() && self.universal_literals(t).next().is_some())
    }

    pub fn with_terms(&self, terms: Vec<Term>) -> Self {
        QSat2Formula { existential: self.existential.clone(), universal: self.universal.clone(), terms }
    }
}

fn qerr(line: usize, kind: QdnfParseError) -> QbfError {
    QbfError::Parse { line, kind }
}

/// Parses a 0-terminated list of signed integers.
fn zero_terminated(tokens: &[&str], line: usize) -> Result<Vec<i64>, QbfError> {
    let mut out = Vec::with_capacity(tokens.len());
    for tok in tokens {
        out.push(tok.parse::<i64>().map_err(|_| qerr(line, QdnfParseError::BadToken(tok.to_string())))?);
    }
    match out.pop() {
        Some(0) => {}
        _ => return Err(qerr(line, QdnfParseError::MissingTerminator)),
    }
    if out.contains(&0) {
        return Err(qerr(line, QdnfParseError::BadToken("0".into())));
    }
    Ok(out)
}

pub fn parse_qdnf(text: &str) -> Result<QSat2Formula, QbfError> {
    let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.first() {
            None | Some(&"c") => None,
            Some(_) => Some((i + 1, tokens)),
        }
    });

    let (hline, header) = lines.next().ok_or(qerr(0, QdnfParseError::MissingHeader))?;
    if header[0] != "p" {
        return Err(qerr(hline, QdnfParseError::MissingHeader));
    }
    if header.len() != 4 || header[1] != "qdnf" {
        return Err(qerr(hline, QdnfParseError::MalformedHeader));
    }
    let nvars: u32 = header[2].parse().map_err(|_| qerr(hline, QdnfParseError::MalformedHeader))?;
    let nterms: usize = header[3].parse().map_err(|_| qerr(hline, QdnfParseError::MalformedHeader))?;

    let mut blocks: Vec<(char, Vec<Var>)> = Vec::new();
    let mut terms = Vec::new();
    let mut last_line = hline;
    let mut block_of: BTreeMap<Var, char> = BTreeMap::new();

    for (line, tokens) in lines {
        last_line = line;
        match tokens[0] {
            q @ ("e" | "a") => {
                let qc = if q == "e" { 'e' } else { 'a' };
                let expected = if blocks.is_empty() { 'e' } else { 'a' };
                if blocks.len() >= 2 || !terms.is_empty() || qc != expected {
                    return Err(qerr(
                        line,
                        if qc == 'a' && blocks.is_empty() {
                            QdnfParseError::MissingExistentialBlock
                        } else {
                            QdnfParseError::MisplacedBlock
                        },
                    ));
                }
                let mut vars = Vec::new();
                for id in zero_terminated(&tokens[1..], line)? {
                    if id < 0 || id > i64::from(nvars) {
                        return Err(qerr(line, QdnfParseError::VarOutOfRange(id, nvars)));
                    }
                    let v = id as Var;
                    match block_of.insert(v, qc) {
                        Some(prev) if prev != qc => {
                            return Err(qerr(line, QdnfParseError::VarInBothBlocks(v)))
                        }
                        Some(_) => return Err(qerr(line, QdnfParseError::DuplicateQuantifier(v))),
                        None => vars.push(v),
                    }
                }
                blocks.push((qc, vars));
            }
            _ => {
                match blocks.len() {
                    0 => return Err(qerr(line, QdnfParseError::MissingExistentialBlock)),
                    1 => return Err(qerr(line, QdnfParseError::MissingUniversalBlock)),
                    _ => {}
                }
                let lits = zero_terminated(&tokens, line)?;
                if lits.is_empty() {
                    return Err(qerr(line, QdnfParseError::EmptyTerm));
                }
                let mut term_lits = Vec::with_capacity(lits.len());
                for lit in lits {
                    if lit.unsigned_abs() > u64::from(nvars) {
                        return Err(qerr(line, QdnfParseError::VarOutOfRange(lit, nvars)));
                    }
                    term_lits.push(Literal::from_signed(lit).expect("nonzero"));
                }
                let term = Term::new(term_lits);
                if term.len() > MAX_TERM_LEN {
                    return Err(qerr(line, QdnfParseError::TooManyLiterals(term.len())));
                }
                terms.push(term);
            }
        }
    }

    match blocks.len() {
        0 => return Err(qerr(last_line, QdnfParseError::MissingExistentialBlock)),
        1 => return Err(qerr(last_line, QdnfParseError::MissingUniversalBlock)),
        _ => {}
    }
    if terms.is_empty() {
        return Err(qerr(last_line, QdnfParseError::NoTerms));
    }
    if terms.len() != nterms {
        return Err(qerr(
            last_line,
            QdnfParseError::TermCountMismatch { expected: nterms, found: terms.len() },
        ));
    }
    if let Some(v) = (1..=nvars).find(|v| !block_of.contains_key(v)) {
        return Err(qerr(hline, QdnfParseError::Unquantified(v)));
    }
    let universal = blocks.pop().unwrap().1;
    let existential = blocks.pop().unwrap().1;
    Ok(QSat2Formula { existential, universal, terms })
}

/// Canonical qdnf text. Variables must be numbered `1..=nvars`.
pub fn serialize_qdnf(f: &QSat2Formula) -> String {
    let nvars = f.existential.iter().chain(&f.universal).copied().max().unwrap_or(0);
    let mut out = String::new();
    writeln!(out, "p qdnf {} {}", nvars, f.terms.len()).unwrap();
    for (tag, block) in [("e", &f.existential), ("a", &f.universal)] {
        out.push_str(tag);
        for v in block {
            write!(out, " {v}").unwrap();
        }
        out.push_str(" 0\n");
    }
    for t in &f.terms {
        for l in t.literals() {
            write!(out, "{l} ").unwrap();
        }
        out.push_str("0\n");
    }
    out
}

/// Outcome of [`normalize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Normalization {
    /// Some term has no universal literal; the witness makes it true.
    TriviallyTrue(Assignment),
    /// Every term is contradictory.
    TriviallyFalse,
    Normalized(QSat2Formula),
}

/// Drops contradictory terms, then decides the formula outright when a
/// term is purely existential.
pub fn normalize(f: &QSat2Formula) -> Normalization {
    let terms: Vec<Term> = f.terms.iter().filter(|t| !t.is_contradictory()).cloned().collect();
    if terms.is_empty() {
        return Normalization::TriviallyFalse;
    }
    if let Some(t) = terms.iter().find(|t| f.universal_literals(t).next().is_none()) {
        let mut witness = Assignment::new();
        for &v in &f.existential {
            witness.set(v, false);
        }
        for l in t.literals() {
            witness.set(l.var, l.positive);
        }
        return Normalization::TriviallyTrue(witness);
    }
    Normalization::Normalized(f.with_terms(terms))
}

/// Whether every literal of `t` holds under `a`.
pub fn term_satisfied(t: &Term, a: &Assignment) -> Result<bool, QbfError> {
    let mut all = true;
    for &l in t.literals() {
        all &= l.eval(a).ok_or(QbfError::Unassigned(l.var))?;
    }
    Ok(all)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QbfVerdict {
    pub truth: bool,
    /// Lexicographically first satisfying assignment of the existential block.
    pub witness: Option<Assignment>,
}

/// Bit-packed term: `pos`/`neg` masks over the combined variable index
/// (existential block first, then universal).
struct PackedTerm {
    pos: u64,
    neg: u64,
}

/// Exhaustive ∃∀ evaluation.
///
/// Existential assignments are tried as bit-vectors `(x1, ..., x_nx)` in
/// ascending order (false < true, `x1` most significant); the first one for
/// which every universal extension satisfies some term is the witness.
pub fn eval_qsat2(f: &QSat2Formula, cap: usize) -> Result<QbfVerdict, QbfError> {
    let nx = f.existential.len();
    let ny = f.universal.len();
    if nx + ny > cap.min(63) {
        return Err(QbfError::CapExceeded(nx + ny, cap));
    }
    let mut bit_of = BTreeMap::new();
    // x1 is the most significant existential bit.
    for (i, &v) in f.existential.iter().enumerate() {
        bit_of.insert(v, ny + (nx - 1 - i));
    }
    for (i, &v) in f.universal.iter().enumerate() {
        bit_of.insert(v, i);
    }
    let packed: Vec<PackedTerm> = f
        .terms
        .iter()
        .map(|t| {
            let mut p = PackedTerm { pos: 0, neg: 0 };
            for l in t.literals() {
                let bit = 1u64 << bit_of[&l.var];
                if l.positive {
                    p.pos |= bit;
                } else {
                    p.neg |= bit;
                }
            }
            p
        })
        .collect();

    for xbits in 0u64..(1u64 << nx) {
        let all_universal_ok = (0u64..(1u64 << ny)).all(|ybits| {
            let full = (xbits << ny) | ybits;
            packed.iter().any(|t| full & t.pos == t.pos && full & t.neg == 0)
        });
        if all_universal_ok {
            let mut witness = Assignment::new();
            for (i, &v) in f.existential.iter().enumerate() {
                witness.set(v, xbits >> (nx - 1 - i) & 1 == 1);
            }
            return Ok(QbfVerdict { truth: true, witness: Some(witness) });
        }
    }
    Ok(QbfVerdict { truth: false, witness: None })
}

/// Whether every universal extension of `existential` satisfies some term.
pub fn verify_witness(f: &QSat2Formula, existential: &Assignment, cap: usize) -> Result<bool, QbfError> {
    if f.universal.len() > cap.min(63) {
        return Err(QbfError::CapExceeded(f.universal.len(), cap));
    }
    for &v in &f.existential {
        if existential.get(v).is_none() {
            return Err(QbfError::Unassigned(v));
        }
    }
    for ybits in 0u64..(1u64 << f.universal.len()) {
        let mut a = existential.clone();
        for (i, &v) in f.universal.iter().enumerate() {
            a.set(v, ybits >> i & 1 == 1);
        }
        let mut any = false;
        for t in &f.terms {
            if term_satisfied(t, &a)? {
                any = true;
                break;
            }
        }
        if !any {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Reads a `v <lit> <lit> ...` assignment line (a trailing `0` is optional).
pub fn parse_assignment(text: &str) -> Result<Assignment, QbfError> {
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('c'))
        .ok_or_else(|| QbfError::MalformedAssignment("no `v` line".into()))?;
    let mut tokens = line.split_whitespace();
    if tokens.next() != Some("v") {
        return Err(QbfError::MalformedAssignment(format!("expected `v` line, got {line:?}")));
    }
    let mut a = Assignment::new();
    for tok in tokens {
        let lit: i64 = tok.parse().map_err(|_| QbfError::MalformedAssignment(tok.to_string()))?;
        if lit == 0 {
            break;
        }
        let l = Literal::from_signed(lit).ok_or_else(|| QbfError::MalformedAssignment(tok.to_string()))?;
        if a.get(l.var).is_some() {
            return Err(QbfError::MalformedAssignment(format!("variable {} assigned twice", l.var)));
        }
        a.set(l.var, l.positive);
    }
    Ok(a)
}

pub fn serialize_assignment(a: &Assignment) -> String {
    if a.is_empty() {
        "v\n".to_string()
    } else {
        format!("v {a}\n")
    }
}
