//! Line-oriented text formats for instances and solutions.
//!
//! Instance files follow DIMACS conventions with 1-based vertex ids:
//!
//! ```text
//! c <comment>
//! p ss <n> <m>
//! e <u> <v>            (exactly m lines)
//! k <k>
//! exact                (optional)
//! forbid <v>
//! need <v>
//! comp <u> <v>
//! name <v> <label>     (optional)
//! ```
//!
//! Every line after the header may appear in any order. Solution files
//! hold a single `s <v1> <v2> ...` or `s NONE` line.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{GraphBuilder, VertexId, VertexSet};
use crate::instance::{Instance, InstanceError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `p ss <n> <m>` header")]
    MissingHeader,
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("malformed `{directive}` line")]
    MalformedLine { directive: String },
    #[error("unknown directive `{0}`")]
    UnknownDirective(String),
    #[error("vertex id {id} out of range 1..={n}")]
    IdOutOfRange { id: i64, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("header declares {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("missing `k` line")]
    MissingBound,
    #[error("`k` given more than once")]
    DuplicateBound,
    #[error("k = {k} outside 1..={n}")]
    BoundOutOfRange { k: i64, n: usize },
    #[error("`exact` given more than once")]
    DuplicateExact,
    #[error("vertex {0} listed twice in `{1}` lines")]
    DuplicateConstraint(usize, &'static str),
    #[error("vertex {0} is both forbidden and necessary")]
    ForbiddenAndNecessary(usize),
    #[error("complementary pair names vertex {0} twice")]
    DegeneratePair(usize),
    #[error("complementary pair {0} {1} listed more than once")]
    DuplicatePair(usize, usize),
    #[error("vertex {0} named more than once")]
    DuplicateName(usize),
    #[error("label {0:?} used by more than one vertex")]
    DuplicateLabel(String),
    #[error("vertex id {0} is not positive")]
    NonPositiveId(i64),
    #[error("missing `s` line")]
    MissingSolution,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Splits `text` into (1-based line number, tokens), skipping blank lines and comments.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.first() {
            None | Some(&"c") => None,
            Some(_) => Some((i + 1, tokens)),
        }
    })
}

fn parse_int(tok: &str, line: usize, directive: &str) -> Result<i64, ParseError> {
    tok.parse::<i64>().map_err(|_| {
        err(line, ParseErrorKind::MalformedLine { directive: directive.to_string() })
    })
}

fn parse_vertex(tok: &str, n: usize, line: usize, directive: &str) -> Result<VertexId, ParseError> {
    let id = parse_int(tok, line, directive)?;
    if id < 1 || id as u64 > n as u64 {
        return Err(err(line, ParseErrorKind::IdOutOfRange { id, n }));
    }
    Ok(id as usize - 1)
}

fn expect_arity(tokens: &[&str], arity: usize, line: usize) -> Result<(), ParseError> {
    if tokens.len() == arity {
        Ok(())
    } else {
        Err(err(line, ParseErrorKind::MalformedLine { directive: tokens[0].to_string() }))
    }
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or(err(0, ParseErrorKind::MissingHeader))?;
    if header[0] != "p" {
        return Err(err(header_line, ParseErrorKind::MissingHeader));
    }
    if header.len() != 4 || header[1] != "ss" {
        return Err(err(
            header_line,
            ParseErrorKind::MalformedHeader("expected `p ss <n> <m>`".into()),
        ));
    }
    let count = |tok: &str| {
        tok.parse::<usize>().map_err(|_| {
            err(header_line, ParseErrorKind::MalformedHeader(format!("bad count {tok:?}")))
        })
    };
    let n = count(header[2])?;
    let m = count(header[3])?;

    let mut edges = Vec::new();
    let mut edge_set = HashSet::new();
    let mut k: Option<(usize, i64)> = None;
    let mut exact = false;
    let mut forbid: HashMap<VertexId, usize> = HashMap::new();
    let mut need: HashMap<VertexId, usize> = HashMap::new();
    let mut pairs = Vec::new();
    let mut pair_set = HashSet::new();
    let mut names: HashMap<VertexId, (usize, String)> = HashMap::new();
    let mut last_line = header_line;

    for (line, tokens) in lines {
        last_line = line;
        match tokens[0] {
            "p" => {
                return Err(err(line, ParseErrorKind::MalformedHeader("second header".into())))
            }
            "e" => {
                expect_arity(&tokens, 3, line)?;
                let u = parse_vertex(tokens[1], n, line, "e")?;
                let v = parse_vertex(tokens[2], n, line, "e")?;
                if u == v {
                    return Err(err(line, ParseErrorKind::SelfLoop(u + 1)));
                }
                if !edge_set.insert((u.min(v), u.max(v))) {
                    return Err(err(line, ParseErrorKind::DuplicateEdge(u + 1, v + 1)));
                }
                edges.push((u, v));
            }
            "k" => {
                expect_arity(&tokens, 2, line)?;
                if k.is_some() {
                    return Err(err(line, ParseErrorKind::DuplicateBound));
                }
                let value = parse_int(tokens[1], line, "k")?;
                if value < 1 || value as u64 > n as u64 {
                    return Err(err(line, ParseErrorKind::BoundOutOfRange { k: value, n }));
                }
                k = Some((line, value));
            }
            "exact" => {
                expect_arity(&tokens, 1, line)?;
                if exact {
                    return Err(err(line, ParseErrorKind::DuplicateExact));
                }
                exact = true;
            }
            "forbid" | "need" => {
                expect_arity(&tokens, 2, line)?;
                let v = parse_vertex(tokens[1], n, line, tokens[0])?;
                let (mine, other, tag) = if tokens[0] == "forbid" {
                    (&mut forbid, &need, "forbid")
                } else {
                    (&mut need, &forbid, "need")
                };
                if mine.insert(v, line).is_some() {
                    return Err(err(line, ParseErrorKind::DuplicateConstraint(v + 1, tag)));
                }
                if other.contains_key(&v) {
                    return Err(err(line, ParseErrorKind::ForbiddenAndNecessary(v + 1)));
                }
            }
            "comp" => {
                expect_arity(&tokens, 3, line)?;
                let a = parse_vertex(tokens[1], n, line, "comp")?;
                let b = parse_vertex(tokens[2], n, line, "comp")?;
                if a == b {
                    return Err(err(line, ParseErrorKind::DegeneratePair(a + 1)));
                }
                if !pair_set.insert((a.min(b), a.max(b))) {
                    return Err(err(line, ParseErrorKind::DuplicatePair(a + 1, b + 1)));
                }
                pairs.push((a, b));
            }
            "name" => {
                expect_arity(&tokens, 3, line)?;
                let v = parse_vertex(tokens[1], n, line, "name")?;
                if names.insert(v, (line, tokens[2].to_string())).is_some() {
                    return Err(err(line, ParseErrorKind::DuplicateName(v + 1)));
                }
            }
            other => return Err(err(line, ParseErrorKind::UnknownDirective(other.to_string()))),
        }
    }

    if edges.len() != m {
        return Err(err(
            last_line,
            ParseErrorKind::EdgeCountMismatch { expected: m, found: edges.len() },
        ));
    }
    let (_, k) = k.ok_or(err(last_line, ParseErrorKind::MissingBound))?;

    let mut labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    for (&v, (_, name)) in &names {
        labels[v] = name.clone();
    }
    let mut owner: HashMap<&str, VertexId> = HashMap::new();
    for (v, label) in labels.iter().enumerate() {
        if let Some(&prev) = owner.get(label.as_str()) {
            let line = [prev, v]
                .iter()
                .filter_map(|u| names.get(u).map(|(l, _)| *l))
                .max()
                .unwrap_or(header_line);
            return Err(err(line, ParseErrorKind::DuplicateLabel(label.clone())));
        }
        owner.insert(label, v);
    }

    let mut builder = GraphBuilder::new();
    for label in labels {
        builder.add_vertex(label).expect("labels checked above");
    }
    for (u, v) in edges {
        builder.add_edge(u, v).expect("edges checked above");
    }
    Instance::builder(builder.build(), k as usize)
        .exact(exact)
        .forbidden(forbid.into_keys())
        .necessary(need.into_keys())
        .pairs(pairs)
        .build()
        .map_err(|e| match e {
            InstanceError::BoundOutOfRange { k, n } => {
                err(last_line, ParseErrorKind::BoundOutOfRange { k: k as i64, n })
            }
            other => unreachable!("checked during parsing: {other}"),
        })
}

/// Canonical text form: edges ascending, constraint lines ascending, pairs
/// in instance order, names only where the label is not the default id.
pub fn serialize_instance(inst: &Instance) -> String {
    let g = inst.graph();
    let mut out = String::new();
    writeln!(out, "p ss {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    writeln!(out, "k {}", inst.k()).unwrap();
    if inst.exact() {
        out.push_str("exact\n");
    }
    for v in inst.forbidden() {
        writeln!(out, "forbid {}", v + 1).unwrap();
    }
    for v in inst.necessary() {
        writeln!(out, "need {}", v + 1).unwrap();
    }
    for (a, b) in inst.pairs() {
        writeln!(out, "comp {} {}", a + 1, b + 1).unwrap();
    }
    for v in g.vertices() {
        let label = g.label(v);
        if label != (v + 1).to_string() {
            writeln!(out, "name {} {}", v + 1, label).unwrap();
        }
    }
    out
}

/// Reads an `s` line; `None` means `s NONE`. Ids are returned 0-based.
pub fn parse_solution(text: &str) -> Result<Option<VertexSet>, ParseError> {
    for (line, tokens) in content_lines(text) {
        if tokens[0] != "s" {
            return Err(err(line, ParseErrorKind::UnknownDirective(tokens[0].to_string())));
        }
        if tokens.len() == 2 && tokens[1] == "NONE" {
            return Ok(None);
        }
        let mut set = VertexSet::new();
        for tok in &tokens[1..] {
            let id = parse_int(tok, line, "s")?;
            if id < 1 {
                return Err(err(line, ParseErrorKind::NonPositiveId(id)));
            }
            set.insert(id as usize - 1);
        }
        return Ok(Some(set));
    }
    Err(err(0, ParseErrorKind::MissingSolution))
}

pub fn serialize_solution(solution: Option<&VertexSet>) -> String {
    match solution {
        None => "s NONE\n".to_string(),
        Some(set) => {
            let mut out = String::from("s");
            for v in set {
                write!(out, " {}", v + 1).unwrap();
            }
            out.push('\n');
            out
        }
    }
}
