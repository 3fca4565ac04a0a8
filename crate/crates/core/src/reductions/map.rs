//! Provenance maps: which input vertex or gadget role each output vertex of
//! a reduction plays.
//!
//! ```text
//! c <comment>
//! p ssmap <kind> <n_out>
//! i <key> <value> ...
//! v <id> orig <input-id>
//! v <id> gadget <family> <index> ...
//! ```
//!
//! Vertex ids are 1-based. Gadget indices that name a vertex of the input
//! instance are 1-based input ids as well.

use std::collections::{BTreeMap, HashSet};
use std::fmt::{self, Write as _};

use crate::graph::VertexId;

use super::ReductionError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MapKind {
    Qsat2Essfnc,
    EssfncEssfn,
    EssfnEssf,
    EssfSsf,
    DropForbidden,
    Embed,
}

impl MapKind {
    pub const ALL: [MapKind; 6] = [
        MapKind::Qsat2Essfnc,
        MapKind::EssfncEssfn,
        MapKind::EssfnEssf,
        MapKind::EssfSsf,
        MapKind::DropForbidden,
        MapKind::Embed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MapKind::Qsat2Essfnc => "qsat2-essfnc",
            MapKind::EssfncEssfn => "essfnc-essfn",
            MapKind::EssfnEssf => "essfn-essf",
            MapKind::EssfSsf => "essf-ssf",
            MapKind::DropForbidden => "drop-forbidden",
            MapKind::Embed => "embed",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    /// Gadget families this construction may emit.
    pub fn families(self) -> &'static [&'static str] {
        match self {
            MapKind::Qsat2Essfnc => &[
                "x",
                "x_bar",
                "y",
                "y_bar",
                "y_tri",
                "y_bar_tri",
                "y_prime_tri",
                "y_box",
                "d1_box",
                "d2_box",
                "t_bar_hub",
                "t",
                "t_bar",
                "t_bar_box",
                "t_bar_tri",
                "t_prime",
                "t_bar_prime",
                "t_prime_box",
                "t_bar_prime_box",
            ],
            MapKind::EssfncEssfn => &["pair_tri", "pair_hub", "pair_open", "pair_box"],
            MapKind::EssfnEssf => &["c_open", "c_box"],
            MapKind::EssfSsf => &["a_open", "a_box", "w", "f_box"],
            MapKind::DropForbidden => &["fan"],
            MapKind::Embed => &[],
        }
    }
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Role of one output vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// Copy of an input vertex (0-based input id).
    Orig(VertexId),
    /// Gadget vertex. Indices are as written in the map file.
    Gadget { family: &'static str, indices: Vec<usize> },
}

impl Provenance {
    pub fn gadget(family: &'static str, indices: impl Into<Vec<usize>>) -> Self {
        Provenance::Gadget { family, indices: indices.into() }
    }

    pub fn family(&self) -> Option<&'static str> {
        match self {
            Provenance::Gadget { family, .. } => Some(family),
            Provenance::Orig(_) => None,
        }
    }

    pub fn indices(&self) -> &[usize] {
        match self {
            Provenance::Gadget { indices, .. } => indices,
            Provenance::Orig(_) => &[],
        }
    }

    pub fn is(&self, family: &str) -> bool {
        self.family() == Some(family)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionMap {
    pub kind: MapKind,
    /// Input summary, e.g. `nx`, `ny`, `nt` or `n`, `k`.
    pub summary: Vec<(String, Vec<u64>)>,
    /// Provenance of output vertex `i`, indexed by 0-based output id.
    pub vertices: Vec<Provenance>,
}

impl ReductionMap {
    pub fn new(kind: MapKind) -> Self {
        ReductionMap { kind, summary: Vec::new(), vertices: Vec::new() }
    }

    pub fn summary_value(&self, key: &str) -> Option<&[u64]> {
        self.summary.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_slice())
    }

    pub fn summary_scalar(&self, key: &str) -> Option<u64> {
        match self.summary_value(key) {
            Some([v]) => Some(*v),
            _ => None,
        }
    }

    pub(crate) fn require_scalar(&self, key: &str) -> Result<u64, ReductionError> {
        self.summary_scalar(key)
            .ok_or_else(|| ReductionError::MapMismatch(format!("map summary lacks `{key}`")))
    }

    /// Output id of each orig-tagged vertex, keyed by input id.
    pub fn orig_index(&self) -> BTreeMap<VertexId, VertexId> {
        self.vertices
            .iter()
            .enumerate()
            .filter_map(|(out, p)| match p {
                Provenance::Orig(i) => Some((*i, out)),
                _ => None,
            })
            .collect()
    }

    /// Output ids of gadget vertices of `family` whose indices start with `prefix`.
    pub fn gadgets<'a>(&'a self, family: &'a str, prefix: &'a [usize]) -> impl Iterator<Item = VertexId> + 'a {
        self.vertices
            .iter()
            .enumerate()
            .filter(move |(_, p)| p.is(family) && p.indices().starts_with(prefix))
            .map(|(i, _)| i)
    }

    /// The unique gadget vertex with exactly these indices.
    pub fn gadget(&self, family: &str, indices: &[usize]) -> Option<VertexId> {
        self.vertices.iter().position(|p| p.is(family) && p.indices() == indices)
    }
}

pub fn serialize_map(map: &ReductionMap) -> String {
    let mut out = String::new();
    writeln!(out, "p ssmap {} {}", map.kind, map.vertices.len()).unwrap();
    for (key, values) in &map.summary {
        out.push_str("i ");
        out.push_str(key);
        for v in values {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    for (i, p) in map.vertices.iter().enumerate() {
        match p {
            Provenance::Orig(v) => writeln!(out, "v {} orig {}", i + 1, v + 1).unwrap(),
            Provenance::Gadget { family, indices } => {
                write!(out, "v {} gadget {family}", i + 1).unwrap();
                for x in indices {
                    write!(out, " {x}").unwrap();
                }
                out.push('\n');
            }
        }
    }
    out
}

fn map_err(line: usize, msg: impl Into<String>) -> ReductionError {
    ReductionError::MapParse { line, msg: msg.into() }
}

fn number<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T, ReductionError> {
    tok.parse().map_err(|_| map_err(line, format!("malformed number {tok:?}")))
}

pub fn parse_map(text: &str) -> Result<ReductionMap, ReductionError> {
    let mut header: Option<(MapKind, usize)> = None;
    let mut summary = Vec::new();
    let mut slots: Vec<Option<Provenance>> = Vec::new();
    let mut seen_orig = HashSet::new();
    let mut last = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last = line;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        let Some(&tag) = tokens.first() else { continue };
        if tag == "c" {
            continue;
        }
        let Some((kind, n)) = header else {
            if tag != "p" || tokens.len() != 4 || tokens[1] != "ssmap" {
                return Err(map_err(line, "expected `p ssmap <kind> <n_out>` header"));
            }
            let kind = MapKind::from_name(tokens[2])
                .ok_or_else(|| map_err(line, format!("unknown map kind {:?}", tokens[2])))?;
            let n: usize = number(tokens[3], line)?;
            header = Some((kind, n));
            slots = vec![None; n];
            continue;
        };
        match tag {
            "i" => {
                let key = tokens.get(1).ok_or_else(|| map_err(line, "summary line lacks a key"))?;
                let values = tokens[2..].iter().map(|t| number(t, line)).collect::<Result<_, _>>()?;
                summary.push((key.to_string(), values));
            }
            "v" => {
                if tokens.len() < 3 {
                    return Err(map_err(line, "truncated vertex line"));
                }
                let id: usize = number(tokens[1], line)?;
                if id == 0 || id > n {
                    return Err(map_err(line, format!("vertex id {id} outside 1..={n}")));
                }
                let prov = match tokens[2] {
                    "orig" => {
                        if tokens.len() != 4 {
                            return Err(map_err(line, "expected `v <id> orig <input-id>`"));
                        }
                        let input: usize = number(tokens[3], line)?;
                        if input == 0 {
                            return Err(map_err(line, "input ids are 1-based"));
                        }
                        if !seen_orig.insert(input) {
                            return Err(map_err(line, format!("input vertex {input} mapped twice")));
                        }
                        Provenance::Orig(input - 1)
                    }
                    "gadget" => {
                        let name = tokens
                            .get(3)
                            .ok_or_else(|| map_err(line, "gadget line lacks a family"))?;
                        let family = kind
                            .families()
                            .iter()
                            .copied()
                            .find(|f| f == name)
                            .ok_or_else(|| map_err(line, format!("family {name:?} not used by {kind}")))?;
                        let indices = tokens[4..].iter().map(|t| number(t, line)).collect::<Result<_, _>>()?;
                        Provenance::Gadget { family, indices }
                    }
                    other => return Err(map_err(line, format!("unknown provenance {other:?}"))),
                };
                if slots[id - 1].replace(prov).is_some() {
                    return Err(map_err(line, format!("vertex {id} described twice")));
                }
            }
            "p" => return Err(map_err(line, "duplicate header")),
            other => return Err(map_err(line, format!("unknown directive {other:?}"))),
        }
    }
    let Some((kind, _)) = header else {
        return Err(map_err(last, "missing `p ssmap` header"));
    };
    let vertices = slots
        .into_iter()
        .enumerate()
        .map(|(i, p)| p.ok_or_else(|| map_err(last, format!("vertex {} not described", i + 1))))
        .collect::<Result<_, _>>()?;
    Ok(ReductionMap { kind, summary, vertices })
}
