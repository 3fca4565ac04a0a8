//! Polynomial reductions between the secure-set variants, starting from
//! ∃∀ DNF formulas, with solution mappings in both directions.
//!
//! Chain: `qsat2-essfnc` → `essfnc-essfn` → `essfn-essf` → `essf-ssf` →
//! `drop-forbidden`, ending at the plain at-most-k problem. Each step is a
//! [`Reduction`] registered by name; its [`ReductionMap`] drives [`lift`]
//! (input solution → output solution) and [`project`] (back again).

mod complementary;
mod embed;
mod exact;
mod forbidden;
pub mod map;
mod necessary;
mod qsat;

use thiserror::Error;

use crate::graph::{GraphBuilder, GraphError, VertexId, VertexSet};
use crate::instance::{Instance, InstanceError};
use crate::qbf::{Assignment, QSat2Formula};
use crate::solver::{check_solution, SolutionCheck};

pub use complementary::{predicted_size as complementary_size, reduce_essfnc_to_essfn};
pub use embed::embed_trivial;
pub use exact::{predicted_size as exact_size, reduce_essf_to_ssf};
pub use forbidden::{eliminate_forbidden, predicted_size as forbidden_size};
pub use map::{parse_map, serialize_map, MapKind, Provenance, ReductionMap};
pub use necessary::{predicted_size as necessary_size, reduce_essfn_to_essf};
pub use qsat::{predicted_size as qsat_size, reduce_qsat2_to_essfnc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("formula is not normalized (contradictory or purely existential term)")]
    NotNormalized,
    #[error("precondition violated: {0}")]
    Refused(String),
    #[error("input is trivially negative: {0}")]
    TriviallyNegative(String),
    #[error("invalid solution: {0}")]
    InvalidSolution(String),
    #[error("map does not fit: {0}")]
    MapMismatch(String),
    #[error("map line {line}: {msg}")]
    MapParse { line: usize, msg: String },
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// What a reduction consumes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Formula(QSat2Formula),
    Instance(Instance),
}

/// A solution on the input side of a reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SourceSolution {
    /// Existential witness of a formula.
    Assignment(Assignment),
    /// Vertex set of an input instance (0-based ids).
    Vertices(VertexSet),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduced {
    pub instance: Instance,
    pub map: ReductionMap,
}

/// One construction, selectable by name.
pub trait Reduction: Send + Sync {
    fn name(&self) -> &'static str;
    fn kind(&self) -> MapKind;
    /// Whether the input is a formula rather than an instance.
    fn takes_formula(&self) -> bool {
        false
    }
    fn reduce(&self, source: &Source) -> Result<Reduced, ReductionError>;
    /// Output vertex count, computed without building the output.
    fn predicted_size(&self, source: &Source) -> Result<usize, ReductionError>;
}

fn expect_instance<'a>(name: &str, source: &'a Source) -> Result<&'a Instance, ReductionError> {
    match source {
        Source::Instance(i) => Ok(i),
        Source::Formula(_) => Err(ReductionError::Refused(format!("{name} takes an instance, not a formula"))),
    }
}

macro_rules! instance_reduction {
    ($ty:ident, $name:literal, $kind:expr, $reduce:expr, $size:expr) => {
        struct $ty;
        impl Reduction for $ty {
            fn name(&self) -> &'static str {
                $name
            }
            fn kind(&self) -> MapKind {
                $kind
            }
            fn reduce(&self, source: &Source) -> Result<Reduced, ReductionError> {
                $reduce(expect_instance($name, source)?)
            }
            fn predicted_size(&self, source: &Source) -> Result<usize, ReductionError> {
                $size(expect_instance($name, source)?)
            }
        }
    };
}

struct QsatReduction;

impl Reduction for QsatReduction {
    fn name(&self) -> &'static str {
        "qsat2-essfnc"
    }
    fn kind(&self) -> MapKind {
        MapKind::Qsat2Essfnc
    }
    fn takes_formula(&self) -> bool {
        true
    }
    fn reduce(&self, source: &Source) -> Result<Reduced, ReductionError> {
        match source {
            Source::Formula(f) => reduce_qsat2_to_essfnc(f),
            Source::Instance(_) => Err(ReductionError::Refused("qsat2-essfnc takes a formula".into())),
        }
    }
    fn predicted_size(&self, source: &Source) -> Result<usize, ReductionError> {
        match source {
            Source::Formula(f) => Ok(qsat_size(f)),
            Source::Instance(_) => Err(ReductionError::Refused("qsat2-essfnc takes a formula".into())),
        }
    }
}

instance_reduction!(ComplementaryReduction, "essfnc-essfn", MapKind::EssfncEssfn, reduce_essfnc_to_essfn, |i| Ok(
    complementary_size(i)
));
instance_reduction!(NecessaryReduction, "essfn-essf", MapKind::EssfnEssf, reduce_essfn_to_essf, |i| Ok(
    necessary_size(i)
));
instance_reduction!(ExactReduction, "essf-ssf", MapKind::EssfSsf, reduce_essf_to_ssf, |i| Ok(exact_size(i)));
instance_reduction!(ForbiddenReduction, "drop-forbidden", MapKind::DropForbidden, eliminate_forbidden, |i| Ok(
    forbidden_size(i)
));
instance_reduction!(
    EmbedFn,
    "embed-fn",
    MapKind::Embed,
    |i| embed_trivial(i, crate::instance::ConstraintClass::FN),
    |i: &Instance| Ok(i.graph().vertex_count())
);
instance_reduction!(
    EmbedFnc,
    "embed-fnc",
    MapKind::Embed,
    |i| embed_trivial(i, crate::instance::ConstraintClass::FNC),
    |i: &Instance| Ok(i.graph().vertex_count())
);

static REGISTRY: [&dyn Reduction; 7] = [
    &QsatReduction,
    &ComplementaryReduction,
    &NecessaryReduction,
    &ExactReduction,
    &ForbiddenReduction,
    &EmbedFn,
    &EmbedFnc,
];

/// All registered reductions, chain order first.
pub fn registry() -> &'static [&'static dyn Reduction] {
    &REGISTRY
}

pub fn reduction(name: &str) -> Option<&'static dyn Reduction> {
    REGISTRY.iter().copied().find(|r| r.name() == name)
}

/// Registered names of the full chain from formulas to plain instances.
pub const CHAIN: [&str; 5] = ["qsat2-essfnc", "essfnc-essfn", "essfn-essf", "essf-ssf", "drop-forbidden"];

/// Maps an input solution forward to a solution of `target`, the output
/// instance the map was produced with. The result is validated against
/// `target`; failure means the input solution was not a solution.
pub fn lift(map: &ReductionMap, target: &Instance, solution: &SourceSolution) -> Result<VertexSet, ReductionError> {
    if map.vertices.len() != target.graph().vertex_count() {
        return Err(ReductionError::MapMismatch(format!(
            "map describes {} vertices, instance has {}",
            map.vertices.len(),
            target.graph().vertex_count()
        )));
    }
    let lifted = match (map.kind, solution) {
        (MapKind::Qsat2Essfnc, SourceSolution::Assignment(a)) => qsat::lift(map, target, a)?,
        (MapKind::Qsat2Essfnc, SourceSolution::Vertices(_)) => {
            return Err(ReductionError::MapMismatch("formula maps lift assignments".into()))
        }
        (_, SourceSolution::Assignment(_)) => {
            return Err(ReductionError::MapMismatch("instance maps lift vertex sets".into()))
        }
        (kind, SourceSolution::Vertices(s)) => {
            let mut out = orig_image(map, s)?;
            match kind {
                MapKind::EssfncEssfn => complementary::extend(map, s, &mut out)?,
                MapKind::EssfnEssf => necessary::extend(map, s, &mut out),
                MapKind::EssfSsf => exact::extend(map, s, &mut out),
                _ => {}
            }
            out
        }
    };
    match check_solution(target, &lifted) {
        SolutionCheck::Valid => Ok(lifted),
        SolutionCheck::Violates(why) => Err(ReductionError::InvalidSolution(why)),
        SolutionCheck::Insecure(w) => Err(ReductionError::InvalidSolution(format!(
            "lifted set is not secure: subset of {} members has {} defenders and {} attackers",
            w.subset.len(),
            w.defenders,
            w.attackers
        ))),
    }
}

/// Maps an output solution back to the input side: restriction to original
/// vertices, or the existential assignment for formula maps.
pub fn project(map: &ReductionMap, solution: &VertexSet) -> Result<SourceSolution, ReductionError> {
    if let Some(&v) = solution.iter().find(|&&v| v >= map.vertices.len()) {
        return Err(ReductionError::MapMismatch(format!("vertex {} not described by the map", v + 1)));
    }
    if map.kind == MapKind::Qsat2Essfnc {
        return qsat::project(map, solution).map(SourceSolution::Assignment);
    }
    Ok(SourceSolution::Vertices(
        solution
            .iter()
            .filter_map(|&v| match map.vertices[v] {
                Provenance::Orig(i) => Some(i),
                _ => None,
            })
            .collect(),
    ))
}

fn orig_image(map: &ReductionMap, s: &VertexSet) -> Result<VertexSet, ReductionError> {
    let index = map.orig_index();
    s.iter()
        .map(|v| {
            index
                .get(v)
                .copied()
                .ok_or_else(|| ReductionError::InvalidSolution(format!("vertex {} is not an input vertex", v + 1)))
        })
        .collect()
}

/// Output graph under construction together with its provenance map.
pub(crate) struct Emitter {
    builder: GraphBuilder,
    map: ReductionMap,
}

impl Emitter {
    pub(crate) fn new(kind: MapKind) -> Self {
        Emitter { builder: GraphBuilder::new(), map: ReductionMap::new(kind) }
    }

    /// Starts from a copy of `inst`'s graph; copies keep their ids and labels.
    pub(crate) fn copying(kind: MapKind, inst: &Instance) -> Self {
        let mut map = ReductionMap::new(kind);
        map.vertices = inst.graph().vertices().map(Provenance::Orig).collect();
        map.summary = vec![
            ("n".into(), vec![inst.graph().vertex_count() as u64]),
            ("k".into(), vec![inst.k() as u64]),
        ];
        Emitter { builder: inst.graph().to_builder(), map }
    }

    pub(crate) fn summary(&mut self, key: &str, values: Vec<u64>) {
        self.map.summary.push((key.into(), values));
    }

    /// Adds a vertex labelled `label`, or `label~2`, `label~3`, ... if an
    /// input label already uses it.
    pub(crate) fn vertex(&mut self, label: String, prov: Provenance) -> VertexId {
        let mut attempt = 1;
        loop {
            let candidate = if attempt == 1 { label.clone() } else { format!("{label}~{attempt}") };
            match self.builder.add_vertex(candidate) {
                Ok(id) => {
                    self.map.vertices.push(prov);
                    return id;
                }
                Err(GraphError::DuplicateLabel(_)) => attempt += 1,
                Err(e) => panic!("generated label rejected: {e}"),
            }
        }
    }

    pub(crate) fn edge(&mut self, u: VertexId, v: VertexId) {
        self.builder.add_edge(u, v).expect("constructions never repeat an edge");
    }

    pub(crate) fn clique(&mut self, members: &[VertexId]) {
        self.builder.add_clique(members).expect("constructions never repeat an edge");
    }

    pub(crate) fn finish(self) -> (crate::graph::Graph, ReductionMap) {
        (self.builder.build(), self.map)
    }
}
