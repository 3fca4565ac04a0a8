//! Problem instances: a graph plus size bound and vertex constraints.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("k = {k} outside 1..={n}")]
    BoundOutOfRange { k: usize, n: usize },
    #[error("vertex {0} is both forbidden and necessary")]
    ForbiddenAndNecessary(VertexId),
    #[error("complementary pair ({0}, {0}) names the same vertex twice")]
    DegeneratePair(VertexId),
    #[error("complementary pair ({0}, {1}) listed more than once")]
    DuplicatePair(VertexId, VertexId),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Which kinds of side constraints a problem variant admits, ordered by
/// generality: every instance of a class is also an instance of the
/// classes above it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConstraintClass {
    Plain,
    /// Forbidden vertices.
    F,
    /// Forbidden and necessary vertices.
    FN,
    /// Forbidden, necessary and complementary pairs.
    FNC,
}

impl ConstraintClass {
    pub fn name(self) -> &'static str {
        match self {
            ConstraintClass::Plain => "plain",
            ConstraintClass::F => "f",
            ConstraintClass::FN => "fn",
            ConstraintClass::FNC => "fnc",
        }
    }
}

/// One of the eight problem variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Variant {
    pub exact: bool,
    pub class: ConstraintClass,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = if self.exact { "exact-secure-set" } else { "secure-set" };
        match self.class {
            ConstraintClass::Plain => f.write_str(base),
            c => write!(f, "{base}-{}", c.name()),
        }
    }
}

/// A decision instance for any of the eight secure-set variants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    graph: Graph,
    k: usize,
    exact: bool,
    forbidden: VertexSet,
    necessary: VertexSet,
    pairs: Vec<(VertexId, VertexId)>,
}

impl Instance {
    pub fn builder(graph: Graph, k: usize) -> InstanceBuilder {
        InstanceBuilder {
            graph,
            k,
            exact: false,
            forbidden: VertexSet::new(),
            necessary: VertexSet::new(),
            pairs: Vec::new(),
        }
    }

    /// Plain at-most-`k` instance without side constraints.
    pub fn plain(graph: Graph, k: usize) -> Result<Self, InstanceError> {
        Self::builder(graph, k).build()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn exact(&self) -> bool {
        self.exact
    }

    pub fn forbidden(&self) -> &VertexSet {
        &self.forbidden
    }

    pub fn necessary(&self) -> &VertexSet {
        &self.necessary
    }

    pub fn pairs(&self) -> &[(VertexId, VertexId)] {
        &self.pairs
    }

    /// Smallest constraint class that admits this instance.
    pub fn constraint_class(&self) -> ConstraintClass {
        if !self.pairs.is_empty() {
            ConstraintClass::FNC
        } else if !self.necessary.is_empty() {
            ConstraintClass::FN
        } else if !self.forbidden.is_empty() {
            ConstraintClass::F
        } else {
            ConstraintClass::Plain
        }
    }

    pub fn variant(&self) -> Variant {
        Variant { exact: self.exact, class: self.constraint_class() }
    }

    /// Whether a set satisfies the size bound and all side constraints
    /// (security is not checked here).
    pub fn admits(&self, s: &VertexSet) -> bool {
        self.constraint_violation(s).is_none()
    }

    /// First side-constraint or size violation of `s`, if any.
    pub fn constraint_violation(&self, s: &VertexSet) -> Option<String> {
        if s.is_empty() {
            return Some("solution is empty".into());
        }
        if let Some(&v) = s.iter().next_back() {
            if v >= self.graph.vertex_count() {
                return Some(format!("vertex id {v} out of range"));
            }
        }
        if self.exact && s.len() != self.k {
            return Some(format!("size {} differs from k = {}", s.len(), self.k));
        }
        if !self.exact && s.len() > self.k {
            return Some(format!("size {} exceeds k = {}", s.len(), self.k));
        }
        if let Some(v) = s.intersection(&self.forbidden).next() {
            return Some(format!("forbidden vertex {} included", self.graph.label(*v)));
        }
        if let Some(v) = self.necessary.difference(s).next() {
            return Some(format!("necessary vertex {} missing", self.graph.label(*v)));
        }
        for &(a, b) in &self.pairs {
            if s.contains(&a) == s.contains(&b) {
                return Some(format!(
                    "complementary pair ({}, {}) not split",
                    self.graph.label(a),
                    self.graph.label(b)
                ));
            }
        }
        None
    }
}

#[derive(Debug, Clone)]
pub struct InstanceBuilder {
    graph: Graph,
    k: usize,
    exact: bool,
    forbidden: VertexSet,
    necessary: VertexSet,
    pairs: Vec<(VertexId, VertexId)>,
}

impl InstanceBuilder {
    pub fn exact(mut self, exact: bool) -> Self {
        self.exact = exact;
        self
    }

    pub fn forbidden(mut self, vs: impl IntoIterator<Item = VertexId>) -> Self {
        self.forbidden.extend(vs);
        self
    }

    pub fn necessary(mut self, vs: impl IntoIterator<Item = VertexId>) -> Self {
        self.necessary.extend(vs);
        self
    }

    pub fn pairs(mut self, ps: impl IntoIterator<Item = (VertexId, VertexId)>) -> Self {
        self.pairs.extend(ps);
        self
    }

    pub fn build(self) -> Result<Instance, InstanceError> {
        let n = self.graph.vertex_count();
        if self.k < 1 || self.k > n {
            return Err(InstanceError::BoundOutOfRange { k: self.k, n });
        }
        self.graph.check_set(&self.forbidden)?;
        self.graph.check_set(&self.necessary)?;
        if let Some(&v) = self.forbidden.intersection(&self.necessary).next() {
            return Err(InstanceError::ForbiddenAndNecessary(v));
        }
        let mut seen = std::collections::HashSet::new();
        for &(a, b) in &self.pairs {
            self.graph.check_vertex(a)?;
            self.graph.check_vertex(b)?;
            if a == b {
                return Err(InstanceError::DegeneratePair(a));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(InstanceError::DuplicatePair(a, b));
            }
        }
        Ok(Instance {
            graph: self.graph,
            k: self.k,
            exact: self.exact,
            forbidden: self.forbidden,
            necessary: self.necessary,
            pairs: self.pairs,
        })
    }
}

/// A non-empty vertex set offered as an answer to an instance.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Solution {
    members: VertexSet,
}

impl Solution {
    /// Returns `None` for the empty set.
    pub fn new(members: VertexSet) -> Option<Self> {
        (!members.is_empty()).then_some(Solution { members })
    }

    pub fn members(&self) -> &VertexSet {
        &self.members
    }

    pub fn into_members(self) -> VertexSet {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}
