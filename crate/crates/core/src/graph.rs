//! Undirected simple graphs over dense vertex ids.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

/// Dense vertex identifier, `0..n`.
pub type VertexId = usize;

/// Ordered vertex set. The derived `Ord` on `BTreeSet` compares the sorted
/// member sequences lexicographically, which is the tie-break order used
/// throughout the crate.
pub type VertexSet = BTreeSet<VertexId>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex id {0} out of range (graph has {1} vertices)")]
    VertexOutOfRange(VertexId, usize),
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("empty vertex label")]
    EmptyLabel,
    #[error("vertex label {0:?} contains whitespace")]
    WhitespaceInLabel(String),
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
}

/// An undirected simple graph with a unique label on every vertex.
///
/// Adjacency lists are kept sorted; the graph is immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adjacency: Vec<Vec<VertexId>>,
    edge_count: usize,
}

impl Graph {
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.vertex_count()
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.labels.iter().position(|l| l == label)
    }

    /// Label lookup table for repeated queries.
    pub fn label_index(&self) -> HashMap<&str, VertexId> {
        self.labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect()
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange(v, self.vertex_count()))
        }
    }

    pub fn check_set(&self, xs: &VertexSet) -> Result<(), GraphError> {
        match xs.iter().next_back() {
            Some(&max) => self.check_vertex(max),
            None => Ok(()),
        }
    }

    /// `N[xs]`: every member of `xs` together with all of its neighbours.
    pub fn closed_neighborhood(&self, xs: &VertexSet) -> Result<VertexSet, GraphError> {
        self.check_set(xs)?;
        let mut out = VertexSet::new();
        for &v in xs {
            out.insert(v);
            out.extend(self.adjacency[v].iter().copied());
        }
        Ok(out)
    }

    /// Closed neighbourhood of a single vertex.
    pub fn closed_neighborhood_of(&self, v: VertexId) -> VertexSet {
        let mut out: VertexSet = self.adjacency[v].iter().copied().collect();
        out.insert(v);
        out
    }

    /// Builder pre-populated with this graph, for constructions that extend it.
    pub fn to_builder(&self) -> GraphBuilder {
        GraphBuilder {
            labels: self.labels.clone(),
            label_set: self.labels.iter().cloned().collect(),
            adjacency: self
                .adjacency
                .iter()
                .map(|n| n.iter().copied().collect())
                .collect(),
            edge_count: self.edge_count,
        }
    }
}

/// Incremental graph construction that enforces simplicity and unique labels.
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    labels: Vec<String>,
    label_set: std::collections::HashSet<String>,
    adjacency: Vec<BTreeSet<VertexId>>,
    edge_count: usize,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// `n` vertices labelled with their 1-based decimal ids.
    pub fn with_default_labels(n: usize) -> Self {
        let mut b = Self::new();
        for i in 0..n {
            b.add_vertex((i + 1).to_string()).expect("decimal labels are unique");
        }
        b
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> Result<VertexId, GraphError> {
        let label = label.into();
        if label.is_empty() {
            return Err(GraphError::EmptyLabel);
        }
        if label.chars().any(char::is_whitespace) {
            return Err(GraphError::WhitespaceInLabel(label));
        }
        if !self.label_set.insert(label.clone()) {
            return Err(GraphError::DuplicateLabel(label));
        }
        self.labels.push(label);
        self.adjacency.push(BTreeSet::new());
        Ok(self.labels.len() - 1)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        let n = self.labels.len();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange(x, n));
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !self.adjacency[u].insert(v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adjacency[v].insert(u);
        self.edge_count += 1;
        Ok(())
    }

    /// Adds every edge inside `members`.
    pub fn add_clique(&mut self, members: &[VertexId]) -> Result<(), GraphError> {
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                self.add_edge(u, v)?;
            }
        }
        Ok(())
    }

    pub fn build(self) -> Graph {
        Graph {
            labels: self.labels,
            adjacency: self.adjacency.into_iter().map(|s| s.into_iter().collect()).collect(),
            edge_count: self.edge_count,
        }
    }
}
