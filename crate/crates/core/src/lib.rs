//! Secure sets in graphs.
//!
//! A vertex set `S` is *secure* when every subset `X ⊆ S` has at least as
//! many defenders `|N[X] ∩ S|` as attackers `|N[X] \ S|`. This crate checks
//! security, decides the eight constrained variants of the minimum secure
//! set problem by exhaustive search, evaluates ∃∀ DNF formulas, and builds
//! the gadget reductions that connect the two.

pub mod format;
pub mod graph;
pub mod instance;
pub mod qbf;
pub mod samples;
pub mod security;
pub mod reductions;
pub mod solver;

pub use graph::{Graph, GraphBuilder, GraphError, VertexId, VertexSet};
pub use instance::{ConstraintClass, Instance, InstanceBuilder, InstanceError, Solution, Variant};
