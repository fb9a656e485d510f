//! Reflection-perpendicular subgroups of Coxeter groups.
//!
//! Given a finite-rank Coxeter graph and a generator `x`, this crate computes
//! the subgroup `W^{⊥x}` generated by the reflections along roots orthogonal
//! to `α_x`: its Coxeter presentation (from three-vertex subgraph patterns of
//! the odd Coxeter graph), its finite part (from graph-combinatorial
//! hypothesis chains), and sufficient conditions for reflection independence.
//! A numeric root-system oracle cross-checks everything on finite groups.

pub mod error;
pub mod graph;
pub mod oracle;
pub mod presentation;
pub mod corpus;
pub mod finite_part;
pub mod types;
pub mod reflindep;
pub mod crosscheck;
pub mod report;
pub mod cli;

pub use error::{CoxError, Result};
pub use graph::{CoxeterGraph, CoxeterMatrix, Label, Vertex, VertexSet};
pub use types::IrreducibleType;
