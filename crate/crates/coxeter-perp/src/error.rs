//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced while building graphs, running analyses or talking to the
/// numeric oracle.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoxError {
    /// A syntax problem in a graph file; `line` is 1-based (0 for JSON input).
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The same vertex pair was given two different labels.
    #[error("contradictory labels for edge {a}-{b}: {first} vs {second}")]
    ContradictoryEdge {
        a: String,
        b: String,
        first: String,
        second: String,
    },

    /// A label smaller than 2 was supplied for a pair of distinct vertices.
    #[error("invalid label {label} for edge {a}-{b}: labels must be at least 2 or inf")]
    InvalidLabel { a: String, b: String, label: String },

    /// An edge joins a vertex to itself.
    #[error("self-loop at vertex {0}")]
    SelfLoop(String),

    /// A vertex name is empty or contains whitespace.
    #[error("invalid vertex name {0:?}")]
    InvalidName(String),

    /// The graph has no vertices.
    #[error("a Coxeter graph needs at least one vertex")]
    EmptyGraph,

    /// A vertex that does not belong to the graph (or tree) was referenced.
    #[error("unknown vertex {0}")]
    UnknownVertex(String),

    /// Preconditions of a tree decomposition are violated.
    #[error("invalid tree decomposition core: {0}")]
    InvalidCore(String),

    /// Two different finite orders were derived for the same pair of classes.
    #[error("inconsistent orders between classes {left} and {right}: {first} vs {second}")]
    InconsistentOrders {
        left: usize,
        right: usize,
        first: u32,
        second: u32,
    },

    /// An inner product does not correspond to any admissible dihedral order.
    #[error("inner product {0} matches no admissible dihedral order")]
    NumericAmbiguity(f64),

    /// A root or group enumeration exceeded its cap.
    #[error("{what} enumeration exceeded the cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, CoxError>;
