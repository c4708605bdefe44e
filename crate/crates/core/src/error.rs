//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors raised by graph construction, evaluators, and solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An edge connects a vertex to itself.
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    /// The same unordered vertex pair appears twice in the edge list.
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    /// An edge endpoint is outside `[0, n)`.
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    /// A cluster quality was requested for an empty vertex set.
    #[error("cluster quality is undefined for an empty cluster")]
    EmptyCluster,

    /// Degree weights are undefined when some vertex has degree zero.
    #[error("vertex {0} is isolated; degree weights are undefined")]
    IsolatedVertex(usize),

    /// The operation needs at least one edge.
    #[error("operation is undefined on a graph with no edges")]
    EmptyGraph,

    /// A vertex weight is zero, negative, or not finite.
    #[error("weight {value} for vertex {vertex} is not strictly positive")]
    NonPositiveWeight { vertex: usize, value: f64 },

    /// Exact (rational) evaluation requires integer vertex weights.
    #[error("exact evaluation requires integer vertex weights")]
    NonIntegralWeights,

    /// A clustering or partial clustering violates its structural invariants.
    #[error("invalid clustering: {0}")]
    InvalidClustering(String),

    /// A CVWAP instance violates the per-edge weight condition.
    #[error("invalid CVWAP instance: {0}")]
    InvalidInstance(String),

    /// The exact CVWAP solver is capped to small instances.
    #[error("CVWAP instance with |T| = {t_len} exceeds the exact-solver cap of {max}")]
    InstanceTooLarge { t_len: usize, max: usize },

    /// The brute-force oracle is capped to small vertex sets.
    #[error("{n} vertices exceed the oracle cap of {max}")]
    TooLarge { n: usize, max: usize },

    /// The approximation pipeline only supports the regularizer range [0, 1].
    #[error("lambda = {0} is outside the supported range [0, 1]")]
    LambdaOutOfRange(f64),

    /// A Monte-Carlo audit needs at least one trial.
    #[error("trial count must be at least 1")]
    InvalidTrials,
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
