use std::io;

/// Errors shared by oracles, estimators, generators and loaders.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A vertex id outside `[0, n)` was passed to a graph query.
    #[error("unknown vertex id {id} (graph has {n} vertices)")]
    UnknownVertex { id: usize, n: usize },

    /// A sampling query was issued against a graph with no edges.
    #[error("graph has no edges")]
    EmptyGraph,

    /// A sampling query was issued against a table with no rows.
    #[error("table has no rows")]
    EmptyTable,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A generator was asked for parameters that violate its feasibility
    /// constraints; the message names the violated constraint.
    #[error("constraint violated: {0}")]
    Constraint(String),

    /// A sampled tail breaks the advertised in/out degree-ratio bound, so its
    /// acceptance probability would exceed one.
    #[error(
        "degree ratio bound violated at vertex {vertex}: \
         in-degree {deg_in} exceeds r * out-degree with deg_out = {deg_out}, r = {r}"
    )]
    RatioViolation {
        vertex: usize,
        deg_in: u64,
        deg_out: u64,
        r: f64,
    },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn constraint(msg: impl Into<String>) -> Self {
        Error::Constraint(msg.into())
    }
}
