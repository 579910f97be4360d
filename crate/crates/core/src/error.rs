use thiserror::Error;

/// Errors produced anywhere in the pipeline.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid json hypergraph: {0}")]
    Json(String),

    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("vertex {0} is not covered by any edge")]
    Uncovered(usize),

    #[error("work cap exceeded: {what} needs {needed} units, cap is {cap}")]
    WorkCap {
        what: &'static str,
        needed: String,
        cap: u64,
    },

    #[error("polytope is unbounded in coordinate {0}")]
    Unbounded(usize),

    #[error("unsupported inequality row {0}: only packing rows and nonnegativity rows are counted")]
    UnsupportedRow(usize),

    #[error("not enough counts: need {needed}, have {have}")]
    TooFewCounts { needed: usize, have: usize },

    #[error("denominator hypothesis rejected: coefficient of x^{degree} is {value}")]
    DenominatorRejected { degree: usize, value: String },

    #[error("pole-order violation: (1-x) multiplicity {found}, expected {expected}")]
    PoleOrder { found: usize, expected: usize },

    #[error("repeated hyperedges: theorem checks assume a simple hypergraph")]
    RepeatedEdges,

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
