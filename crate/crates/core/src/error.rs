use thiserror::Error;

use crate::gbasis::RewriteSystem;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("no primitive cube root of unity in {0}")]
    NoCubeRoot(String),

    #[error("letter index {letter} out of range for an alphabet of {size} generators")]
    AlphabetMismatch { letter: usize, size: usize },

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    /// The completion exceeded its degree or rule budget. The partial
    /// (uncertified) system is kept for inspection.
    #[error("completion overflow: {reason}")]
    CompletionOverflow {
        reason: String,
        partial: Box<RewriteSystem>,
    },

    #[error("rewrite system is not certified")]
    Uncertified,

    #[error("algebra is infinite-dimensional")]
    InfiniteDimensional,

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("trace-form radical criterion invalid in characteristic {characteristic} for dimension {dim}")]
    CriterionInvalid { characteristic: u64, dim: usize },

    #[error("element is not idempotent")]
    NotIdempotent,

    #[error("parameter domain: {0}")]
    ParameterDomain(String),

    #[error("x2 is not invertible: gamma^3 + beta^3 = 0")]
    NotInvertible,

    #[error("unknown {kind}: {name}")]
    Unknown { kind: &'static str, name: String },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
