use thiserror::Error;

/// Everything that can go wrong inside the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable lists differ: [{left}] vs [{right}]")]
    VariableMismatch { left: String, right: String },

    #[error("no value assigned to variable `{0}`")]
    MissingVariable(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid drawing: {}", .0.join("; "))]
    InvalidDrawing(Vec<String>),

    #[error("invalid marked configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("vertex `{to}` is not reachable from `{from}`")]
    Unreachable { from: String, to: String },

    #[error("enumeration limit exceeded: more than {limit} {what}")]
    LimitExceeded { what: &'static str, limit: usize },

    #[error("mixed-sign determinant: neither det M nor -det M has nonnegative coefficients (det M = {0})")]
    MixedSignDeterminant(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid region: {0}")]
    InvalidRegion(String),

    #[error("no tilings: {white} white holes but {black} black holes")]
    NoTilings { white: usize, black: usize },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
