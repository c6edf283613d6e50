//! Error type shared across the engine.

/// Errors produced by the engine. Checks that merely come out false are not
/// errors; these cover malformed inputs and unsupported requests.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A partition or weight does not fit the declared rank.
    #[error("rank mismatch: {0}")]
    RankMismatch(String),

    /// An inadmissible `(l, m, n, j)` configuration or bad engine setting.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// A graded identity was requested on inputs of incompatible degree.
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    /// Substitution hit a zero value at a variable with negative exponent.
    #[error("evaluation error: {0}")]
    Eval(String),

    /// A brute-force oracle was asked to run beyond its configured cap.
    #[error("oracle refused: {0}")]
    OracleRefused(String),

    /// Arithmetic on truncated series with different caps.
    #[error("series cap mismatch: {0}")]
    CapMismatch(String),

    /// A weight that must be dominant is not.
    #[error("not dominant: {0}")]
    NonDominant(String),

    /// Malformed textual input (partition or weight literals, rationals).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
