use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Denominator of a rational function vanishes at t = 0.
    #[error("denominator has zero constant term")]
    ZeroConstantTerm,

    /// Normalizing a rational function would force non-integer coefficients.
    #[error("cannot normalize: reduced denominator has constant term {0}, expected ±1")]
    NonUnitConstant(String),

    /// A constructor was given an out-of-range or malformed parameter.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The operation is not defined for this group kind.
    #[error("invalid kind: {0}")]
    InvalidKind(String),

    /// Graph has too few nodes for the requested operation.
    #[error("graph too small: {0}")]
    TooSmall(String),

    /// Adjacency matrix is not symmetric (module not self-dual).
    #[error("adjacency matrix is not symmetric; series require a self-dual module")]
    AsymmetricAdjacency,

    /// The trivial node does not reach every node of the graph.
    #[error("graph is not connected from the trivial node; the action is not faithful")]
    DisconnectedGraph,

    /// A tensor-product multiplicity failed the integrality gate.
    #[error("non-integral multiplicity: {0}")]
    NotIntegral(String),

    /// Character rows fail the size-weighted orthonormality test.
    #[error("character rows not orthonormal: {0}")]
    NotOrthonormal(String),

    /// An identity that must produce integers produced a fraction.
    #[error("non-integral result in exact identity: {0}")]
    NonIntegralResult(String),

    /// Structural problem in an ingested character table.
    #[error("malformed character table: {0}")]
    BadCharTable(String),

    /// Structural problem in an ingested graph description.
    #[error("malformed graph: {0}")]
    BadGraph(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    /// An internal cross-check failed; indicates a bug, never bad input.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
