use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),

    #[error("loop at vertex `{0}`: simple graphs have no loops")]
    Loop(String),

    #[error("graphs are limited to {max} vertices, got {got}")]
    TooManyVertices { max: usize, got: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("the edge ideal of an edgeless graph is the zero ideal")]
    ZeroIdeal,

    #[error("k = {k} is outside 1..={nu} (the matching number is {nu})")]
    PowerOutOfRange { k: usize, nu: usize },

    #[error("not a matching of the graph: {0}")]
    NotAMatching(String),

    #[error("`{0}` is not a minimal generator")]
    NotAGenerator(String),

    #[error("edge {0} does not divide the monomial")]
    EdgeDoesNotDivide(String),

    #[error("variable index {index} is outside a universe of {size} variables")]
    UniverseMismatch { index: usize, size: usize },

    #[error("generators of mixed degree: expected {expected}, found {found}")]
    MixedDegrees { expected: usize, found: usize },

    #[error("order is not a permutation of the {0} generators")]
    NotAPermutation(usize),

    #[error("{what} is {got}, above the cap of {cap} (raise it with --cap-override)")]
    CapExceeded { what: &'static str, got: usize, cap: usize },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
