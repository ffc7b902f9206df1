use thiserror::Error;

/// Errors raised while building or querying presentations and quivers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("presentation declares no generators")]
    NoGenerators,
    #[error("generator names must be nonempty")]
    EmptyGeneratorName,
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("forbidden word `{0}` has length <= 1")]
    ShortRelation(String),
    #[error("compact word `{0}` needs every generator name to be a single character")]
    CompactFormUnavailable(String),
    #[error("malformed input: {0}")]
    Json(#[from] serde_json::Error),
    #[error("enumerating words of length {length} needs {candidates} candidates, above the bound {bound}")]
    EnumerationGuard {
        length: usize,
        candidates: String,
        bound: u64,
    },
    #[error("isomorphism search on {vertices} vertices exceeds the vertex bound {bound}")]
    VertexGuard { vertices: usize, bound: usize },
    #[error("word `{0}` is illegal")]
    IllegalWord(String),
    #[error("word `{word}` is shorter than the window width {ell}")]
    WordTooShort { word: String, ell: usize },
    #[error("arrows {0} and {1} are not composable")]
    NotComposable(usize, usize),
    #[error("cannot add path sums of degrees {0} and {1}")]
    Inhomogeneous(usize, usize),
    #[error("matrix dimensions do not match: {0}")]
    DimensionMismatch(String),
    #[error(
        "Veronese index {n} is below the window width {ell}; quadratic presentation not guaranteed"
    )]
    VeroneseBelowBound { n: usize, ell: usize },
    #[error("expected {expected} aliases, got {got}")]
    AliasCount { expected: usize, got: usize },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("ill-formed forbidden path: {0}")]
    IllFormedForbiddenPath(String),
}

impl Error {
    /// True for errors raised by a resource guard rather than by bad input.
    pub fn is_guard(&self) -> bool {
        matches!(
            self,
            Error::EnumerationGuard { .. } | Error::VertexGuard { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
