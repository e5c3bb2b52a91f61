use thiserror::Error;

/// Errors raised across the crate.
///
/// Parse errors carry the 1-based line they were detected on; structural
/// errors found while parsing are wrapped in [`Error::AtLine`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a digraph needs at least one vertex")]
    EmptyVertexSet,
    #[error("loop arc at vertex {vertex}")]
    LoopArc { vertex: usize },
    #[error("duplicate arc ({tail}, {head})")]
    DuplicateArc { tail: usize, head: usize },
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("digraph is not strongly connected")]
    NotStronglyConnected,
    #[error("graph is not connected")]
    NotConnected,
    #[error("digraph is not regular")]
    NotRegular,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("{family} needs order at least {min}, got {n}")]
    OrderTooSmall {
        family: &'static str,
        n: usize,
        min: usize,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("order {n} exceeds the cap {cap} (override required)")]
    OrderCapExceeded { n: usize, cap: usize },
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("no strongly connected sample after {attempts} attempts")]
    RetriesExhausted { attempts: u32 },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("header declares {declared} arcs but {found} arc lines follow")]
    HeaderMismatch { declared: usize, found: usize },
    #[error("line {line}: {source}")]
    AtLine { line: usize, source: Box<Error> },
    #[error(
        "distance matrix for order {n} exceeds the {threshold}-vertex materialization threshold"
    )]
    MatrixTooLarge { n: usize, threshold: usize },
}

impl Error {
    /// The error with any line attribution stripped.
    pub fn root(&self) -> &Error {
        match self {
            Error::AtLine { source, .. } => source.root(),
            other => other,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
