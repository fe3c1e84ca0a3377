use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graphs are limited to 64 vertices, got {0}")]
    TooManyVertices(usize),

    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex sets overlap")]
    OverlappingSets,

    #[error("vertex set is empty")]
    EmptySet,

    #[error("vertex {0} belongs to the set it is compared against")]
    VertexInSet(usize),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("input contains a hole-with-hat: hole {hole:?}, hat {hat}")]
    HoleWithHat { hole: Vec<usize>, hat: usize },

    #[error("weighted graph is not {eps}-coherent: {detail}")]
    NotCoherent { eps: String, detail: String },

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("verdict falls inside the tolerance band: {0}")]
    Inconclusive(String),

    #[error("{limit}: {what}")]
    TooLarge { what: String, limit: String },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, column, message: message.into() }
    }
}
