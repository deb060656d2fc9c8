use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),
    #[error("invalid vertex label `{0}`")]
    InvalidLabel(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("loop at vertex `{0}`")]
    Loop(String),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(String, String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("vertex set is not a connected component of the graph minus the star of `{0}`")]
    NotAComponent(String),
    #[error("expected distinct vertices, got `{0}` twice")]
    SameVertex(String),
    #[error("vertices `{0}` and `{1}` are linked")]
    Linked(String, String),
    #[error("`{1}` is not in the link of `{0}`")]
    NotInLink(String, String),
    #[error("`{0}` is central")]
    CentralVertex(String),
    #[error("`{0}` and `{1}` do not form a SIL pair")]
    NotSilPair(String, String),
    #[error("component is not shared by `{0}` and `{1}`")]
    NotShared(String, String),
    #[error("words or automorphisms live over different graphs")]
    AmbientMismatch,
    #[error("word of length {len} exceeds limit {limit}")]
    WordTooLong { len: usize, limit: usize },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, col, msg: msg.into() }
    }
}
