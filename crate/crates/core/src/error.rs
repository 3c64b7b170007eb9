use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input text. `position` is a byte offset into the input.
    #[error("parse error at position {position}: {message} (near {token:?})")]
    Syntax {
        position: usize,
        token: String,
        message: String,
    },

    #[error("malformed graph document: {0}")]
    MalformedGraph(String),

    #[error("invalid identifier {0:?}: ids must match [A-Za-z0-9_]+")]
    InvalidId(String),

    #[error("duplicate id {0:?}")]
    DuplicateId(String),

    #[error("edge {edge:?} has dangling endpoint {endpoint:?}")]
    DanglingEndpoint { edge: String, endpoint: String },

    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),

    #[error("unknown edge {0:?}")]
    UnknownEdge(String),

    #[error("unknown component {0}")]
    UnknownComponent(String),

    #[error("vertex set must be a nonempty subset of the graph's vertices")]
    EmptyVertexSet,

    #[error("paths are not composable: {0}")]
    NotComposable(String),

    #[error("range mismatch: {0}")]
    RangeMismatch(String),

    #[error("elements belong to different graphs")]
    GraphMismatch,

    #[error("graph is not a rose (exactly one vertex required, found {0})")]
    NotARose(usize),

    #[error("unknown label {0:?}")]
    UnknownLabel(String),

    #[error("index {0:?} is not in the declared index set")]
    UnknownIndex(String),

    #[error("element {element} is outside {domain}")]
    OutsideDomain { element: String, domain: String },

    #[error("{what} exceeds the materialized bound {bound}")]
    BoundExceeded { what: String, bound: usize },
}

impl Error {
    pub(crate) fn syntax(position: usize, token: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Syntax {
            position,
            token: token.into(),
            message: message.into(),
        }
    }

    /// True for errors caused by malformed text rather than by well-formed
    /// input that names things the graph does not contain.
    pub fn is_syntax(&self) -> bool {
        matches!(self, Error::Syntax { .. })
    }
}
