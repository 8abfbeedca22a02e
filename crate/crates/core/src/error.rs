use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),

    #[error("duplicate edge `{0}`-`{1}`")]
    DuplicateEdge(String, String),

    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("source and target must be distinct (both `{0}`)")]
    SameEndpoints(String),

    #[error("no geodesic: `{0}` and `{1}` are disconnected")]
    NoGeodesic(String, String),

    #[error("{what} limit exceeded: {count} > {limit}")]
    LimitExceeded {
        what: &'static str,
        count: String,
        limit: u64,
    },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("geodesics are not comparable: {0}")]
    Mismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("vertex-set overlap violation: {0}")]
    Overlap(String),

    #[error("not in the image of phi: {0}")]
    NotInImage(String),

    #[error("construction failed validation: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
