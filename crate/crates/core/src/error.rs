use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("unknown graph tag `{0}`")]
    UnknownGraph(String),

    #[error("search space of {size} candidates exceeds the cap of {cap} ({what})")]
    CapExceeded { what: String, size: u128, cap: u128 },

    #[error("certificate: {0}")]
    Certificate(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid_arg(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
