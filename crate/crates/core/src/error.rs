use thiserror::Error;

/// Errors raised by graph construction, solvers, embeddings and certification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph is not connected")]
    NotConnected,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("graph is not a tree")]
    NotATree,
    #[error("instance too large: {what} is {size}, cap is {cap}")]
    InstanceTooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("domain has fewer than two points")]
    DegenerateDomain,
    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn too_large(what: &'static str, size: usize, cap: usize) -> Self {
        Error::InstanceTooLarge { what, size, cap }
    }
}
