use thiserror::Error;

/// Failure modes shared by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Bad parameters: arity mismatch, out-of-range codimension, zero exponent, ...
    #[error("usage error: {0}")]
    Usage(String),
    /// The operation is undefined on this input (e.g. the initial degree of the zero ideal).
    #[error("domain error: {0}")]
    Domain(String),
    /// A configured cap was exceeded before the computation finished.
    #[error("resource cap exceeded: {what} (cap = {cap})")]
    Resource { what: String, cap: u64 },
}

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn resource(what: impl Into<String>, cap: u64) -> Self {
        Error::Resource {
            what: what.into(),
            cap,
        }
    }

    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Usage(_) => "usage",
            Error::Domain(_) => "domain",
            Error::Resource { .. } => "resource",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
