use thiserror::Error;

/// Failure modes shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// An iterative method ran out of iterations; the last bracket is kept
    /// so callers can inspect how far it got.
    #[error("{what} did not converge (last bracket [{lo}, {hi}])")]
    NoConvergence { what: &'static str, lo: f64, hi: f64 },
    /// A root was expected inside an interval but no sign change was found.
    #[error("{what}: no sign change on [{lo}, {hi}]")]
    NotBracketed { what: &'static str, lo: f64, hi: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
