use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{series} did not converge within {terms} terms")]
    NonConvergence { series: &'static str, terms: usize },

    #[error("composition enumeration needs {count} terms, above the cap of {cap}")]
    CompositionCap { count: u128, cap: u64 },

    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),

    #[error("unsupported quadrature scheme: {0}")]
    UnsupportedScheme(String),

    #[error("radicand {0:e} is negative beyond rounding; simplex point is corrupt")]
    NegativeRadicand(f64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
