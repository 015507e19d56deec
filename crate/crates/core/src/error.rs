use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("series did not converge within {max_terms} terms (nu = {nu}, x = {x})")]
    Convergence { nu: f64, x: f64, max_terms: usize },
    #[error("argument x = {x} exceeds the overflow guard x_max = {x_max}")]
    OverflowRisk { x: f64, x_max: f64 },
    #[error("quadrature did not reach tolerance: estimated error {estimate:e} after {intervals} intervals")]
    Quadrature { estimate: f64, intervals: usize },
    #[error("invalid bracket: lower {lower} exceeds upper {upper}")]
    InvalidBracket { lower: f64, upper: f64 },
    #[error("no registered bound is valid at nu = {0}")]
    NoValidBound(f64),
    #[error("unknown bound id `{0}`")]
    UnknownBound(String),
    #[error("no sign change of {a} - {b} on [{lo}, {hi}]")]
    NoSignChange { a: String, b: String, lo: f64, hi: f64 },
    #[error("{count} sign changes of {a} - {b} on [{lo}, {hi}]; expected exactly one")]
    MultipleSignChanges { a: String, b: String, lo: f64, hi: f64, count: usize },
    #[error("unknown table id {0}; expected 1..=6")]
    UnknownTable(u8),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
