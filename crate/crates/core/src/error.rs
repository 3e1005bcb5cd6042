use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("a truncated series needs order >= 1")]
    EmptySeries,

    #[error("series must start with exactly x (coefficient of x^1 is not 1)")]
    NotNormalized,

    #[error("inexact division in {context}")]
    InexactDivision { context: String },

    #[error("{what} must be at least {min}, got {got}")]
    OutOfRange {
        what: &'static str,
        min: usize,
        got: usize,
    },

    #[error("negative Betti number a_({n},{i}) = {value}")]
    NegativeBetti { n: usize, i: usize, value: String },

    #[error("Poincaré polynomial of M_(0,{n})^delta has degree {degree:?}, expected {expected}")]
    WrongDegree {
        n: usize,
        degree: Option<usize>,
        expected: usize,
    },

    #[error("methods disagree at n = {n}: {detail}")]
    MethodDisagreement { n: usize, detail: String },

    #[error("invalid dissection: {0}")]
    InvalidDissection(String),

    #[error("malformed table: {0}")]
    MalformedTable(String),
}

impl Error {
    pub(crate) fn inexact(context: impl Into<String>) -> Self {
        Error::InexactDivision {
            context: context.into(),
        }
    }
}
