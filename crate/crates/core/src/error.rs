use thiserror::Error;

/// Everything the library signals instead of panicking: bad constructor
/// input, non-invertible parameters, and degenerate evaluation points.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("cannot evaluate at t = 0: Laurent polynomial has negative exponents")]
    EvalAtZeroWithPoles,
    #[error("the zero Laurent polynomial has no exponent range")]
    ZeroPolynomial,
    #[error("{0} must be invertible here")]
    NonInvertible(&'static str),
    #[error("state sizes differ: {left} vs {right} sites")]
    SizeMismatch { left: usize, right: usize },
    #[error("need {needed} alpha parameters (index 0..=M), got {got}")]
    AlphaCount { needed: usize, got: usize },
    #[error("partition does not fit in the box: lambda_1 = {lambda1} > M - N = {room}")]
    PartitionTooWide { lambda1: u32, room: i64 },
    #[error("degenerate evaluation point: {0}")]
    DegeneratePoint(&'static str),
    #[error("invalid {what}: {why}")]
    Invalid { what: &'static str, why: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(what: &'static str, why: impl Into<String>) -> Self {
        Error::Invalid { what, why: why.into() }
    }
}
