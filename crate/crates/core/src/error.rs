use alloc::vec::Vec;

use crate::ComplexScalar;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("root set is empty")]
    EmptyRoots,
    #[error("polynomial is not monic of degree >= 1")]
    NotMonic,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid input: {0}")]
    InvalidInput(&'static str),
    #[error("roots are confluent (min separation {min_separation:e})")]
    ConfluentRoots { min_separation: f64 },
    #[error("root finder did not converge after {iterations} iterations (residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },
    #[error("contour quadrature did not converge with {nodes} nodes")]
    QuadratureNotConverged {
        nodes: usize,
        last: Vec<ComplexScalar>,
        previous: Vec<ComplexScalar>,
    },
    #[error("series did not converge within {terms} terms")]
    SeriesNotConverged { terms: usize },
    #[error("result overflowed in {0}")]
    Overflow(&'static str),
}

impl Error {
    /// Short stable identifier, used in machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonFinite(_) => "NonFinite",
            Error::EmptyRoots => "EmptyRoots",
            Error::NotMonic => "NotMonic",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::InvalidInput(_) => "InvalidInput",
            Error::ConfluentRoots { .. } => "ConfluentRoots",
            Error::NonConvergence { .. } => "NonConvergence",
            Error::QuadratureNotConverged { .. } => "QuadratureNotConverged",
            Error::SeriesNotConverged { .. } => "SeriesNotConverged",
            Error::Overflow(_) => "Overflow",
        }
    }

    /// Whether the error stems from malformed input rather than a numerical failure.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::NonFinite(_)
                | Error::EmptyRoots
                | Error::NotMonic
                | Error::DimensionMismatch { .. }
                | Error::InvalidInput(_)
        )
    }
}
