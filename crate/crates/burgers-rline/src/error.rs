//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("mesh requires an odd vertex count >= 3, got {0}")]
    InvalidVertexCount(usize),
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("matrix is numerically singular (pivot {pivot} below threshold)")]
    SingularMatrix { pivot: usize },
    #[error("Newton iteration failed to converge after {iterations} iterations (last |du| = {last_delta:.3e})")]
    NonConvergence { iterations: usize, last_delta: f64 },
    #[error("initial semidiameter {l0} is smaller than the datum support semidiameter {support}")]
    DomainTooSmall { l0: f64, support: f64 },
    #[error("initial datum exceeds the support threshold at the domain boundary")]
    SupportTouchesBoundary,
    #[error("cannot pick an initial semidiameter: datum support never clears the boundary cells")]
    NoInitialSemidiameter,
    #[error("time must be positive, got {0}")]
    NonpositiveTime(f64),
    #[error("quadrature failed to reach the requested tolerance (needed {needed:.3e}, achieved {achieved:.3e})")]
    ToleranceNotReached { needed: f64, achieved: f64 },
    #[error("quiescence not reached before t = {t_final}")]
    QuiescenceNotReached { t_final: f64 },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("step failed at t = {time}")]
    StepFailed {
        time: f64,
        #[source]
        source: Box<Error>,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code used by the CLI: 2 config, 3 solver, 4 oracle.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidVertexCount(_)
            | Error::DimensionMismatch { .. }
            | Error::DomainTooSmall { .. }
            | Error::SupportTouchesBoundary
            | Error::NoInitialSemidiameter
            | Error::NonpositiveTime(_)
            | Error::InvalidConfig(_) => 2,
            Error::SingularMatrix { .. }
            | Error::NonConvergence { .. }
            | Error::QuiescenceNotReached { .. } => 3,
            Error::ToleranceNotReached { .. } => 4,
            Error::StepFailed { source, .. } => source.exit_code(),
            Error::Io(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
