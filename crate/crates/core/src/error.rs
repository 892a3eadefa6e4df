use thiserror::Error;

/// Errors raised by the linear-algebra, model and measure layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not Hermitian (defect {defect:.3e} exceeds {tol:.0e})")]
    NotHermitian { defect: f64, tol: f64 },

    #[error("matrix is not positive semidefinite (minimum eigenvalue {min_eigenvalue:.3e})")]
    NotPsd { min_eigenvalue: f64 },

    #[error("density matrix trace {trace} deviates from 1 by more than {tol:.0e}")]
    NonUnitTrace { trace: f64, tol: f64 },

    #[error("parameter out of range: {0}")]
    Parameter(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("invalid probability table: {0}")]
    Distribution(String),
}

pub type Result<T> = std::result::Result<T, Error>;
