use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, HERMITIAN_TOL};
use crate::model::RegionIState;

/// Accepted `|Tr ρ - 1|` for inputs to [`linear_entropy`].
pub const TRACE_TOL: f64 = 1e-9;

/// Linear entropy `1 - Tr ρ²` of a density matrix, clamped to `[0, 1]`.
pub fn linear_entropy(m: &ComplexMatrix) -> Result<f64> {
    let defect = m.hermiticity_defect();
    if defect > HERMITIAN_TOL {
        return Err(Error::NotHermitian { defect, tol: HERMITIAN_TOL });
    }
    let trace = m.trace();
    if (trace.re - 1.0).abs() > TRACE_TOL || trace.im.abs() > TRACE_TOL {
        return Err(Error::NonUnitTrace { trace: trace.re, tol: TRACE_TOL });
    }
    // Tr ρ² = Σ |ρ_ij|² for Hermitian ρ
    Ok((1.0 - m.frobenius_norm_sqr()).clamp(0.0, 1.0))
}

/// Linear-entropy decoherence of the pair and of each marginal.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DecoherenceReport {
    pub d_total: f64,
    pub d_qubit: f64,
    pub d_qutrit: f64,
}

pub fn decoherence_triple(state: &RegionIState) -> Result<DecoherenceReport> {
    Ok(DecoherenceReport {
        d_total: linear_entropy(state.matrix())?,
        d_qubit: linear_entropy(&state.reduce_qubit())?,
        d_qutrit: linear_entropy(&state.reduce_qutrit())?,
    })
}
