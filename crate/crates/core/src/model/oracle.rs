//! Region-I states built by substituting the Rindler expansions of each
//! accelerated basis vector into the Minkowski state and tracing out region II.
//!
//! This path never touches the closed-form element tables and serves as their
//! reference.

use num_complex::Complex64;

use super::{initial_state, ModelParams, RegionIState, Scenario};
use crate::error::{Error, Result};
use crate::linalg::{partial_trace, ComplexMatrix, TensorShape};

const QUBIT_REGION_DIM: usize = 2;
const QUTRIT_REGION_DIM: usize = 4;
const PAIR: usize = 3;

/// Amplitudes `<x_I, y_II | basis_k>`, one `(region_i, region_ii, amplitude)` list per input basis vector.
type Expansion = Vec<Vec<(usize, usize, Complex64)>>;

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn inertial(levels: usize) -> Expansion {
    (0..levels).map(|k| vec![(k, 0, real(1.0))]).collect()
}

fn qubit_expansion(r: f64) -> Expansion {
    let (s, c) = r.sin_cos();
    vec![vec![(0, 0, real(c)), (1, 1, real(s))], vec![(1, 0, real(1.0))]]
}

fn qutrit_expansion(r: f64, phi: f64) -> Expansion {
    let (s, c) = r.sin_cos();
    let phase = Complex64::from_polar(1.0, phi);
    let phase2 = Complex64::from_polar(1.0, 2.0 * phi);
    vec![
        vec![(0, 0, real(c * c)), (1, 2, phase * (c * s)), (2, 1, phase * (c * s)), (PAIR, PAIR, phase2 * (s * s))],
        vec![(1, 0, real(c)), (PAIR, 1, phase * s)],
        vec![(2, 0, real(c)), (PAIR, 2, -phase * s)],
    ]
}

/// Accelerated region-I state via explicit basis substitution and a partial
/// trace over both region-II factors. Depends on `phi` only through phases
/// that cancel in the trace.
pub fn accelerate_oracle(params: &ModelParams) -> Result<RegionIState> {
    params.validate()?;
    if params.scenario == Scenario::None {
        return Err(Error::Contract("scenario none has no accelerated subsystem; use initial_state".into()));
    }
    let minkowski = initial_state(params.p)?;

    let qubit = if params.scenario.accelerates_qubit() { qubit_expansion(params.r_q) } else { inertial(2) };
    let qutrit =
        if params.scenario.accelerates_qutrit() { qutrit_expansion(params.r_t, params.phi) } else { inertial(3) };

    // Isometry from the 6-dim Minkowski space into
    // qubit_I ⊗ qutrit_I ⊗ qubit_II ⊗ qutrit_II, region II trailing.
    let shape = TensorShape::new(vec![QUBIT_REGION_DIM, QUTRIT_REGION_DIM, QUBIT_REGION_DIM, QUTRIT_REGION_DIM])?;
    let full_dim = shape.dim();
    let mut isometry = nalgebra::DMatrix::<Complex64>::zeros(full_dim, 6);
    for (q, q_terms) in qubit.iter().enumerate() {
        for (t, t_terms) in qutrit.iter().enumerate() {
            for &(q1, q2, qa) in q_terms {
                for &(t1, t2, ta) in t_terms {
                    let row = ((q1 * QUTRIT_REGION_DIM + t1) * QUBIT_REGION_DIM + q2) * QUTRIT_REGION_DIM + t2;
                    isometry[(row, q * 3 + t)] += qa * ta;
                }
            }
        }
    }

    let rho = minkowski.matrix().as_dmatrix();
    let full = ComplexMatrix::from_dmatrix(&isometry * rho * isometry.adjoint())?;
    RegionIState::from_matrix(partial_trace(&full, &shape, &[0, 1])?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn norm_sqr(terms: &[(usize, usize, Complex64)]) -> f64 {
        terms.iter().map(|t| t.2.norm_sqr()).sum()
    }

    #[test]
    fn expansions_are_normalized() {
        for r in [0.0, 0.3, std::f64::consts::FRAC_PI_4] {
            for terms in qubit_expansion(r).iter().chain(qutrit_expansion(r, 1.3).iter()) {
                assert!((norm_sqr(terms) - 1.0).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn qutrit_only_phase_independent() {
        let base = ModelParams::new(Scenario::QutritOnly, 0.1, 0.5);
        let reference = accelerate_oracle(&base).unwrap();
        for phi in [0.7, 2.1] {
            let s = accelerate_oracle(&base.with_phi(phi)).unwrap();
            assert!(s.matrix().max_abs_diff(reference.matrix()) < 1e-14);
        }
    }

    #[test]
    fn none_is_rejected() {
        assert!(accelerate_oracle(&ModelParams::new(Scenario::None, 0.0, 0.0)).is_err());
    }
}
