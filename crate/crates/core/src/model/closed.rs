//! Closed-form matrix elements of the initial and accelerated states.

use num_complex::Complex64;

use super::{check_acceleration, check_mixing, ModelParams, RegionIState, Scenario};
use crate::error::{Error, Result};
use crate::linalg::{kron, ComplexMatrix, ZERO};

/// How the simultaneous-acceleration state is evaluated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Fidelity {
    /// Qutrit channel followed by the qubit channel; trace preserving.
    #[default]
    Canonical,
    /// The element table as printed, whose `ρ44 = ρ^t_55 + s² ρ^t_11`
    /// does not preserve the trace. Only affects [`Scenario::Both`].
    AsPrinted,
}

/// The unaccelerated state, parameterized by the mixing parameter `p ∈ [0, 0.5]`.
pub fn initial_state(p: f64) -> Result<RegionIState> {
    check_mixing(p)?;
    let a = p / 2.0;
    let b = (1.0 - 2.0 * p) / 2.0;
    let mut s = RegionIState::zeros(false);
    for k in [1, 2, 5, 6] {
        s.set_listed(k, k, a);
    }
    s.set_listed(1, 6, a);
    s.set_listed(3, 3, b);
    s.set_listed(4, 4, b);
    s.set_listed(3, 4, b);
    Ok(s)
}

/// Region-I state from the closed-form element tables (canonical fidelity).
pub fn accelerate_closed(params: &ModelParams) -> Result<RegionIState> {
    accelerate_closed_with(params, Fidelity::Canonical)
}

pub fn accelerate_closed_with(params: &ModelParams, fidelity: Fidelity) -> Result<RegionIState> {
    params.validate()?;
    match (params.scenario, fidelity) {
        (Scenario::None, _) => {
            Err(Error::Contract("scenario none has no accelerated subsystem; use initial_state".into()))
        }
        (Scenario::QubitOnly, _) => Ok(qubit_accelerated(params.p, params.r_q)),
        (Scenario::QutritOnly, _) => Ok(qutrit_accelerated(params.p, params.r_t)),
        (Scenario::Both, Fidelity::Canonical) => qubit_channel(&qutrit_accelerated(params.p, params.r_t), params.r_q),
        (Scenario::Both, Fidelity::AsPrinted) => Ok(both_as_printed(params.p, params.r_q, params.r_t)),
    }
}

fn qubit_accelerated(p: f64, r: f64) -> RegionIState {
    let (s, c) = r.sin_cos();
    let (s2, c2) = (s * s, c * c);
    let a = p / 2.0;
    let b = (1.0 - 2.0 * p) / 2.0;

    let mut rho = RegionIState::zeros(true);
    rho.set_listed(1, 1, a * c2);
    rho.set_listed(2, 2, a * c2);
    rho.set_listed(3, 3, b * c2);
    rho.set_listed(4, 4, a * s2 + b);
    rho.set_listed(5, 5, a * (s2 + 1.0));
    rho.set_listed(6, 6, b * s2 + a);
    rho.set_listed(1, 6, a * c);
    rho.set_listed(3, 4, b * c);
    rho
}

/// Nonzero elements of the qutrit-accelerated state, indexed by listing position.
struct QutritElements {
    diag: [f64; 9],
    e16: f64,
    e28: f64,
    e34: f64,
    e57: f64,
}

fn qutrit_elements(p: f64, r: f64) -> QutritElements {
    let (s, c) = r.sin_cos();
    let (s2, c2) = (s * s, c * c);
    let c3 = c2 * c;
    let c4 = c2 * c2;
    let mut diag = [0.0; 9];
    diag[1] = p / 2.0 * c4;
    diag[2] = c2 * p / 2.0 * (s2 + 1.0);
    diag[3] = c2 / 2.0 * (p * s2 - 2.0 * p + 1.0);
    diag[4] = (1.0 - 2.0 * p) / 2.0 * c4;
    diag[5] = c2 / 2.0 * ((1.0 - 2.0 * p) * s2 + p);
    diag[6] = diag[5];
    diag[7] = s2 / 2.0 * (p * s2 - p + 1.0);
    diag[8] = s2 * ((1.0 - 2.0 * p) / 2.0 * s2 + p);
    QutritElements {
        diag,
        e16: p / 2.0 * c3,
        e28: -p / 2.0 * c * s2,
        e34: (1.0 - 2.0 * p) / 2.0 * c3,
        e57: (2.0 * p - 1.0) / 2.0 * c * s2,
    }
}

fn qutrit_accelerated(p: f64, r: f64) -> RegionIState {
    let e = qutrit_elements(p, r);
    let mut rho = RegionIState::zeros(true);
    for k in 1..=8 {
        rho.set_listed(k, k, e.diag[k]);
    }
    rho.set_listed(1, 6, e.e16);
    rho.set_listed(2, 8, e.e28);
    rho.set_listed(3, 4, e.e34);
    rho.set_listed(5, 7, e.e57);
    rho
}

fn both_as_printed(p: f64, r_q: f64, r_t: f64) -> RegionIState {
    let t = qutrit_elements(p, r_t);
    let d = &t.diag;
    let (s, c) = r_q.sin_cos();
    let (s2, c2) = (s * s, c * c);

    let mut rho = RegionIState::zeros(true);
    rho.set_listed(1, 1, c2 * d[1]);
    rho.set_listed(2, 2, c2 * d[2]);
    rho.set_listed(3, 3, c2 * d[3]);
    // as printed: ρ^t_55 where the trace requires ρ^t_44
    rho.set_listed(4, 4, d[5] + s2 * d[1]);
    rho.set_listed(5, 5, d[5] + s2 * d[2]);
    rho.set_listed(6, 6, d[6] + s2 * d[3]);
    rho.set_listed(7, 7, c2 * d[7]);
    rho.set_listed(8, 8, d[8] + s2 * d[7]);
    rho.set_listed(1, 6, c * t.e16);
    rho.set_listed(2, 8, c * t.e28);
    rho.set_listed(5, 7, c * t.e57);
    rho.set_listed(3, 4, c * t.e34);
    rho
}

/// Applies the region-I qubit acceleration map to an arbitrary state:
/// `|0><0| → c²|0><0| + s²|1><1|`, `|0><1| → c|0><1|`, `|1><1| → |1><1|`.
pub fn qubit_channel(state: &RegionIState, r_q: f64) -> Result<RegionIState> {
    check_acceleration("r_q", r_q)?;
    let (s, c) = r_q.sin_cos();
    let real = |x: f64| Complex64::new(x, 0.0);
    let keep = ComplexMatrix::from_row_slice(2, &[real(c), ZERO, ZERO, real(1.0)]);
    let lower = ComplexMatrix::from_row_slice(2, &[ZERO, ZERO, real(s), ZERO]);
    let id = ComplexMatrix::identity(state.qutrit_dim());

    let rho = state.matrix();
    let out = [kron(&keep, &id), kron(&lower, &id)]
        .iter()
        .map(|k| &(k * rho) * &k.adjoint())
        .reduce(|acc, term| &acc + &term)
        .expect("two Kraus operators");
    RegionIState::from_matrix(out)
}
