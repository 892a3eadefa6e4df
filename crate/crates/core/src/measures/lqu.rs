use nalgebra::{Matrix3, SymmetricEigen};

use crate::error::Result;
use crate::linalg::{kron, psd_sqrt, ComplexMatrix};
use crate::measures::observable::{spin_matrix, Axis, Space};
use crate::model::RegionIState;

/// Local quantum uncertainty on the qubit side and its intermediate matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LquReport {
    /// `Ξ_ij = Tr[√ρ (σ_i ⊗ I) √ρ (σ_j ⊗ I)]`, real parts as computed (not symmetrized).
    pub xi: Matrix3<f64>,
    /// Eigenvalues of Ξ, descending.
    pub gammas: [f64; 3],
    /// `1 - max Γ`.
    pub value: f64,
}

impl LquReport {
    pub fn asymmetry(&self) -> f64 {
        (self.xi - self.xi.transpose()).abs().max()
    }
}

/// Closed-form minimum Wigner-Yanase skew information over qubit observables.
pub fn lqu(state: &RegionIState) -> Result<LquReport> {
    let root = psd_sqrt(state.matrix())?;
    let id = ComplexMatrix::identity(state.qutrit_dim());
    let sandwiched: Vec<ComplexMatrix> =
        Axis::ALL.iter().map(|&axis| &root * &kron(&spin_matrix(Space::Qubit, axis), &id)).collect();

    let xi = Matrix3::from_fn(|i, j| (&sandwiched[i] * &sandwiched[j]).trace().re);
    let eig = SymmetricEigen::new((xi + xi.transpose()) * 0.5);
    let mut gammas = [eig.eigenvalues[0], eig.eigenvalues[1], eig.eigenvalues[2]];
    gammas.sort_by(|a, b| b.total_cmp(a));
    Ok(LquReport { xi, gammas, value: 1.0 - gammas[0] })
}
