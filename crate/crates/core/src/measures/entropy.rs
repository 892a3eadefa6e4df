//! Joint outcome statistics of local measurements and their Shannon entropies (bits).

use crate::error::{Error, Result};
use crate::linalg::{kron, ComplexMatrix};
use crate::measures::observable::Observable;
use crate::model::RegionIState;

/// Probabilities at or below this are exact zeros for entropy purposes.
pub const PROBABILITY_FLOOR: f64 = 1e-15;
/// Largest tolerated negative probability and normalization error.
pub const PROBABILITY_TOL: f64 = 1e-12;

/// Shannon entropy in bits with `0 log 0 = 0`; negative round-off is clamped away.
pub fn shannon_bits(probs: impl IntoIterator<Item = f64>) -> f64 {
    probs.into_iter().filter(|&p| p > PROBABILITY_FLOOR).map(|p| -p * p.log2()).sum()
}

/// Table `p(a, b)` over the outcomes of a measurement on each side.
#[derive(Clone, Debug, PartialEq)]
pub struct JointDistribution {
    outcomes_a: Vec<f64>,
    outcomes_b: Vec<f64>,
    /// Row-major over `(a, b)`.
    probs: Vec<f64>,
}

impl JointDistribution {
    pub fn new(outcomes_a: Vec<f64>, outcomes_b: Vec<f64>, probs: Vec<f64>) -> Result<Self> {
        if probs.len() != outcomes_a.len() * outcomes_b.len() {
            return Err(Error::Distribution(format!(
                "{} probabilities for a {}x{} outcome table",
                probs.len(),
                outcomes_a.len(),
                outcomes_b.len()
            )));
        }
        if let Some(&p) = probs.iter().find(|&&p| !p.is_finite() || p < -PROBABILITY_TOL) {
            return Err(Error::Distribution(format!("probability {p} is negative or not finite")));
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > PROBABILITY_TOL {
            return Err(Error::Distribution(format!("probabilities sum to {total}")));
        }
        Ok(Self { outcomes_a, outcomes_b, probs })
    }

    pub fn outcomes_a(&self) -> &[f64] {
        &self.outcomes_a
    }

    pub fn outcomes_b(&self) -> &[f64] {
        &self.outcomes_b
    }

    pub fn prob(&self, a: usize, b: usize) -> f64 {
        self.probs[a * self.outcomes_b.len() + b]
    }

    /// Probability of the outcome pair by value, if both outcomes exist.
    pub fn prob_of(&self, outcome_a: f64, outcome_b: f64) -> Option<f64> {
        let a = self.outcomes_a.iter().position(|&x| x == outcome_a)?;
        let b = self.outcomes_b.iter().position(|&x| x == outcome_b)?;
        Some(self.prob(a, b))
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn total(&self) -> f64 {
        self.probs.iter().sum()
    }

    pub fn marginal_a(&self) -> Vec<f64> {
        let nb = self.outcomes_b.len();
        self.probs.chunks(nb).map(|row| row.iter().sum()).collect()
    }

    pub fn marginal_b(&self) -> Vec<f64> {
        let nb = self.outcomes_b.len();
        (0..nb).map(|b| self.probs.iter().skip(b).step_by(nb).sum()).collect()
    }

    /// The same table with the roles of the two parties exchanged.
    pub fn transposed(&self) -> Self {
        let (na, nb) = (self.outcomes_a.len(), self.outcomes_b.len());
        let probs = (0..nb).flat_map(|b| (0..na).map(move |a| (a, b))).map(|(a, b)| self.prob(a, b)).collect();
        Self { outcomes_a: self.outcomes_b.clone(), outcomes_b: self.outcomes_a.clone(), probs }
    }
}

/// `p(a, b) = Tr[ρ (Π_a ⊗ Π_b)]` for a qubit observable and a qutrit-side observable.
pub fn joint_distribution(state: &RegionIState, obs_a: &Observable, obs_b: &Observable) -> Result<JointDistribution> {
    if obs_a.dim() != 2 || obs_b.dim() != state.qutrit_dim() {
        return Err(Error::Dimension(format!(
            "observables of dimension {}x{} do not match the {}x{} state",
            obs_a.dim(),
            obs_b.dim(),
            2,
            state.qutrit_dim()
        )));
    }
    let rho = state.matrix();
    let mut probs = Vec::with_capacity(obs_a.spectrum().len() * obs_b.spectrum().len());
    for a in obs_a.spectrum() {
        for b in obs_b.spectrum() {
            probs.push(expectation(rho, &kron(&a.projector, &b.projector)));
        }
    }
    JointDistribution::new(obs_a.outcomes(), obs_b.outcomes(), probs)
}

/// `Re Tr[ρ K]` without forming the product.
fn expectation(rho: &ComplexMatrix, k: &ComplexMatrix) -> f64 {
    let n = rho.dim();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            acc += (rho[(i, j)] * k[(j, i)]).re;
        }
    }
    acc
}

/// `H(B|A) = H(A, B) - H(A)` in bits.
pub fn conditional_entropy(joint: &JointDistribution) -> f64 {
    shannon_bits(joint.probs().iter().copied()) - shannon_bits(joint.marginal_a())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn entropy_regularizes_zeros() {
        assert_eq!(shannon_bits([1.0, 0.0, -1e-17]), 0.0);
        assert_abs_diff_eq!(shannon_bits([0.25; 4]), 2.0, epsilon = 1e-15);
    }

    #[test]
    fn hand_table_conditional_entropy() {
        // rows a = +1, -1; columns b = +1, 0, -1
        let joint = JointDistribution::new(vec![1.0, -1.0], vec![1.0, 0.0, -1.0], vec![0.0, 0.5, 0.0, 0.25, 0.0, 0.25])
            .unwrap();
        assert_abs_diff_eq!(conditional_entropy(&joint), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(conditional_entropy(&joint.transposed()), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn perfect_correlation_and_independence() {
        let correlated = JointDistribution::new(vec![1.0, -1.0], vec![1.0, -1.0], vec![0.5, 0.0, 0.0, 0.5]).unwrap();
        assert_eq!(conditional_entropy(&correlated), 0.0);
        let independent = JointDistribution::new(vec![1.0, -1.0], vec![1.0, -1.0], vec![0.25; 4]).unwrap();
        assert_abs_diff_eq!(conditional_entropy(&independent), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn validation() {
        assert!(JointDistribution::new(vec![1.0], vec![1.0, 2.0], vec![1.0]).is_err());
        assert!(JointDistribution::new(vec![1.0], vec![1.0, 2.0], vec![0.5, 0.4]).is_err());
        assert!(JointDistribution::new(vec![1.0], vec![1.0, 2.0], vec![1.1, -0.1]).is_err());
        assert!(JointDistribution::new(vec![1.0], vec![1.0, 2.0], vec![1.0 + 1e-13, -1e-13]).is_ok());
    }

    #[test]
    fn marginals_and_transpose() {
        let joint = JointDistribution::new(vec![1.0, -1.0], vec![1.0, 0.0, -1.0], vec![0.1, 0.2, 0.3, 0.05, 0.15, 0.2])
            .unwrap();
        let ma = joint.marginal_a();
        let mb = joint.marginal_b();
        assert_abs_diff_eq!(ma[0], 0.6, epsilon = 1e-15);
        assert_abs_diff_eq!(mb[2], 0.5, epsilon = 1e-15);
        let t = joint.transposed();
        assert_eq!(t.marginal_a(), mb);
        assert_eq!(t.prob(2, 1), joint.prob(1, 2));
    }
}
