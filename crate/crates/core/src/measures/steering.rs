//! Entropic steering sums and steerability degrees between the qubit (A) and
//! the qutrit (B).
//!
//! Two routes are provided. [`steering_sum_oracle`] measures the three spin
//! pairs on the state and adds the conditional Shannon entropies.
//! [`steering_closed`] evaluates the as-printed closed-form expressions
//! `𝓘_AB`, `𝓘_BA` from listed matrix elements. The two are different
//! quantities; see [`SteeringReport`] for how each convention consumes them.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::measures::entropy::{conditional_entropy, joint_distribution, PROBABILITY_FLOOR};
use crate::measures::observable::{standard_observables, Space};
use crate::model::RegionIState;

/// Which party's measurement outcomes are used to predict the other's.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Qubit measurements steer the qutrit: `Σ H(S_i^B | S_i^A)`.
    AtoB,
    /// Qutrit measurements steer the qubit: `Σ H(S_i^A | S_i^B)`.
    BtoA,
}

impl Direction {
    pub const BOTH: [Direction; 2] = [Direction::AtoB, Direction::BtoA];
}

/// Entropic bounds and normalizations.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SteeringBound;

impl SteeringBound {
    pub const GAMMA_QUBIT: f64 = 2.0;
    pub const GAMMA_QUTRIT: f64 = 3.0;
    pub const S_MAX_AB: f64 = 4.0;
    pub const S_MAX_BA: f64 = 3.0;

    /// Bound on the steered party's entropy sum: 3 when the qutrit is steered, 2 for the qubit.
    pub fn gamma(direction: Direction) -> f64 {
        match direction {
            Direction::AtoB => Self::GAMMA_QUTRIT,
            Direction::BtoA => Self::GAMMA_QUBIT,
        }
    }

    pub fn s_max(direction: Direction) -> f64 {
        match direction {
            Direction::AtoB => Self::S_MAX_AB,
            Direction::BtoA => Self::S_MAX_BA,
        }
    }
}

/// How a steering value is turned into a degree in `[0, 1]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Convention {
    /// `max{0, (v - γ)/(S_max - γ)}` applied to the closed-form `𝓘`, capped at 1.
    #[default]
    AsPrinted,
    /// `max{0, (γ - v)/γ}` applied to the measured conditional-entropy sum:
    /// the relative violation of `S ≥ γ`.
    DeficitNormalized,
}

impl Convention {
    pub const ALL: [Convention; 2] = [Convention::AsPrinted, Convention::DeficitNormalized];

    pub fn as_str(self) -> &'static str {
        match self {
            Convention::AsPrinted => "as-printed",
            Convention::DeficitNormalized => "deficit",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "as-printed" | "asprinted" | "printed" => Ok(Convention::AsPrinted),
            "deficit" | "deficit-normalized" => Ok(Convention::DeficitNormalized),
            other => Err(Error::Parameter(format!("unknown convention '{other}' (expected as-printed or deficit)"))),
        }
    }
}

/// Sum of the three conditional entropies of matched spin measurements, in bits.
pub fn steering_sum_oracle(state: &RegionIState, direction: Direction) -> Result<f64> {
    let qubit = standard_observables(Space::Qubit);
    let qutrit = standard_observables(Space::qutrit_side(state.qutrit_dim())?);
    let mut total = 0.0;
    for (a, b) in qubit.iter().zip(&qutrit) {
        let joint = joint_distribution(state, a, b)?;
        total += match direction {
            Direction::AtoB => conditional_entropy(&joint),
            Direction::BtoA => conditional_entropy(&joint.transposed()),
        };
    }
    Ok(total)
}

/// `x log2(scale x)`, zero for `x` at or below the probability floor.
fn xlog(x: f64, scale: f64) -> f64 {
    if x <= PROBABILITY_FLOOR {
        0.0
    } else {
        x * (scale * x).log2()
    }
}

/// The as-printed closed-form steering expressions `𝓘_AB` / `𝓘_BA`, read
/// from listed matrix elements. Unextended states contribute zero pair elements.
pub fn steering_closed(state: &RegionIState, direction: Direction) -> f64 {
    let d = |k: usize| state.listed(k, k).re;
    let coherence = state.listed(1, 6).re + state.listed(3, 4).re;
    let b = d(2) + d(5);
    let c_plus = 1.0 - b + 2.0 * coherence;
    let c_minus = 1.0 - b - 2.0 * coherence;

    match direction {
        Direction::AtoB => {
            let a = d(1) + d(4);
            let tilt = d(1) + d(2) + d(3) - d(4) - d(5) - d(6);
            let (d_plus, d_minus) = (1.0 + tilt, 1.0 - tilt);
            let scale = 32.0;
            xlog(1.0 - a, 1.0)
                + xlog(a, 1.0)
                + xlog(b, 1.0)
                + xlog(c_plus, 1.0) / 2.0
                + xlog(c_minus, 1.0) / 2.0
                + xlog(d(1) + d(2), scale)
                + xlog(d(3), scale)
                + xlog(d(6), scale)
                + xlog(d(4) + d(5), scale)
                - xlog(d_minus, 1.0) / 2.0
                - xlog(d_plus, 1.0) / 2.0
        }
        Direction::BtoA => {
            let g = d(3) + d(6);
            let scale = 4.0;
            xlog(c_plus, 1.0) / 2.0
                + xlog(c_minus, 1.0) / 2.0
                + xlog(d(1) + d(2), scale)
                + xlog(d(3), scale)
                + xlog(d(6), scale)
                + xlog(d(4) + d(5), scale)
                - xlog(1.0 - b, 1.0)
                - xlog(1.0 - g, 1.0)
                - xlog(g, 1.0)
        }
    }
}

/// Normalized steering degree in `[0, 1]`.
pub fn steerability(value: f64, direction: Direction, convention: Convention) -> f64 {
    let gamma = SteeringBound::gamma(direction);
    let degree = match convention {
        Convention::AsPrinted => (value - gamma) / (SteeringBound::s_max(direction) - gamma),
        Convention::DeficitNormalized => (gamma - value) / gamma,
    };
    if degree.is_nan() {
        0.0
    } else {
        degree.clamp(0.0, 1.0)
    }
}

/// Both steering routes for one state plus the degrees under one convention.
///
/// Under [`Convention::AsPrinted`] the degrees are computed from the closed
/// forms, under [`Convention::DeficitNormalized`] from the measured sums.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SteeringReport {
    pub s_ab_oracle: f64,
    pub s_ba_oracle: f64,
    pub i_ab_closed: f64,
    pub i_ba_closed: f64,
    pub steer_ab: f64,
    pub steer_ba: f64,
    pub convention: Convention,
}

impl SteeringReport {
    pub fn steer_diff(&self) -> f64 {
        (self.steer_ab - self.steer_ba).abs()
    }
}

pub fn steering_report(state: &RegionIState, convention: Convention) -> Result<SteeringReport> {
    let s_ab_oracle = steering_sum_oracle(state, Direction::AtoB)?;
    let s_ba_oracle = steering_sum_oracle(state, Direction::BtoA)?;
    let i_ab_closed = steering_closed(state, Direction::AtoB);
    let i_ba_closed = steering_closed(state, Direction::BtoA);
    let (ab, ba) = match convention {
        Convention::AsPrinted => (i_ab_closed, i_ba_closed),
        Convention::DeficitNormalized => (s_ab_oracle, s_ba_oracle),
    };
    Ok(SteeringReport {
        s_ab_oracle,
        s_ba_oracle,
        i_ab_closed,
        i_ba_closed,
        steer_ab: steerability(ab, Direction::AtoB, convention),
        steer_ba: steerability(ba, Direction::BtoA, convention),
        convention,
    })
}
