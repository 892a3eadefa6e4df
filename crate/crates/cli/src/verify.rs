//! Self-checks of the closed forms against the oracle and of the measures
//! against hand-derivable anchors.

use std::f64::consts::FRAC_PI_4;
use std::fmt;

use qtsteer_core::measures::Axis;
use qtsteer_core::{
    accelerate_closed, accelerate_closed_with, accelerate_oracle, conditional_entropy, decoherence_triple,
    initial_state, joint_distribution, lqu, standard_observables, ComplexMatrix, Fidelity, ModelParams, RegionIState,
    Scenario, Space,
};

use crate::error::SweepError;

pub const VERIFY_P: [f64; 5] = [0.0, 0.1, 0.25, 0.4, 0.5];
pub const VERIFY_PHI: [f64; 3] = [0.0, 0.7, 2.1];
pub const VERIFY_R_POINTS: usize = 9;

pub const ORACLE_TOL: f64 = 1e-12;
pub const EXACT_TOL: f64 = 1e-14;
pub const PSD_TOL: f64 = 1e-10;
pub const LQU_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// A known defect of the as-printed tables that the check expects to see.
    KnownDiscrepancy,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::KnownDiscrepancy => "KNOWN",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckResult {
    pub name: String,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub status: CheckStatus,
    pub detail: String,
}

impl CheckResult {
    fn within(name: &str, max_deviation: f64, tolerance: f64) -> Self {
        let status = if max_deviation <= tolerance { CheckStatus::Pass } else { CheckStatus::Fail };
        Self { name: name.into(), max_deviation, tolerance, status, detail: String::new() }
    }

    fn with_detail(mut self, detail: String) -> Self {
        self.detail = detail;
        self
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<5} {:<36} max_dev={:<10.3e} tol={:.0e}",
            self.status, self.name, self.max_deviation, self.tolerance
        )?;
        if !self.detail.is_empty() {
            write!(f, "  {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail).collect()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

pub fn verify_r_grid() -> Vec<f64> {
    (0..VERIFY_R_POINTS).map(|k| FRAC_PI_4 * k as f64 / (VERIFY_R_POINTS - 1) as f64).collect()
}

fn grid_params(scenario: Scenario) -> Vec<ModelParams> {
    let mut out = Vec::new();
    for p in VERIFY_P {
        for r in verify_r_grid() {
            for phi in VERIFY_PHI {
                out.push(ModelParams::new(scenario, p, r).with_phi(phi));
            }
        }
    }
    out
}

fn dev(a: &RegionIState, b: &RegionIState) -> f64 {
    a.matrix().max_abs_diff(b.matrix())
}

fn closed_vs_oracle(scenario: Scenario) -> qtsteer_core::Result<CheckResult> {
    let mut worst = 0.0_f64;
    for params in grid_params(scenario) {
        worst = worst.max(dev(&accelerate_closed(&params)?, &accelerate_oracle(&params)?));
    }
    Ok(CheckResult::within(&format!("closed_vs_oracle/{scenario}"), worst, ORACLE_TOL))
}

/// The as-printed simultaneous-acceleration table carries the wrong population
/// in one diagonal slot. The check passes as a known discrepancy when the
/// deviation is present and confined to that slot.
fn printed_simultaneous_table() -> qtsteer_core::Result<CheckResult> {
    let mut worst = 0.0_f64;
    let mut worst_elsewhere = 0.0_f64;
    let mut worst_trace = 0.0_f64;
    for params in grid_params(Scenario::Both) {
        let printed = accelerate_closed_with(&params, Fidelity::AsPrinted)?;
        let oracle = accelerate_oracle(&params)?;
        worst = worst.max(dev(&printed, &oracle));
        worst_trace = worst_trace.max((printed.trace() - 1.0).abs());
        for i in 1..=8 {
            for j in 1..=8 {
                if (i, j) != (4, 4) {
                    worst_elsewhere = worst_elsewhere.max((printed.listed(i, j) - oracle.listed(i, j)).norm());
                }
            }
        }
    }
    let detected = worst > ORACLE_TOL && worst_elsewhere <= ORACLE_TOL;
    Ok(CheckResult {
        name: "closed_vs_oracle/both_as_printed".into(),
        max_deviation: worst,
        tolerance: ORACLE_TOL,
        status: if detected { CheckStatus::KnownDiscrepancy } else { CheckStatus::Fail },
        detail: format!(
            "element (4,4) only; other elements max_dev={worst_elsewhere:.1e}; trace error up to {worst_trace:.3e}"
        ),
    })
}

fn physicality_checks() -> qtsteer_core::Result<Vec<CheckResult>> {
    let mut states = Vec::new();
    for p in VERIFY_P {
        states.push(initial_state(p)?);
    }
    for scenario in Scenario::ACCELERATED {
        for params in grid_params(scenario) {
            states.push(accelerate_closed(&params)?);
            states.push(accelerate_oracle(&params)?);
        }
    }
    let (mut trace, mut herm, mut neg) = (0.0_f64, 0.0_f64, 0.0_f64);
    for s in &states {
        let phys = s.physicality()?;
        trace = trace.max(phys.trace_error);
        herm = herm.max(phys.hermiticity_defect);
        neg = neg.max(-phys.min_eigenvalue);
    }
    let n = states.len();
    Ok(vec![
        CheckResult::within("physicality/trace", trace, ORACLE_TOL).with_detail(format!("{n} states")),
        CheckResult::within("physicality/hermiticity", herm, ORACLE_TOL),
        CheckResult::within("physicality/min_eigenvalue", neg.max(0.0), PSD_TOL)
            .with_detail(format!("most negative eigenvalue {:.3e}", -neg)),
    ])
}

fn phi_independence() -> qtsteer_core::Result<CheckResult> {
    let mut worst = 0.0_f64;
    for scenario in Scenario::ACCELERATED {
        for p in VERIFY_P {
            for r in verify_r_grid() {
                let base = accelerate_oracle(&ModelParams::new(scenario, p, r))?;
                for phi in VERIFY_PHI {
                    let params = ModelParams::new(scenario, p, r).with_phi(phi);
                    worst = worst.max(dev(&accelerate_oracle(&params)?, &base));
                }
            }
        }
    }
    Ok(CheckResult::within("phi_independence", worst, EXACT_TOL))
}

fn zero_acceleration() -> qtsteer_core::Result<CheckResult> {
    let mut worst = 0.0_f64;
    for p in VERIFY_P {
        let padded = initial_state(p)?.padded();
        for scenario in Scenario::ACCELERATED {
            for phi in VERIFY_PHI {
                let params = ModelParams::new(scenario, p, 0.0).with_phi(phi);
                worst = worst.max(dev(&accelerate_oracle(&params)?, &padded));
                worst = worst.max(dev(&accelerate_closed(&params)?, &padded));
            }
        }
    }
    Ok(CheckResult::within("zero_acceleration_reduction", worst, EXACT_TOL))
}

fn decoherence_anchors() -> qtsteer_core::Result<CheckResult> {
    let mut worst = 0.0_f64;
    for k in 0..=10 {
        let p = 0.05 * k as f64;
        let d = decoherence_triple(&initial_state(p)?)?;
        let closed = 1.0 - 1.5 * p * p - (1.0 - 2.0 * p).powi(2);
        worst = worst.max((d.d_total - closed).abs()).max((d.d_qubit - 0.5).abs());
    }
    Ok(CheckResult::within("decoherence_anchors", worst, ORACLE_TOL))
}

fn lqu_anchors() -> qtsteer_core::Result<CheckResult> {
    let mixed = RegionIState::from_matrix(ComplexMatrix::identity(6).scale(1.0 / 6.0))?;
    let worst = lqu(&mixed)?.value.abs().max((lqu(&initial_state(0.0)?)?.value - 1.0).abs());
    Ok(CheckResult::within("lqu_anchors", worst, LQU_TOL))
}

fn joint_normalization() -> qtsteer_core::Result<CheckResult> {
    let mut worst = 0.0_f64;
    let qubit = standard_observables(Space::Qubit);
    for p in VERIFY_P {
        for r in verify_r_grid() {
            let mut states = vec![initial_state(p)?];
            for scenario in Scenario::ACCELERATED {
                states.push(accelerate_closed(&ModelParams::new(scenario, p, r))?);
            }
            for s in &states {
                let qutrit = standard_observables(Space::qutrit_side(s.qutrit_dim())?);
                for (a, b) in qubit.iter().zip(&qutrit) {
                    worst = worst.max((joint_distribution(s, a, b)?.total() - 1.0).abs());
                }
            }
        }
    }
    Ok(CheckResult::within("joint_normalization", worst, ORACLE_TOL).with_detail(format!(
        "{} axes x {} scenarios",
        Axis::ALL.len(),
        Scenario::ALL.len()
    )))
}

fn steering_anchor() -> qtsteer_core::Result<CheckResult> {
    let s = initial_state(0.0)?;
    let sz_a = &standard_observables(Space::Qubit)[2];
    let sz_b = &standard_observables(Space::Qutrit)[2];
    let h = conditional_entropy(&joint_distribution(&s, sz_a, sz_b)?);
    Ok(CheckResult::within("steering_anchor_sz", (h - 0.5).abs(), ORACLE_TOL))
}

/// Runs every check. Errors only if a computation itself fails.
pub fn verify() -> Result<VerificationReport, SweepError> {
    let run = || -> qtsteer_core::Result<Vec<CheckResult>> {
        let mut checks = vec![
            closed_vs_oracle(Scenario::QubitOnly)?,
            closed_vs_oracle(Scenario::QutritOnly)?,
            closed_vs_oracle(Scenario::Both)?,
            printed_simultaneous_table()?,
        ];
        checks.extend(physicality_checks()?);
        checks.push(phi_independence()?);
        checks.push(zero_acceleration()?);
        checks.push(decoherence_anchors()?);
        checks.push(lqu_anchors()?);
        checks.push(joint_normalization()?);
        checks.push(steering_anchor()?);
        Ok(checks)
    };
    let checks = run().map_err(|e| SweepError::Verification(e.to_string()))?;
    Ok(VerificationReport { checks })
}
