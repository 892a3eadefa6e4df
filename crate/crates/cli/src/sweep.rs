//! Parallel evaluation of a sweep grid into ordered records.

use std::cmp::Ordering;

use qtsteer_core::{
    accelerate_closed_with, decoherence_triple, initial_state, lqu, steering_report, ModelParams, RegionIState,
    Scenario,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{Quantity, SweepConfig};
use crate::error::SweepError;

/// One output row.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub scenario: String,
    pub p: f64,
    pub r_q: f64,
    pub r_t: f64,
    pub phi: f64,
    pub quantity: String,
    pub value: f64,
}

impl SweepRecord {
    fn sort_key_cmp(&self, other: &Self) -> Ordering {
        self.p
            .total_cmp(&other.p)
            .then(self.r_q.total_cmp(&other.r_q))
            .then(self.r_t.total_cmp(&other.r_t))
            .then_with(|| self.quantity.cmp(&other.quantity))
    }
}

/// The `(p, r)` points a config expands to. `none` ignores the r grid.
pub fn grid_points(config: &SweepConfig) -> Vec<ModelParams> {
    let r_values: &[f64] = if config.scenario == Scenario::None { &[0.0] } else { &config.r_values };
    config
        .p_values
        .iter()
        .flat_map(|&p| r_values.iter().map(move |&r| (p, r)))
        .map(|(p, r)| ModelParams::new(config.scenario, p, r).with_phi(config.phi))
        .collect()
}

fn state_at(params: &ModelParams, config: &SweepConfig) -> qtsteer_core::Result<RegionIState> {
    match params.scenario {
        Scenario::None => initial_state(params.p),
        _ => accelerate_closed_with(params, config.fidelity),
    }
}

fn describe(params: &ModelParams) -> String {
    format!("{} p={} r_q={} r_t={}", params.scenario, params.p, params.r_q, params.r_t)
}

/// Evaluates every requested quantity at one grid point.
pub fn evaluate_point(params: &ModelParams, config: &SweepConfig) -> Result<Vec<SweepRecord>, SweepError> {
    let wrap = |source| SweepError::Evaluation { point: describe(params), source };
    let state = state_at(params, config).map_err(wrap)?;

    let decoherence = if config.quantities.iter().any(|q| q.needs_decoherence()) {
        Some(decoherence_triple(&state).map_err(wrap)?)
    } else {
        None
    };
    let lqu_value =
        if config.quantities.contains(&Quantity::Lqu) { Some(lqu(&state).map_err(wrap)?.value) } else { None };
    let steering = if config.quantities.iter().any(|q| q.needs_steering()) {
        Some(steering_report(&state, config.convention).map_err(wrap)?)
    } else {
        None
    };

    config
        .quantities
        .iter()
        .map(|&q| {
            let value = match q {
                Quantity::DTotal => decoherence.map(|d| d.d_total),
                Quantity::DQubit => decoherence.map(|d| d.d_qubit),
                Quantity::DQutrit => decoherence.map(|d| d.d_qutrit),
                Quantity::Lqu => lqu_value,
                Quantity::SAbOracle => steering.map(|s| s.s_ab_oracle),
                Quantity::SBaOracle => steering.map(|s| s.s_ba_oracle),
                Quantity::IAbClosed => steering.map(|s| s.i_ab_closed),
                Quantity::IBaClosed => steering.map(|s| s.i_ba_closed),
                Quantity::SteerAb => steering.map(|s| s.steer_ab),
                Quantity::SteerBa => steering.map(|s| s.steer_ba),
                Quantity::SteerDiff => steering.map(|s| s.steer_diff()),
            }
            .expect("measure computed for every requested quantity");
            if !value.is_finite() {
                return Err(SweepError::NonFinite { quantity: q.name().into(), point: describe(params) });
            }
            Ok(SweepRecord {
                scenario: params.scenario.as_str().into(),
                p: params.p,
                r_q: params.r_q,
                r_t: params.r_t,
                phi: params.phi,
                quantity: q.name().into(),
                value,
            })
        })
        .collect()
}

/// Runs the sweep on a pool of `config.workers` threads. The record order is
/// fixed by `(p, r_q, r_t, quantity)` and does not depend on scheduling.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<SweepRecord>, SweepError> {
    config.validate()?;
    let points = grid_points(config);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| SweepError::Config(format!("cannot start {} workers: {e}", config.workers)))?;
    let chunks: Vec<Vec<SweepRecord>> =
        pool.install(|| points.par_iter().map(|params| evaluate_point(params, config)).collect::<Result<_, _>>())?;
    let mut records: Vec<SweepRecord> = chunks.into_iter().flatten().collect();
    records.sort_by(SweepRecord::sort_key_cmp);
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn none_collapses_the_r_grid() {
        let config = SweepConfig { p_values: vec![0.0, 0.2], r_values: vec![0.0, 0.3, 0.6], ..Default::default() };
        assert_eq!(grid_points(&config).len(), 2);
        let config = SweepConfig { scenario: Scenario::QubitOnly, ..config };
        assert_eq!(grid_points(&config).len(), 6);
    }

    #[test]
    fn records_sorted_by_point_then_quantity() {
        let config = SweepConfig {
            scenario: Scenario::QutritOnly,
            p_values: vec![0.3, 0.1],
            r_values: vec![0.5, 0.0],
            quantities: vec![Quantity::SteerAb, Quantity::DTotal, Quantity::Lqu],
            ..Default::default()
        };
        let records = run_sweep(&config).unwrap();
        assert_eq!(records.len(), 12);
        assert_eq!(records[0].p, 0.1);
        assert_eq!(records[0].r_t, 0.0);
        let names: Vec<&str> = records[..3].iter().map(|r| r.quantity.as_str()).collect();
        assert_eq!(names, ["d_total", "lqu", "steer_ab"]);
        assert!(records.iter().all(|r| r.r_q == 0.0));
    }

    #[test]
    fn initial_state_decoherence() {
        let config = SweepConfig {
            p_values: vec![0.0, 0.5],
            r_values: vec![0.0],
            quantities: vec![Quantity::DTotal, Quantity::DQubit],
            ..Default::default()
        };
        let records = run_sweep(&config).unwrap();
        let names: Vec<&str> = records.iter().map(|r| r.quantity.as_str()).collect();
        assert_eq!(names, ["d_qubit", "d_total", "d_qubit", "d_total"]);
        assert!((records[0].value - 0.5).abs() < 1e-15);
        assert_eq!(records[1].value, 0.0);
        assert!((records[3].value - (1.0 - 1.5 * 0.25)).abs() < 1e-12);
    }
}
