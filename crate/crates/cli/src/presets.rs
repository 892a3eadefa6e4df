//! Named sweeps, one per figure panel.

use std::fmt;
use std::str::FromStr;

use qtsteer_core::model::{P_MAX, R_MAX};
use qtsteer_core::{Convention, Fidelity, Scenario};

pub use crate::config::DEFAULT_R_POINTS;
use crate::config::{linspace, OutputFormat, Quantity, SweepConfig};
use crate::error::SweepError;

/// Mixing values for the uncertainty panels.
pub const LQU_P_VALUES: [f64; 6] = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5];

/// Mixing values for the steerability panels a, b, c.
pub const STEERING_P_VALUES: [f64; 3] = [0.0, 0.01, 0.05];

const FIXED_P: f64 = 0.1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Preset {
    figure: u8,
    panel: char,
}

impl Preset {
    pub const ALL: [Preset; 19] = [
        Preset::new(1, 'a'),
        Preset::new(1, 'b'),
        Preset::new(1, 'c'),
        Preset::new(1, 'd'),
        Preset::new(2, 'a'),
        Preset::new(2, 'b'),
        Preset::new(2, 'c'),
        Preset::new(3, 'a'),
        Preset::new(3, 'b'),
        Preset::new(3, 'c'),
        Preset::new(3, 'd'),
        Preset::new(3, 'e'),
        Preset::new(3, 'f'),
        Preset::new(4, 'a'),
        Preset::new(4, 'b'),
        Preset::new(4, 'c'),
        Preset::new(5, 'a'),
        Preset::new(5, 'b'),
        Preset::new(5, 'c'),
    ];

    const fn new(figure: u8, panel: char) -> Self {
        Self { figure, panel }
    }

    pub fn name(&self) -> String {
        format!("fig{}{}", self.figure, self.panel)
    }

    /// Human-readable summary of what the panel shows.
    pub fn description(&self) -> &'static str {
        match (self.figure, self.panel) {
            (1, 'a') => "decoherence vs p without acceleration",
            (1, 'b') => "decoherence vs r, accelerated qubit, p = 0.1",
            (1, 'c') => "decoherence vs r, accelerated qutrit, p = 0.1",
            (1, 'd') => "decoherence vs r, both accelerated, p = 0.1",
            (2, 'a') => "local quantum uncertainty vs r, accelerated qubit",
            (2, 'b') => "local quantum uncertainty vs r, accelerated qutrit",
            (2, 'c') => "local quantum uncertainty vs r, both accelerated",
            (3, 'a') => "qubit-to-qutrit steering inequality, accelerated qubit, p = 0.1",
            (3, 'b') => "qutrit-to-qubit steering inequality, accelerated qubit, p = 0.1",
            (3, 'c') => "qubit-to-qutrit steering inequality, accelerated qutrit, p = 0.1",
            (3, 'd') => "qutrit-to-qubit steering inequality, accelerated qutrit, p = 0.1",
            (3, 'e') => "qubit-to-qutrit steering inequality, both accelerated, p = 0.1",
            (3, 'f') => "qutrit-to-qubit steering inequality, both accelerated, p = 0.1",
            (4, _) => "steerability degrees vs r, accelerated qubit",
            (5, _) => "steerability degrees vs r, accelerated qutrit",
            _ => unreachable!("preset table is closed"),
        }
    }

    pub fn config(&self) -> SweepConfig {
        let r_grid = linspace(0.0, R_MAX, DEFAULT_R_POINTS);
        let panel_scenario = |a: char, b: char| {
            if self.panel <= a {
                Scenario::QubitOnly
            } else if self.panel <= b {
                Scenario::QutritOnly
            } else {
                Scenario::Both
            }
        };
        let (scenario, p_values, r_values, quantities) = match self.figure {
            1 => {
                let decoherence = vec![Quantity::DTotal, Quantity::DQubit, Quantity::DQutrit];
                match self.panel {
                    'a' => (Scenario::None, linspace(0.0, P_MAX, DEFAULT_R_POINTS), vec![0.0], decoherence),
                    'b' => (Scenario::QubitOnly, vec![FIXED_P], r_grid, decoherence),
                    'c' => (Scenario::QutritOnly, vec![FIXED_P], r_grid, decoherence),
                    _ => (Scenario::Both, vec![FIXED_P], r_grid, decoherence),
                }
            }
            2 => (panel_scenario('a', 'b'), LQU_P_VALUES.to_vec(), r_grid, vec![Quantity::Lqu]),
            3 => {
                let quantities = if matches!(self.panel, 'a' | 'c' | 'e') {
                    vec![Quantity::IAbClosed, Quantity::SAbOracle]
                } else {
                    vec![Quantity::IBaClosed, Quantity::SBaOracle]
                };
                (panel_scenario('b', 'd'), vec![FIXED_P], r_grid, quantities)
            }
            _ => {
                let scenario = if self.figure == 4 { Scenario::QubitOnly } else { Scenario::QutritOnly };
                let p = STEERING_P_VALUES[(self.panel as u8 - b'a') as usize];
                (scenario, vec![p], r_grid, vec![Quantity::SteerAb, Quantity::SteerBa, Quantity::SteerDiff])
            }
        };
        SweepConfig {
            scenario,
            p_values,
            r_values,
            phi: 0.0,
            quantities,
            convention: Convention::AsPrinted,
            fidelity: Fidelity::Canonical,
            out: None,
            format: OutputFormat::Csv,
            workers: 1,
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "fig{}{}", self.figure, self.panel)
    }
}

impl FromStr for Preset {
    type Err = SweepError;

    fn from_str(s: &str) -> Result<Self, SweepError> {
        let s = s.trim().to_ascii_lowercase();
        Preset::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| {
            let names: Vec<String> = Preset::ALL.iter().map(Preset::name).collect();
            SweepError::Config(format!("unknown preset '{s}' (expected one of {})", names.join(", ")))
        })
    }
}
