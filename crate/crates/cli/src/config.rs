//! Sweep configuration: value parsing, flat key-value config files, validation.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use qtsteer_core::model::{P_MAX, R_MAX};
use qtsteer_core::{Convention, Fidelity, Scenario};

use crate::error::SweepError;

/// A scalar reported by a sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Quantity {
    DTotal,
    DQubit,
    DQutrit,
    Lqu,
    SAbOracle,
    SBaOracle,
    IAbClosed,
    IBaClosed,
    SteerAb,
    SteerBa,
    SteerDiff,
}

impl Quantity {
    pub const ALL: [Quantity; 11] = [
        Quantity::DTotal,
        Quantity::DQubit,
        Quantity::DQutrit,
        Quantity::Lqu,
        Quantity::SAbOracle,
        Quantity::SBaOracle,
        Quantity::IAbClosed,
        Quantity::IBaClosed,
        Quantity::SteerAb,
        Quantity::SteerBa,
        Quantity::SteerDiff,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::DTotal => "d_total",
            Quantity::DQubit => "d_qubit",
            Quantity::DQutrit => "d_qutrit",
            Quantity::Lqu => "lqu",
            Quantity::SAbOracle => "s_ab_oracle",
            Quantity::SBaOracle => "s_ba_oracle",
            Quantity::IAbClosed => "i_ab_closed",
            Quantity::IBaClosed => "i_ba_closed",
            Quantity::SteerAb => "steer_ab",
            Quantity::SteerBa => "steer_ba",
            Quantity::SteerDiff => "steer_diff",
        }
    }

    pub fn needs_decoherence(self) -> bool {
        matches!(self, Quantity::DTotal | Quantity::DQubit | Quantity::DQutrit)
    }

    pub fn needs_steering(self) -> bool {
        matches!(
            self,
            Quantity::SAbOracle
                | Quantity::SBaOracle
                | Quantity::IAbClosed
                | Quantity::IBaClosed
                | Quantity::SteerAb
                | Quantity::SteerBa
                | Quantity::SteerDiff
        )
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Quantity {
    type Err = SweepError;

    fn from_str(s: &str) -> Result<Self, SweepError> {
        let s = s.trim();
        Quantity::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| SweepError::Config(format!("unknown quantity '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = SweepError;

    fn from_str(s: &str) -> Result<Self, SweepError> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(SweepError::Config(format!("unknown format '{other}' (expected csv or json)"))),
        }
    }
}

/// Points in the default r grid, spanning `[0, π/4]`.
pub const DEFAULT_R_POINTS: usize = 101;

/// A grid of `(p, r)` points for one scenario and the quantities to report.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub scenario: Scenario,
    pub p_values: Vec<f64>,
    /// Applied to `r_q`, `r_t` or both according to the scenario; ignored for `none`.
    pub r_values: Vec<f64>,
    pub phi: f64,
    pub quantities: Vec<Quantity>,
    pub convention: Convention,
    pub fidelity: Fidelity,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
    pub workers: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            scenario: Scenario::None,
            p_values: vec![0.0],
            r_values: linspace(0.0, R_MAX, DEFAULT_R_POINTS),
            phi: 0.0,
            quantities: vec![Quantity::DTotal],
            convention: Convention::AsPrinted,
            fidelity: Fidelity::Canonical,
            out: None,
            format: OutputFormat::Csv,
            workers: 1,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), SweepError> {
        if self.p_values.is_empty() {
            return Err(SweepError::Config("no p values".into()));
        }
        if let Some(p) = self.p_values.iter().find(|p| !(0.0..=P_MAX).contains(*p)) {
            return Err(SweepError::Config(format!("p = {p} outside [0, 0.5]")));
        }
        if self.r_values.is_empty() {
            return Err(SweepError::Config("no r values".into()));
        }
        if let Some(r) = self.r_values.iter().find(|r| !(0.0..=R_MAX).contains(*r)) {
            return Err(SweepError::Config(format!("r = {r} outside [0, pi/4]")));
        }
        if !self.phi.is_finite() {
            return Err(SweepError::Config(format!("phi = {} is not finite", self.phi)));
        }
        if self.quantities.is_empty() {
            return Err(SweepError::Config("no quantities requested".into()));
        }
        if self.workers == 0 {
            return Err(SweepError::Config("workers must be positive".into()));
        }
        Ok(())
    }

    /// Applies `key = value` settings; unknown keys are errors.
    pub fn apply(&mut self, key: &str, value: &str) -> Result<(), SweepError> {
        match key {
            "scenario" => self.scenario = value.parse()?,
            "p" => self.p_values = parse_list(value)?,
            "r" => self.r_values = parse_range(value)?,
            "phi" => self.phi = parse_real(value)?,
            "quantities" => {
                self.quantities =
                    value.split(',').filter(|s| !s.trim().is_empty()).map(str::parse).collect::<Result<_, _>>()?
            }
            "convention" => self.convention = value.parse()?,
            "fidelity" => self.fidelity = parse_fidelity(value)?,
            "format" => self.format = value.parse()?,
            "out" => self.out = Some(PathBuf::from(value.trim())),
            "workers" => {
                self.workers = value
                    .trim()
                    .parse()
                    .map_err(|_| SweepError::Config(format!("workers: '{value}' is not a positive integer")))?
            }
            other => return Err(SweepError::Config(format!("unknown config key '{other}'"))),
        }
        Ok(())
    }

    /// Loads a flat config file: one `key = value` per line, `#` starts a comment.
    pub fn from_file(path: &Path) -> Result<Self, SweepError> {
        let text =
            std::fs::read_to_string(path).map_err(|source| SweepError::Io { path: path.to_path_buf(), source })?;
        let mut config = Self::default();
        for (key, value) in parse_key_values(&text)? {
            config.apply(&key, &value)?;
        }
        Ok(config)
    }
}

pub fn parse_fidelity(s: &str) -> Result<Fidelity, SweepError> {
    match s.trim().to_ascii_lowercase().as_str() {
        "canonical" => Ok(Fidelity::Canonical),
        "as-printed" | "printed" => Ok(Fidelity::AsPrinted),
        other => Err(SweepError::Config(format!("unknown fidelity '{other}' (expected canonical or as-printed)"))),
    }
}

/// Parses `key = value` lines in order. Later keys override earlier ones.
pub fn parse_key_values(text: &str) -> Result<BTreeMap<String, String>, SweepError> {
    let mut out = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| SweepError::Config(format!("line {}: expected key = value", lineno + 1)))?;
        out.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(out)
}

/// A real number, `pi`, or a multiple/fraction of it: `0.3`, `pi/4`, `3*pi/16`.
pub fn parse_real(s: &str) -> Result<f64, SweepError> {
    let bad = || SweepError::Config(format!("cannot parse '{s}' as a real number"));
    let t = s.trim().to_ascii_lowercase();
    if !t.contains("pi") {
        return t.parse::<f64>().map_err(|_| bad());
    }
    let (numer, denom) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim().parse::<f64>().map_err(|_| bad())?),
        None => (t.as_str(), 1.0),
    };
    let factor = match numer.strip_suffix("pi").map(str::trim) {
        Some("") => 1.0,
        Some(f) => f.trim_end_matches('*').trim().parse::<f64>().map_err(|_| bad())?,
        None => return Err(bad()),
    };
    Ok(factor * PI / denom)
}

/// Comma-separated reals.
pub fn parse_list(s: &str) -> Result<Vec<f64>, SweepError> {
    s.split(',').filter(|x| !x.trim().is_empty()).map(parse_real).collect()
}

/// `start:end:steps` (inclusive, evenly spaced) or a single value.
pub fn parse_range(s: &str) -> Result<Vec<f64>, SweepError> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [single] => Ok(vec![parse_real(single)?]),
        [start, end, steps] => {
            let steps: usize = steps
                .trim()
                .parse()
                .map_err(|_| SweepError::Config(format!("range steps '{steps}' is not a positive integer")))?;
            if steps == 0 {
                return Err(SweepError::Config("range needs at least one step".into()));
            }
            Ok(linspace(parse_real(start)?, parse_real(end)?, steps))
        }
        _ => Err(SweepError::Config(format!("cannot parse range '{s}' (expected start:end:steps)"))),
    }
}

/// `n` evenly spaced points from `start` to `end`, both endpoints exact.
pub fn linspace(start: f64, end: f64, n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![start],
        _ => (0..n).map(|k| if k == n - 1 { end } else { start + (end - start) * k as f64 / (n - 1) as f64 }).collect(),
    }
}
