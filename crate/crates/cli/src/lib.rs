//! Parameter sweeps, figure presets and self-verification for `qtsteer-core`.

pub mod config;
pub mod error;
pub mod figures;
pub mod output;
pub mod presets;
pub mod sweep;
pub mod verify;

pub use config::{OutputFormat, Quantity, SweepConfig};
pub use error::SweepError;
pub use figures::{compare_conventions, ConventionAssessment, FigureComparison};
pub use output::{format_value, parse_csv, parse_json, render, write_output, CSV_HEADER};
pub use presets::Preset;
pub use sweep::{run_sweep, SweepRecord};
pub use verify::{verify, CheckResult, CheckStatus, VerificationReport};
