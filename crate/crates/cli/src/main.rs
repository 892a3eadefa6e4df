use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use qtsteer_cli::figures::compare_conventions;
use qtsteer_cli::presets::DEFAULT_R_POINTS;
use qtsteer_cli::{run_sweep, verify, write_output, Preset, SweepConfig, SweepError};

#[derive(Parser)]
#[command(name = "qtsteer", version, about = "Qubit-qutrit decoherence, uncertainty and steering under acceleration")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate quantities over a (p, r) grid.
    Sweep(SweepArgs),
    /// Run a named figure sweep.
    Preset(PresetArgs),
    /// List the available presets.
    Presets,
    /// Check closed forms against the oracle and measures against known values.
    Verify,
}

#[derive(Args)]
struct SweepArgs {
    /// Flat `key = value` config file; flags override its settings.
    #[arg(long)]
    config: Option<PathBuf>,
    /// none, qubit, qutrit or both.
    #[arg(long)]
    scenario: Option<String>,
    /// Comma-separated mixing values in [0, 0.5].
    #[arg(long)]
    p: Option<String>,
    /// start:end:steps, values in [0, pi/4]; `pi/4` style expressions accepted.
    #[arg(long)]
    r: Option<String>,
    /// Unruh phase; has no effect on region-I quantities.
    #[arg(long, allow_hyphen_values = true)]
    phi: Option<String>,
    /// Comma-separated quantity names.
    #[arg(long)]
    quantities: Option<String>,
    /// as-printed or deficit.
    #[arg(long)]
    convention: Option<String>,
    /// canonical or as-printed simultaneous-acceleration table.
    #[arg(long)]
    fidelity: Option<String>,
    /// csv or json.
    #[arg(long)]
    format: Option<String>,
    /// Output path; stdout when omitted or `-`.
    #[arg(long)]
    out: Option<String>,
    #[arg(long)]
    workers: Option<String>,
}

#[derive(Args)]
struct PresetArgs {
    name: String,
    #[arg(long)]
    out: Option<String>,
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    convention: Option<String>,
    #[arg(long)]
    workers: Option<String>,
}

fn apply_flags(config: &mut SweepConfig, flags: &[(&str, &Option<String>)]) -> Result<(), SweepError> {
    for (key, value) in flags {
        if let Some(v) = value {
            config.apply(key, v)?;
        }
    }
    Ok(())
}

fn sweep(args: SweepArgs) -> Result<(), SweepError> {
    let mut config = match &args.config {
        Some(path) => SweepConfig::from_file(path)?,
        None => SweepConfig::default(),
    };
    apply_flags(
        &mut config,
        &[
            ("scenario", &args.scenario),
            ("p", &args.p),
            ("r", &args.r),
            ("phi", &args.phi),
            ("quantities", &args.quantities),
            ("convention", &args.convention),
            ("fidelity", &args.fidelity),
            ("format", &args.format),
            ("out", &args.out),
            ("workers", &args.workers),
        ],
    )?;
    let records = run_sweep(&config)?;
    write_output(&records, config.format, config.out.as_deref())
}

fn preset(args: PresetArgs) -> Result<(), SweepError> {
    let mut config = args.name.parse::<Preset>()?.config();
    apply_flags(
        &mut config,
        &[("out", &args.out), ("format", &args.format), ("convention", &args.convention), ("workers", &args.workers)],
    )?;
    let records = run_sweep(&config)?;
    write_output(&records, config.format, config.out.as_deref())
}

fn run_verify() -> Result<(), SweepError> {
    let report = verify()?;
    print!("{report}");
    let comparison = compare_conventions(DEFAULT_R_POINTS).map_err(|e| SweepError::Verification(e.to_string()))?;
    println!();
    print!("{comparison}");
    if report.passed() {
        Ok(())
    } else {
        let names: Vec<&str> = report.failures().iter().map(|c| c.name.as_str()).collect();
        Err(SweepError::Verification(names.join(", ")))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let result = match cli.command {
        Command::Sweep(args) => sweep(args),
        Command::Preset(args) => preset(args),
        Command::Presets => {
            for p in Preset::ALL {
                println!("{:<6} {}", p.name(), p.description());
            }
            Ok(())
        }
        Command::Verify => run_verify(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qtsteer: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
