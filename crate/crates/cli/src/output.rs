//! CSV and JSON rendering of sweep records.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::config::OutputFormat;
use crate::error::SweepError;
use crate::sweep::SweepRecord;

pub const CSV_HEADER: &str = "scenario,p,r_q,r_t,phi,quantity,value";

pub const SIGNIFICANT_DIGITS: usize = 12;

/// Fixed-point with 12 significant digits; scientific outside `[1e-4, 1e12)`.
/// Negative zero prints as zero.
pub fn format_value(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    if v == 0.0 {
        return format!("{:.*}", SIGNIFICANT_DIGITS, 0.0);
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, v);
    let exponent: i32 = sci.rsplit_once('e').and_then(|(_, e)| e.parse().ok()).unwrap_or(0);
    if !(-4..12).contains(&exponent) {
        return sci;
    }
    let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exponent).max(0) as usize;
    format!("{v:.decimals$}")
}

pub fn render_csv(records: &[SweepRecord]) -> String {
    let mut out = String::with_capacity(64 * (records.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        let fields = [
            r.scenario.clone(),
            format_value(r.p),
            format_value(r.r_q),
            format_value(r.r_t),
            format_value(r.phi),
            r.quantity.clone(),
            format_value(r.value),
        ];
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

pub fn render_json(records: &[SweepRecord]) -> String {
    let mut s = serde_json::to_string_pretty(records).expect("records serialize");
    s.push('\n');
    s
}

pub fn render(records: &[SweepRecord], format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => render_csv(records),
        OutputFormat::Json => render_json(records),
    }
}

/// Parses CSV produced by [`render_csv`], checking the header and field count.
pub fn parse_csv(text: &str) -> Result<Vec<SweepRecord>, SweepError> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == CSV_HEADER => {}
        other => return Err(SweepError::Config(format!("bad CSV header: {other:?}"))),
    }
    lines
        .enumerate()
        .map(|(i, line)| {
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 7 {
                return Err(SweepError::Config(format!("row {}: expected 7 fields, got {}", i + 1, fields.len())));
            }
            let num = |s: &str| {
                s.parse::<f64>().map_err(|_| SweepError::Config(format!("row {}: '{s}' is not a number", i + 1)))
            };
            Ok(SweepRecord {
                scenario: fields[0].to_string(),
                p: num(fields[1])?,
                r_q: num(fields[2])?,
                r_t: num(fields[3])?,
                phi: num(fields[4])?,
                quantity: fields[5].to_string(),
                value: num(fields[6])?,
            })
        })
        .collect()
}

pub fn parse_json(text: &str) -> Result<Vec<SweepRecord>, SweepError> {
    serde_json::from_str(text).map_err(|e| SweepError::Config(format!("bad JSON: {e}")))
}

/// Writes to `path`, or to stdout when `path` is `None` or `-`.
pub fn write_output(records: &[SweepRecord], format: OutputFormat, path: Option<&Path>) -> Result<(), SweepError> {
    let text = render(records, format);
    match path {
        None => write_stdout(&text),
        Some(p) if p.as_os_str() == "-" => write_stdout(&text),
        Some(p) => {
            let io = |source| SweepError::Io { path: p.to_path_buf(), source };
            let mut w = BufWriter::new(File::create(p).map_err(io)?);
            w.write_all(text.as_bytes()).map_err(io)?;
            w.flush().map_err(io)
        }
    }
}

fn write_stdout(text: &str) -> Result<(), SweepError> {
    std::io::stdout()
        .lock()
        .write_all(text.as_bytes())
        .map_err(|source| SweepError::Io { path: "<stdout>".into(), source })
}
