use std::path::PathBuf;

use addseq_core::io::{density_csv, histogram_csv, terms_csv, RunRecord};
use clap::{Args, ValueEnum};
use serde_json::Value;

use crate::failure::{CliResult, Failure};
use crate::output::{read_file, OutputArgs};

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportKind {
    /// One term per line.
    Terms,
    /// `index,ratio` with the running density `n / a_n`.
    Density,
    /// `bin_center,count` from a stored quasiperiod report.
    Histogram,
}

#[derive(Args, Debug)]
pub struct ExportArgs {
    /// JSON run written by `gen --format json` or `analyze`.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long = "to", value_enum, default_value = "terms")]
    pub kind: ExportKind,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn stored_histogram(record: &RunRecord) -> CliResult<Vec<(f64, u64)>> {
    let missing = || Failure::Usage("input has no quasiperiod histogram; run analyze with --quasiperiod".into());
    let quasi = record.report.as_ref().and_then(|r| r.get("quasiperiod")).filter(|q| !q.is_null()).ok_or_else(missing)?;
    let lambda = quasi.get("lambda").and_then(Value::as_f64).ok_or_else(missing)?;
    let counts: Vec<u64> = quasi
        .get("histogram")
        .and_then(Value::as_array)
        .ok_or_else(missing)?
        .iter()
        .map(|c| c.as_u64().ok_or_else(missing))
        .collect::<CliResult<_>>()?;
    let width = lambda / counts.len().max(1) as f64;
    Ok(counts.into_iter().enumerate().map(|(i, c)| ((i as f64 + 0.5) * width, c)).collect())
}

pub fn run(args: ExportArgs) -> CliResult {
    let record = RunRecord::from_json(&read_file(&args.input)?)?;
    let content = match args.kind {
        ExportKind::Terms => terms_csv(&record.terms),
        ExportKind::Density => {
            let series: Vec<(usize, f64)> =
                record.terms.iter().enumerate().map(|(i, &a)| (i + 1, (i + 1) as f64 / a as f64)).collect();
            density_csv(&series)
        }
        ExportKind::Histogram => histogram_csv(&stored_histogram(&record)?),
    };
    let stem = args.input.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "run".into());
    let suffix = match args.kind {
        ExportKind::Terms => "terms",
        ExportKind::Density => "density",
        ExportKind::Histogram => "histogram",
    };
    if let Some(path) = args.output.emit(&format!("{stem}.{suffix}"), "csv", &content)? {
        eprintln!("written to {}", path.display());
    }
    Ok(())
}
