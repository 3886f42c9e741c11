use std::fmt::Write;

use addseq_core::analysis::{
    density_profile, detect_quasi_regular, detect_regularity, even_terms, quasiperiod_scan, residue_histogram,
    DEFAULT_BINS, DEFAULT_JUMP_FACTOR, DEFAULT_TAIL_FRACTION,
};
use addseq_core::io::RunRecord;
use clap::Args;
use serde_json::{json, Map, Value};

use crate::failure::{CliResult, Failure};
use crate::gen::RunSpec;
use crate::output::OutputArgs;

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub spec: RunSpec,
    /// Detect eventual periodicity of the differences.
    #[arg(long)]
    pub regularity: bool,
    #[arg(long, default_value_t = 3)]
    pub min_confirm: usize,
    /// Lower and upper density over the tail.
    #[arg(long)]
    pub density: bool,
    #[arg(long, default_value_t = DEFAULT_TAIL_FRACTION)]
    pub tail_fraction: f64,
    /// Quasiperiod scan over `MIN:MAX`.
    #[arg(long, value_name = "MIN:MAX")]
    pub quasiperiod: Option<String>,
    #[arg(long, default_value_t = 0.01)]
    pub coarse_step: f64,
    #[arg(long, default_value_t = DEFAULT_BINS)]
    pub bins: usize,
    /// Large jumps and the chunks between them.
    #[arg(long)]
    pub jumps: bool,
    #[arg(long, default_value_t = DEFAULT_JUMP_FACTOR)]
    pub jump_factor: f64,
    /// Counts of terms per residue class.
    #[arg(long, value_name = "MODULUS")]
    pub residues: Option<u64>,
    /// List the even terms.
    #[arg(long)]
    pub evens: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn parse_range(text: &str) -> CliResult<(f64, f64)> {
    let bad = || Failure::Usage(format!("expected MIN:MAX, got {text:?}"));
    let (lo, hi) = text.split_once(':').ok_or_else(bad)?;
    Ok((lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?))
}

pub fn run(mut args: AnalyzeArgs) -> CliResult {
    let quasi_range = args.quasiperiod.as_deref().map(parse_range).transpose()?;
    let none_selected =
        !(args.regularity || args.density || args.jumps || args.evens || quasi_range.is_some() || args.residues.is_some());
    if none_selected {
        args.regularity = true;
        args.density = true;
        args.jumps = true;
    }
    let run = args.spec.generate()?;
    let mut report = Map::new();
    let mut summary = format!("{} terms of {} from {:?} up to {}\n", run.len(), run.rule(), run.initials(), run.value_limit());

    if args.regularity {
        let rep = detect_regularity(&run, args.min_confirm)?;
        match &rep {
            Some(r) => writeln!(
                summary,
                "regular: period N={} fundamental difference D={} transient {} density {:.6} pattern {:?}",
                r.period,
                r.fundamental_difference,
                r.transient,
                r.density(),
                r.pattern
            ),
            None => writeln!(summary, "regular: no period confirmed within the run"),
        }
        .ok();
        report.insert("regularity".into(), json!(&rep));
    }
    if args.density {
        let d = density_profile(&run, args.tail_fraction)?;
        writeln!(summary, "density: lower {:.4} upper {:.4} over the last {} of indices", d.lower, d.upper, d.tail_fraction).ok();
        report.insert("density".into(), json!({ "lower": d.lower, "upper": d.upper, "tail_fraction": d.tail_fraction }));
    }
    if let Some((lo, hi)) = quasi_range {
        let q = quasiperiod_scan(&run, lo, hi, args.coarse_step, args.bins)?;
        writeln!(summary, "quasiperiod: lambda {:.5} score {:.4} (scan median {:.4})", q.lambda, q.score, q.scan_median).ok();
        report.insert("quasiperiod".into(), json!(&q));
    }
    if args.jumps {
        let j = detect_quasi_regular(&run, args.jump_factor)?;
        match &j {
            Some(j) => writeln!(
                summary,
                "jumps: {} found, sizes {:?}, dominant chunk {:?} covering {:.3}",
                j.jump_indices.len(),
                j.jump_sizes,
                j.chunk_pattern,
                j.chunk_coverage
            ),
            None => writeln!(summary, "jumps: none"),
        }
        .ok();
        report.insert("jumps".into(), json!(&j));
    }
    if let Some(m) = args.residues {
        let counts = residue_histogram(&run, m)?;
        writeln!(summary, "residues mod {m}: {counts:?}").ok();
        report.insert("residues".into(), json!({ "modulus": m, "counts": counts }));
    }
    if args.evens {
        let evens = even_terms(&run);
        writeln!(summary, "even terms: {evens:?}").ok();
        report.insert("evens".into(), json!(&evens));
    }

    print!("{summary}");
    let record = RunRecord { report: Some(Value::Object(report)), ..RunRecord::from_run(&run) };
    if let Some(path) = args.output.target(&args.spec.stem(), "json") {
        crate::output::write_file(&path, &(record.to_json() + "\n"))?;
        println!("report written to {}", path.display());
    }
    Ok(())
}
