use addseq_core::io::{terms_csv, RunRecord};
use addseq_core::{generate, Rule, SequenceRun};
use clap::{Args, ValueEnum};

use crate::failure::CliResult;
use crate::output::{run_stem, OutputArgs};

#[derive(Args, Debug, Clone)]
pub struct RunSpec {
    /// Rule: `ulam`, `v` or `z:a1,a2,...`.
    #[arg(long)]
    pub rule: String,
    /// Initial terms, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub init: Vec<u64>,
    /// Largest value examined.
    #[arg(long)]
    pub limit: u64,
}

impl RunSpec {
    pub fn generate(&self) -> CliResult<SequenceRun> {
        let rule: Rule = self.rule.parse()?;
        Ok(generate(&rule, &self.init, self.limit)?)
    }

    pub fn stem(&self) -> String {
        run_stem(&self.rule, &self.init, self.limit)
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[command(flatten)]
    pub spec: RunSpec,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[command(flatten)]
    pub output: OutputArgs,
}

pub fn run(args: GenArgs) -> CliResult {
    let run = args.spec.generate()?;
    let (content, ext) = match args.format {
        Format::Csv => (terms_csv(run.terms()), "csv"),
        Format::Json => (RunRecord::from_run(&run).to_json() + "\n", "json"),
    };
    if let Some(path) = args.output.emit(&args.spec.stem(), ext, &content)? {
        eprintln!("{} terms written to {}", run.len(), path.display());
    }
    Ok(())
}
