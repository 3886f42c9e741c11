//! `addseq`: generate, analyze, verify and export greedy additive sequences.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

mod analyze;
mod export;
mod failure;
mod gen;
mod output;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "addseq", version, about = "Greedy additive sequences: generation and structural checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a sequence and write its terms.
    Gen(gen::GenArgs),
    /// Run detectors on a generated sequence.
    Analyze(analyze::AnalyzeArgs),
    /// Run a named verification suite.
    Verify(verify::VerifyArgs),
    /// Convert a stored JSON run to CSV.
    Export(export::ExportArgs),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Gen(args) => gen::run(args),
        Command::Analyze(args) => analyze::run(args),
        Command::Verify(args) => verify::run(args),
        Command::Export(args) => export::run(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}
