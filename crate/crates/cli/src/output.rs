use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::Args;

use crate::failure::{CliResult, Failure};

/// Where results go: an explicit file, a file in the output directory, or stdout.
#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Output file; `-` for standard output.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Directory for output files when `--output` is not given.
    #[arg(long, env = "ADDSEQ_OUT_DIR")]
    pub out_dir: Option<PathBuf>,
}

impl OutputArgs {
    pub fn target(&self, stem: &str, extension: &str) -> Option<PathBuf> {
        match (&self.output, &self.out_dir) {
            (Some(p), _) if p.as_os_str() == "-" => None,
            (Some(p), _) => Some(p.clone()),
            (None, Some(dir)) => Some(dir.join(format!("{stem}.{extension}"))),
            (None, None) => None,
        }
    }

    /// Writes `content` to the target and returns the path written, if any.
    pub fn emit(&self, stem: &str, extension: &str, content: &str) -> CliResult<Option<PathBuf>> {
        match self.target(stem, extension) {
            Some(path) => {
                write_file(&path, content)?;
                Ok(Some(path))
            }
            None => {
                let mut out = std::io::stdout().lock();
                out.write_all(content.as_bytes()).map_err(|e| Failure::Io(e.to_string()))?;
                Ok(None)
            }
        }
    }
}

pub fn write_file(path: &Path, content: &str) -> CliResult {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).map_err(|e| Failure::Io(format!("{}: {e}", parent.display())))?;
    }
    fs::write(path, content).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

pub fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

/// File stem such as `z2-1_1-3_25` for rule `z:2,1`, initials `1,3`, limit 25.
pub fn run_stem(rule: &str, initials: &[u64], limit: u64) -> String {
    let rule: String =
        rule.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '-' }).collect::<String>().replace("--", "-");
    let rule = rule.replacen("z-", "z", 1);
    let init: Vec<String> = initials.iter().map(u64::to_string).collect();
    format!("{rule}_{}_{limit}", init.join("-"))
}
