use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::seq::SequenceRun;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityProfile {
    pub lower: f64,
    pub upper: f64,
    pub tail_fraction: f64,
    /// `(n, n / a_n)` for every term, `n` counted from 1.
    pub series: Vec<(usize, f64)>,
}

pub const DEFAULT_TAIL_FRACTION: f64 = 0.5;

/// Running density `n / a_n`; `lower`/`upper` are its extremes over the last
/// `tail_fraction` of the indices.
pub fn density_profile(run: &SequenceRun, tail_fraction: f64) -> Result<DensityProfile> {
    if !(tail_fraction > 0.0 && tail_fraction <= 1.0) {
        return invalid(format!("tail fraction must lie in (0, 1], got {tail_fraction}"));
    }
    if run.is_empty() {
        return Err(Error::InsufficientData { needed: 1, got: 0 });
    }
    let series: Vec<(usize, f64)> =
        run.terms().iter().enumerate().map(|(i, &a)| (i + 1, (i + 1) as f64 / a as f64)).collect();
    let tail_len = ((series.len() as f64 * tail_fraction).ceil() as usize).clamp(1, series.len());
    let tail = &series[series.len() - tail_len..];
    let lower = tail.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    let upper = tail.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
    Ok(DensityProfile { lower, upper, tail_fraction, series })
}
