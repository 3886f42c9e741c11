use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::seq::SequenceRun;

pub const DEFAULT_BINS: usize = 64;
/// Share of leading terms left out of every histogram.
pub const TRANSIENT_CUT: f64 = 0.1;
pub const MIN_TERMS: usize = 1000;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuasiperiodReport {
    pub lambda: f64,
    pub histogram: Vec<u64>,
    /// Total-variation distance between the histogram and uniform.
    pub score: f64,
    pub scan_range: (f64, f64),
    pub coarse_step: f64,
    pub fine_step: f64,
    /// Median score over an even grid of the range, for judging how sharp the peak is.
    pub scan_median: f64,
    /// Grid points left out because the residues only hit a few exact values.
    pub discrete_skipped: usize,
}

impl QuasiperiodReport {
    /// `(bin_center, count)` with centers expressed in `[0, lambda)`.
    pub fn bin_centers(&self) -> Vec<(f64, u64)> {
        let width = self.lambda / self.histogram.len() as f64;
        self.histogram.iter().enumerate().map(|(i, &c)| ((i as f64 + 0.5) * width, c)).collect()
    }
}

/// Histogram of `a mod lambda` over `bins` equal bins.
pub fn mod_histogram(terms: &[u64], lambda: f64, bins: usize) -> Vec<u64> {
    let mut counts = vec![0u64; bins];
    let inv = 1.0 / lambda;
    for &a in terms {
        let x = a as f64 * inv;
        let bin = ((x - x.floor()) * bins as f64) as usize;
        counts[bin.min(bins - 1)] += 1;
    }
    counts
}

pub fn tv_from_uniform(counts: &[u64]) -> f64 {
    let total: u64 = counts.iter().sum();
    if total == 0 {
        return 0.0;
    }
    let uniform = 1.0 / counts.len() as f64;
    0.5 * counts.iter().map(|&c| (c as f64 / total as f64 - uniform).abs()).sum::<f64>()
}

/// Whether `terms mod lambda` is indistinguishable from a comb.
///
/// Integers reduced modulo a rational `p/q` land on `p` points spaced
/// `lambda / p` apart. Modulo a nearby `lambda` they drift off those points by
/// at most `max_term |lambda - p/q| / lambda`, and until that drift bridges the
/// gap between teeth (or two bins, if wider) the histogram is still a comb.
/// Only `p` up to `4 max(bins, lambda)` counts.
pub fn near_comb(lambda: f64, max_term: u64, bins: usize) -> bool {
    let cap = 4.0 * (bins as f64).max(lambda.ceil());
    (1..=(cap / lambda).floor() as u64).any(|q| {
        let p = (lambda * q as f64).round();
        let gap = (lambda / p).max(2.0 * lambda / bins as f64);
        let tolerance = gap * lambda / max_term.max(1) as f64;
        p >= 1.0 && p <= cap && (lambda - p / q as f64).abs() < tolerance
    })
}

/// Score at `lambda`, or `None` when the residues form a comb.
fn score_at(terms: &[u64], lambda: f64, bins: usize) -> Option<f64> {
    if near_comb(lambda, *terms.last()?, bins) {
        return None;
    }
    Some(tv_from_uniform(&mod_histogram(terms, lambda, bins)))
}

/// Best non-discrete point of `center + i step` for `|i| <= 10`.
fn refine(terms: &[u64], center: f64, step: f64, bins: usize) -> Option<(f64, f64)> {
    (-10..=10)
        .map(|i| center + i as f64 * step)
        .filter(|&l| l > 0.0)
        .filter_map(|l| Some((l, score_at(terms, l, bins)?)))
        .max_by(|a, b| a.1.total_cmp(&b.1))
}

const CANDIDATES: usize = 8;
const REFERENCE_POINTS: usize = 201;

/// Scans `[lambda_min, lambda_max]` for the modulus that makes the terms least
/// uniform.
///
/// A peak narrows like `1 / max term`, so the coarse grid runs on the first
/// [`MIN_TERMS`] terms past the transient with a step no larger than that
/// prefix resolves. The best candidates are then refined repeatedly, each
/// round dividing the step by ten and using ten times as many terms, until all
/// terms are in play. Moduli at which the residues take only a few exact
/// values are skipped. `scan_median` is taken over an even grid scored with all
/// terms.
pub fn quasiperiod_scan(
    run: &SequenceRun,
    lambda_min: f64,
    lambda_max: f64,
    coarse_step: f64,
    bins: usize,
) -> Result<QuasiperiodReport> {
    if !(lambda_min > 0.0 && lambda_min < lambda_max) {
        return invalid(format!("need 0 < lambda_min < lambda_max, got [{lambda_min}, {lambda_max}]"));
    }
    if coarse_step.is_nan() || coarse_step <= 0.0 {
        return invalid("coarse step must be positive");
    }
    if bins < 16 {
        return invalid(format!("need at least 16 bins, got {bins}"));
    }
    if run.len() < MIN_TERMS {
        return Err(Error::InsufficientData { needed: MIN_TERMS, got: run.len() });
    }
    let cut = (run.len() as f64 * TRANSIENT_CUT) as usize;
    let terms = &run.terms()[cut..];

    let mut prefix = MIN_TERMS.min(terms.len());
    let coarse_step = coarse_step.min(lambda_min / (4.0 * terms[prefix - 1] as f64));
    let steps = ((lambda_max - lambda_min) / coarse_step).floor() as usize;
    let mut coarse = Vec::with_capacity(steps + 1);
    let mut discrete_skipped = 0;
    for i in 0..=steps {
        let l = lambda_min + i as f64 * coarse_step;
        match score_at(&terms[..prefix], l, bins) {
            Some(s) => coarse.push((i, l, s)),
            None => discrete_skipped += 1,
        }
    }
    if coarse.is_empty() {
        return invalid("every grid point gives a discrete residue comb");
    }

    let mut ranked = coarse.clone();
    ranked.sort_by(|a, b| b.2.total_cmp(&a.2));
    let mut picked: Vec<(usize, f64)> = Vec::new();
    for &(i, l, _) in &ranked {
        if picked.len() == CANDIDATES {
            break;
        }
        if picked.iter().all(|&(j, _)| i.abs_diff(j) > 10) {
            picked.push((i, l));
        }
    }
    let mut centers: Vec<f64> = picked.into_iter().map(|p| p.1).collect();
    let mut step = coarse_step;
    loop {
        prefix = (prefix * 10).min(terms.len());
        step /= 10.0;
        centers = centers.iter().filter_map(|&c| refine(&terms[..prefix], c, step, bins)).map(|r| r.0).collect();
        if prefix == terms.len() || centers.is_empty() {
            break;
        }
    }
    let (lambda, score) = centers
        .iter()
        .filter_map(|&l| Some((l, score_at(terms, l, bins)?)))
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .ok_or_else(|| Error::CheckFailed("no non-discrete modulus survived refinement".into()))?;

    let reference_step = (lambda_max - lambda_min) / (REFERENCE_POINTS - 1) as f64;
    let mut reference: Vec<f64> = (0..REFERENCE_POINTS)
        .filter_map(|i| score_at(terms, lambda_min + i as f64 * reference_step, bins))
        .collect();
    reference.sort_by(f64::total_cmp);
    let scan_median = reference.get(reference.len() / 2).copied().unwrap_or(0.0);

    Ok(QuasiperiodReport {
        lambda,
        histogram: mod_histogram(terms, lambda, bins),
        score,
        scan_range: (lambda_min, lambda_max),
        coarse_step,
        fine_step: step,
        scan_median,
        discrete_skipped,
    })
}

pub fn residue_histogram(run: &SequenceRun, modulus: u64) -> Result<Vec<u64>> {
    if modulus < 2 {
        return invalid(format!("modulus must be at least 2, got {modulus}"));
    }
    let mut counts = vec![0u64; modulus as usize];
    for &t in run.terms() {
        counts[(t % modulus) as usize] += 1;
    }
    Ok(counts)
}
