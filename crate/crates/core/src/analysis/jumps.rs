use std::collections::HashMap;

use serde::Serialize;

use super::periodicity::{canonical_rotation, differences};
use crate::error::{invalid, Result};
use crate::seq::SequenceRun;

pub const DEFAULT_JUMP_FACTOR: f64 = 3.0;
const MAX_CHUNK: usize = 8;

/// Differences that tower over the median, and the texture between them.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JumpStructure {
    pub jump_factor: f64,
    pub median_difference: f64,
    /// Term indices `m` (0-based) with `a_m - a_(m-1)` above the threshold.
    pub jump_indices: Vec<usize>,
    pub jump_sizes: Vec<u64>,
    /// `m_(k+1) - m_k`.
    pub inter_jump_gaps: Vec<usize>,
    /// `a_(m_(k+1)) - a_(m_k)`.
    pub jump_spacings: Vec<u64>,
    /// Most common block of differences between jumps, canonically rotated.
    pub chunk_pattern: Vec<u64>,
    /// Share of between-jump differences tiled by `chunk_pattern`.
    pub chunk_coverage: f64,
}

impl JumpStructure {
    /// `size_k - (2 size_(k-1) - offset)` for consecutive jumps.
    pub fn doubling_residuals(&self, offset: i64) -> Vec<i64> {
        self.jump_sizes.windows(2).map(|w| w[1] as i64 - (2 * w[0] as i64 - offset)).collect()
    }

    /// Whether every consecutive pair obeys `size_k = 2 size_(k-1) - offset`
    /// within `tolerance`.
    pub fn follows_doubling_law(&self, offset: i64, tolerance: i64) -> bool {
        self.jump_sizes.len() >= 2 && self.doubling_residuals(offset).iter().all(|r| r.abs() <= tolerance)
    }

    /// Ratios of consecutive inter-jump gaps.
    pub fn gap_ratios(&self) -> Vec<f64> {
        self.inter_jump_gaps.windows(2).map(|w| w[1] as f64 / w[0] as f64).collect()
    }

    pub fn mean_jump_spacing(&self) -> Option<f64> {
        (!self.jump_spacings.is_empty())
            .then(|| self.jump_spacings.iter().sum::<u64>() as f64 / self.jump_spacings.len() as f64)
    }
}

fn median(xs: &[u64]) -> f64 {
    let mut v = xs.to_vec();
    v.sort_unstable();
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2] as f64
    } else {
        (v[n / 2 - 1] + v[n / 2]) as f64 / 2.0
    }
}

/// Detects jumps above `jump_factor` times the median difference.
pub fn detect_quasi_regular(run: &SequenceRun, jump_factor: f64) -> Result<Option<JumpStructure>> {
    if jump_factor.is_nan() || jump_factor <= 1.0 {
        return invalid(format!("jump factor must exceed 1, got {jump_factor}"));
    }
    let terms = run.terms();
    if terms.len() < 3 {
        return Ok(None);
    }
    let d = differences(terms);
    let med = median(&d);
    let threshold = jump_factor * med;
    let jump_indices: Vec<usize> = (0..d.len()).filter(|&i| d[i] as f64 > threshold).map(|i| i + 1).collect();
    if jump_indices.is_empty() {
        return Ok(None);
    }
    let jump_sizes = jump_indices.iter().map(|&m| d[m - 1]).collect();
    let inter_jump_gaps = jump_indices.windows(2).map(|w| w[1] - w[0]).collect();
    let jump_spacings = jump_indices.windows(2).map(|w| terms[w[1]] - terms[w[0]]).collect();
    let segments: Vec<&[u64]> = jump_indices.windows(2).map(|w| &d[w[0]..w[1] - 1]).collect();
    let (chunk_pattern, chunk_coverage) = dominant_chunk(&segments);
    Ok(Some(JumpStructure {
        jump_factor,
        median_difference: med,
        jump_indices,
        jump_sizes,
        inter_jump_gaps,
        jump_spacings,
        chunk_pattern,
        chunk_coverage,
    }))
}

/// For each block length, takes the most frequent window and measures how
/// much of the segments it tiles greedily. Returns the shortest block whose
/// coverage is within 0.02 of the best.
fn dominant_chunk(segments: &[&[u64]]) -> (Vec<u64>, f64) {
    let total: usize = segments.iter().map(|s| s.len()).sum();
    if total == 0 {
        return (Vec::new(), 0.0);
    }
    let mut candidates = Vec::new();
    for len in 1..=MAX_CHUNK {
        let mut freq: HashMap<Vec<u64>, usize> = HashMap::new();
        for seg in segments {
            for w in seg.windows(len) {
                *freq.entry(canonical_rotation(w)).or_default() += 1;
            }
        }
        let Some((block, _)) = freq.into_iter().max_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(&a.0))) else {
            continue;
        };
        let coverage = tiled(segments, &block) as f64 / total as f64;
        candidates.push((block, coverage));
    }
    let best = candidates.iter().map(|c| c.1).fold(0.0, f64::max);
    candidates.into_iter().find(|c| c.1 >= best - 0.02).unwrap_or_default()
}

/// Positions covered when tiling with rotations of `block` that continue in
/// phase; a fresh match may start at any offset.
fn tiled(segments: &[&[u64]], block: &[u64]) -> usize {
    let len = block.len();
    let mut covered = 0;
    for seg in segments {
        let mut i = 0;
        while i + len <= seg.len() {
            if canonical_rotation(&seg[i..i + len]) == block {
                covered += len;
                i += len;
            } else {
                i += 1;
            }
        }
    }
    covered
}

/// Ordinary least squares `y ≈ intercept + slope x`.
pub fn linear_fit(points: &[(f64, f64)]) -> Option<(f64, f64)> {
    let n = points.len() as f64;
    if points.len() < 2 {
        return None;
    }
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    Some((my - slope * mx, slope))
}
