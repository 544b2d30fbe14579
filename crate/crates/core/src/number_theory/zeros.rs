//! Heights of the nontrivial zeta zeros on the critical line.
//!
//! Zeros are located as sign changes of Hardy's `Z` between Gram points.
//! A Gram point `g_k` is "good" when `(-1)^k Z(g_k) > 0`; between two
//! consecutive good points `g_a`, `g_b` (a Gram block) there are exactly
//! `b - a` zeros in the range handled here. Blocks whose Gram points show
//! fewer sign changes are subdivided until the missing pairs appear. After
//! every block the running count is checked against `N(g_b) = b + 1`.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::riemann_siegel::{gram_point, hardy_z, riemann_siegel_theta};
use super::NumberTheoryError;

/// Bracket half-width at which bisection stops.
pub const ZERO_TOLERANCE: f64 = 1e-9;
/// Maximum number of halvings of a Gram block's sample spacing.
pub const MAX_SUBDIVISION_DEPTH: usize = 12;
const GRAM_BATCH: usize = 2048;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ZeroSource {
    Computed,
    Ingested,
}

/// Increasing zero heights `t_first, t_first+1, …`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZetaZeroTable {
    heights: Vec<f64>,
    first_index: usize,
    source: ZeroSource,
}

impl ZetaZeroTable {
    pub fn new(
        heights: Vec<f64>,
        first_index: usize,
        source: ZeroSource,
    ) -> Result<Self, NumberTheoryError> {
        if first_index == 0 {
            return Err(NumberTheoryError::ZeroIndex);
        }
        if let Some(i) = heights
            .windows(2)
            .position(|w| !(w[1] > w[0]) || w[1] - w[0] < 1e-8)
        {
            return Err(NumberTheoryError::NotIncreasing { index: first_index + i + 1 });
        }
        if heights.first().is_some_and(|&t| !(t > 0.0)) {
            return Err(NumberTheoryError::NotIncreasing { index: first_index });
        }
        Ok(Self {
            heights,
            first_index,
            source,
        })
    }

    pub fn heights(&self) -> &[f64] {
        &self.heights
    }

    pub fn first_index(&self) -> usize {
        self.first_index
    }

    pub fn source(&self) -> ZeroSource {
        self.source
    }

    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    /// `t_n` for the global index `n`, if the table covers it.
    pub fn get(&self, n: usize) -> Option<f64> {
        n.checked_sub(self.first_index)
            .and_then(|i| self.heights.get(i).copied())
    }

    pub fn last_index(&self) -> usize {
        self.first_index + self.heights.len() - 1
    }

    /// Number of zeros with `t ≤ x`. Meaningful only for tables starting at 1.
    pub fn count_up_to(&self, x: f64) -> usize {
        self.first_index - 1 + self.heights.partition_point(|&t| t <= x)
    }
}

/// Smooth zero-counting estimate `θ(T)/π + 1`.
pub fn counting_estimate(t: f64) -> f64 {
    riemann_siegel_theta(t) / PI + 1.0
}

/// Outcome of comparing a zero count with `θ(T)/π + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountCheck {
    pub t: f64,
    pub counted: usize,
    pub estimate: f64,
    pub passed: bool,
}

/// Count of zeros `≤ t` against the smooth estimate, within ±1. `t` must lie
/// within the heights the table covers.
pub fn counting_check(table: &ZetaZeroTable, t: f64) -> CountCheck {
    let counted = table.count_up_to(t);
    let estimate = counting_estimate(t);
    CountCheck {
        t,
        counted,
        estimate,
        passed: (counted as f64 - estimate).abs() <= 1.0,
    }
}

/// The first `n_max` zero heights.
pub fn find_zeta_zeros(n_max: usize) -> Result<ZetaZeroTable, NumberTheoryError> {
    if n_max == 0 {
        return Err(NumberTheoryError::ZeroIndex);
    }
    let mut heights = scan(|count, _| count >= n_max)?;
    heights.truncate(n_max);
    ZetaZeroTable::new(heights, 1, ZeroSource::Computed)
}

/// All zero heights `≤ t_max`.
pub fn find_zeta_zeros_below(t_max: f64) -> Result<ZetaZeroTable, NumberTheoryError> {
    let mut heights = scan(|_, g| g > t_max)?;
    heights.retain(|&t| t <= t_max);
    ZetaZeroTable::new(heights, 1, ZeroSource::Computed)
}

#[derive(Clone, Copy)]
struct Sample {
    t: f64,
    z: f64,
}

fn gram_samples(from: i64, count: usize) -> Result<Vec<(i64, Sample)>, NumberTheoryError> {
    (0..count as i64)
        .into_par_iter()
        .map(|i| {
            let k = from + i;
            let g = gram_point(k)?.g;
            Ok((k, Sample { t: g, z: hardy_z(g) }))
        })
        .collect()
}

fn is_good(k: i64, z: f64) -> bool {
    if k.rem_euclid(2) == 0 {
        z > 0.0
    } else {
        z < 0.0
    }
}

/// Scans Gram blocks from `g_{-1}` until `done(zeros so far, last good Gram
/// point)` holds at a block boundary.
fn scan<F: Fn(usize, f64) -> bool>(done: F) -> Result<Vec<f64>, NumberTheoryError> {
    let mut heights: Vec<f64> = Vec::new();
    // Z < 0 below the first zero, so g_{-1} is good.
    let mut block: Vec<(i64, Sample)> = Vec::new();
    let mut next_k = -1i64;
    loop {
        let batch = gram_samples(next_k, GRAM_BATCH)?;
        next_k += GRAM_BATCH as i64;
        for (k, s) in batch {
            block.push((k, s));
            if block.len() == 1 {
                if !is_good(k, s.z) {
                    return Err(NumberTheoryError::CountMismatch {
                        t_lo: s.t,
                        t_hi: s.t,
                        found: 0,
                        expected: 0,
                    });
                }
                continue;
            }
            if !is_good(k, s.z) {
                continue;
            }
            let (k0, _) = block[0];
            let expected = (k - k0) as usize;
            let samples: Vec<Sample> = block.iter().map(|&(_, s)| s).collect();
            let brackets = block_brackets(&samples, expected)?;
            let roots: Vec<f64> = brackets
                .into_par_iter()
                .map(|(a, b)| bisect(a, b))
                .collect();
            heights.extend(roots);
            // N(g_k) = k + 1 at a good Gram point
            if heights.len() as i64 != k + 1 {
                return Err(NumberTheoryError::CountMismatch {
                    t_lo: samples[0].t,
                    t_hi: s.t,
                    found: heights.len(),
                    expected: (k + 1) as usize,
                });
            }
            let last = (k, s);
            block.clear();
            block.push(last);
            if done(heights.len(), s.t) {
                return Ok(heights);
            }
        }
    }
}

fn sign_change_brackets(samples: &[Sample]) -> Vec<(Sample, Sample)> {
    samples
        .windows(2)
        .filter(|w| (w[0].z > 0.0) != (w[1].z > 0.0))
        .map(|w| (w[0], w[1]))
        .collect()
}

/// Sign-change brackets of `Z` inside a Gram block, refining the sample grid
/// until `expected` changes are seen.
fn block_brackets(
    samples: &[Sample],
    expected: usize,
) -> Result<Vec<(Sample, Sample)>, NumberTheoryError> {
    let mut grid = samples.to_vec();
    let mut brackets = sign_change_brackets(&grid);
    let mut depth = 0;
    while brackets.len() < expected && depth < MAX_SUBDIVISION_DEPTH {
        let mids: Vec<Sample> = grid
            .par_windows(2)
            .map(|w| {
                let t = 0.5 * (w[0].t + w[1].t);
                Sample { t, z: hardy_z(t) }
            })
            .collect();
        let mut refined = Vec::with_capacity(grid.len() * 2);
        for (i, s) in grid.iter().enumerate() {
            refined.push(*s);
            if let Some(m) = mids.get(i) {
                refined.push(*m);
            }
        }
        grid = refined;
        brackets = sign_change_brackets(&grid);
        depth += 1;
    }
    if brackets.len() != expected {
        return Err(NumberTheoryError::CountMismatch {
            t_lo: samples[0].t,
            t_hi: samples[samples.len() - 1].t,
            found: brackets.len(),
            expected,
        });
    }
    Ok(brackets)
}

fn bisect(mut lo: Sample, mut hi: Sample) -> f64 {
    while hi.t - lo.t > 2.0 * ZERO_TOLERANCE {
        let t = 0.5 * (lo.t + hi.t);
        if t <= lo.t || t >= hi.t {
            break;
        }
        let z = hardy_z(t);
        if (z > 0.0) == (lo.z > 0.0) {
            lo = Sample { t, z };
        } else {
            hi = Sample { t, z };
        }
    }
    0.5 * (lo.t + hi.t)
}

/// Two-term asymptotic height `t_n ≈ 2πn / ln n`.
pub fn zeta_height_asymptotic(n: usize) -> Result<f64, NumberTheoryError> {
    if n < 2 {
        return Err(NumberTheoryError::HeightAsymptoticIndex(n));
    }
    let x = n as f64;
    Ok(2.0 * PI * x / x.ln())
}
