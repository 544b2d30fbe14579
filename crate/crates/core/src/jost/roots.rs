//! Locating the complex zeros of the barrier Jost function.
//!
//! Zero `n` of the fourth quadrant lives in the cell `Re β ∈ ((n-½)π, (n+½)π)`.
//! It is found by damped Newton iteration from the asymptotic seed, with a
//! grid-scan fallback over the cell for small `n` where the seed is poor.
//! Optionally the cell is certified to contain exactly one zero by counting
//! the winding number of `G` around its boundary.

use num_complex::Complex;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::jost::function::{jost_eval, Barrier, JostEval, DEFAULT_SERIES_SWITCH};
use crate::jost::{asymptotic_seed, JostError};
use crate::scalar::Real;

/// Cells with index up to this value are certified when `Certify::Auto`.
pub const AUTO_CERTIFY_MAX_N: usize = 100;

/// Upper edge of the scanned / certified cell, just below the real axis.
const CELL_TOP: f64 = -1e-6;
/// Depth of the cell below `ln(2nπ/√v)`.
const CELL_DEPTH_MARGIN: f64 = 3.0;
const MAX_HALVINGS: usize = 20;
const GRID_RE: usize = 24;
const GRID_IM: usize = 32;
/// Floating point floor of the relative residual, in units of `ε (1 + |β|)`.
const RESIDUAL_FLOOR_ULPS: f64 = 16.0;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Certify {
    /// Certify cells `n ≤ 100`.
    #[default]
    Auto,
    Always,
    Never,
}

impl Certify {
    pub fn applies_to(self, n: usize) -> bool {
        match self {
            Certify::Auto => n <= AUTO_CERTIFY_MAX_N,
            Certify::Always => true,
            Certify::Never => false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct RootConfig<T> {
    /// Bound on the relative residual: `|G|` over the size of the terms that
    /// cancel in it (see [`JostEval::relative_residual`]).
    pub tol_residual: T,
    /// Newton stops once `|Δβ| ≤ tol_step · max(|β|, 1)`.
    pub tol_step: T,
    pub max_iter: usize,
    pub series_switch: T,
    pub certify: Certify,
}

impl<T: Real> Default for RootConfig<T> {
    fn default() -> Self {
        Self {
            tol_residual: T::lit(1e-12),
            tol_step: T::lit(1e-12),
            max_iter: 50,
            series_switch: T::lit(DEFAULT_SERIES_SWITCH),
            certify: Certify::Auto,
        }
    }
}

impl<T: Real> RootConfig<T> {
    pub fn validate(&self) -> Result<(), JostError> {
        let ok = |x: T| x.is_finite() && x > T::zero();
        if !ok(self.tol_residual) || !ok(self.tol_step) || !ok(self.series_switch) || self.max_iter == 0
        {
            return Err(JostError::InvalidConfig);
        }
        Ok(())
    }

    /// Residual bound actually enforced at `β`: the configured tolerance, or the
    /// precision floor of the scalar type when that is larger.
    pub fn effective_tolerance(&self, beta: Complex<T>) -> T {
        let floor = T::lit(RESIDUAL_FLOOR_ULPS) * T::epsilon() * (T::one() + beta.norm());
        self.tol_residual.max(floor)
    }
}

/// One fourth-quadrant zero `β_n` of the Jost function. The third-quadrant
/// mirror `-conj(β_n)` is implied.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct JostZero<T> {
    pub n: usize,
    pub beta: Complex<T>,
    /// `|G(β)|`.
    pub residual: T,
    /// Newton steps taken on the accepted path.
    pub iterations: usize,
    /// Whether the cell's winding number was verified to be 1.
    pub certified: bool,
}

impl<T: Real> JostZero<T> {
    pub fn mirror(&self) -> Complex<T> {
        -self.beta.conj()
    }

    pub fn in_cell(&self) -> bool {
        in_cell(self.n, self.beta)
    }
}

fn cell_bounds<T: Real>(n: usize) -> (T, T) {
    let c = T::from_index(n) * T::PI();
    let h = T::FRAC_PI_2();
    (c - h, c + h)
}

fn in_cell<T: Real>(n: usize, beta: Complex<T>) -> bool {
    let (lo, hi) = cell_bounds::<T>(n);
    beta.re > lo && beta.re < hi && beta.im < T::zero()
}

/// Cell rectangle: `Re ∈ [(n-½)π, (n+½)π]`, `Im ∈ [-(|ln(2nπ/√v)| + 3), -1e-6]`.
#[derive(Clone, Copy, Debug)]
pub struct CellRect<T> {
    pub re_lo: T,
    pub re_hi: T,
    pub im_lo: T,
    pub im_hi: T,
}

impl<T: Real> CellRect<T> {
    pub fn for_index(n: usize, barrier: &Barrier<T>) -> Self {
        let (re_lo, re_hi) = cell_bounds::<T>(n);
        let npi = T::from_index(n) * T::PI();
        let log = (T::lit(2.0) * npi / barrier.v().sqrt()).ln().abs();
        Self {
            re_lo,
            re_hi,
            im_lo: -(log + T::lit(CELL_DEPTH_MARGIN)),
            im_hi: T::lit(CELL_TOP),
        }
    }

    fn corners(&self) -> [Complex<T>; 4] {
        [
            Complex::new(self.re_lo, self.im_lo),
            Complex::new(self.re_hi, self.im_lo),
            Complex::new(self.re_hi, self.im_hi),
            Complex::new(self.re_lo, self.im_hi),
        ]
    }
}

struct NewtonOutcome<T> {
    beta: Complex<T>,
    eval: JostEval<T>,
    iterations: usize,
}

fn newton<T: Real>(
    start: Complex<T>,
    barrier: &Barrier<T>,
    cfg: &RootConfig<T>,
) -> Option<NewtonOutcome<T>> {
    let mut beta = start;
    let mut eval = jost_eval(beta, barrier, cfg.series_switch);
    for iter in 1..=cfg.max_iter {
        if !(eval.value.re.is_finite() && eval.value.im.is_finite()) || eval.derivative.norm() == T::zero() {
            return None;
        }
        let step = eval.value / eval.derivative;
        let mut trial = beta - step;
        let mut trial_eval = jost_eval(trial, barrier, cfg.series_switch);
        let mut scale = T::one();
        let mut halvings = 0;
        while !(trial_eval.value.norm() < eval.value.norm()) && halvings < MAX_HALVINGS {
            scale = scale / T::lit(2.0);
            trial = beta - step * scale;
            trial_eval = jost_eval(trial, barrier, cfg.series_switch);
            halvings += 1;
        }
        if !(trial_eval.value.norm() < eval.value.norm()) {
            // no descent along the Newton direction: at the rounding floor or lost
            let converged = eval.relative_residual() <= cfg.effective_tolerance(beta);
            return converged.then_some(NewtonOutcome {
                beta,
                eval,
                iterations: iter - 1,
            });
        }
        let taken = (step * scale).norm();
        beta = trial;
        eval = trial_eval;
        if taken <= cfg.tol_step * beta.norm().max(T::one()) {
            return Some(NewtonOutcome {
                beta,
                eval,
                iterations: iter,
            });
        }
    }
    (eval.relative_residual() <= cfg.effective_tolerance(beta)).then_some(NewtonOutcome {
        beta,
        eval,
        iterations: cfg.max_iter,
    })
}

fn accept<T: Real>(n: usize, out: &NewtonOutcome<T>, cfg: &RootConfig<T>) -> bool {
    in_cell(n, out.beta) && out.eval.relative_residual() <= cfg.effective_tolerance(out.beta)
}

/// Newton started at grid points of the cell, best relative residual first.
fn grid_fallback<T: Real>(
    n: usize,
    barrier: &Barrier<T>,
    cfg: &RootConfig<T>,
) -> Option<NewtonOutcome<T>> {
    let rect = CellRect::for_index(n, barrier);
    let mut samples = Vec::with_capacity(GRID_RE * GRID_IM);
    for i in 0..GRID_RE {
        let fx = (T::from_index(i) + T::lit(0.5)) / T::from_index(GRID_RE);
        let re = rect.re_lo + (rect.re_hi - rect.re_lo) * fx;
        for j in 0..GRID_IM {
            let fy = (T::from_index(j) + T::lit(0.5)) / T::from_index(GRID_IM);
            let im = rect.im_lo + (rect.im_hi - rect.im_lo) * fy;
            let beta = Complex::new(re, im);
            let r = jost_eval(beta, barrier, cfg.series_switch).relative_residual();
            samples.push((r, beta));
        }
    }
    samples.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(std::cmp::Ordering::Equal));
    samples
        .iter()
        .take(8)
        .filter_map(|&(_, start)| newton(start, barrier, cfg))
        .find(|out| accept(n, out, cfg))
}

/// Locates the `n`-th fourth-quadrant zero of `G(·; v)`.
pub fn find_zero<T: Real>(
    n: usize,
    barrier: &Barrier<T>,
    cfg: &RootConfig<T>,
) -> Result<JostZero<T>, JostError> {
    cfg.validate()?;
    if n == 0 {
        return Err(JostError::ZeroIndex);
    }
    if barrier.is_free() {
        return Err(JostError::FreeParticle);
    }
    let seed = asymptotic_seed(n, barrier)?;
    let outcome = match newton(seed, barrier, cfg) {
        Some(out) if accept(n, &out, cfg) => out,
        _ => grid_fallback(n, barrier, cfg).ok_or(JostError::ConvergenceFailure { n })?,
    };
    let certified = if cfg.certify.applies_to(n) {
        let rect = CellRect::for_index(n, barrier);
        let w = winding_number(&rect, barrier, cfg.series_switch)?;
        if w != 1 {
            return Err(JostError::CertificationFailure { n, winding: w });
        }
        true
    } else {
        false
    };
    Ok(JostZero {
        n,
        beta: outcome.beta,
        residual: outcome.eval.value.norm(),
        iterations: outcome.iterations,
        certified,
    })
}

/// Zeros `1..=n_max`, sorted by `n`. Indices are solved in parallel on the
/// current rayon pool; each solve is independent, so the output does not
/// depend on the thread count.
pub fn find_zeros<T: Real>(
    n_max: usize,
    barrier: &Barrier<T>,
    cfg: &RootConfig<T>,
) -> Result<Vec<JostZero<T>>, JostError> {
    if n_max == 0 {
        return Err(JostError::EmptyRequest);
    }
    cfg.validate()?;
    (1..=n_max)
        .into_par_iter()
        .map(|n| {
            find_zero(n, barrier, cfg).map_err(|e| JostError::AtIndex {
                n,
                source: Box::new(e),
            })
        })
        .collect()
}

/// Number of zeros of `G` inside the rectangle, from the total change of
/// `arg G` along its boundary. Each edge is sampled adaptively until the
/// phase increment between neighbouring samples is below `π/8`.
pub fn winding_number<T: Real>(
    rect: &CellRect<T>,
    barrier: &Barrier<T>,
    series_switch: T,
) -> Result<i64, JostError> {
    let g = |b: Complex<T>| jost_eval(b, barrier, series_switch).value;
    let corners = rect.corners();
    let mut total = T::zero();
    for k in 0..4 {
        let a = corners[k];
        let b = corners[(k + 1) % 4];
        let segments = 64;
        let mut prev_pt = a;
        let mut prev_val = g(a);
        for s in 1..=segments {
            let t = T::from_index(s) / T::from_index(segments);
            let pt = a + (b - a) * t;
            let val = g(pt);
            total = total + arg_increment(&g, prev_pt, prev_val, pt, val, 0)?;
            prev_pt = pt;
            prev_val = val;
        }
    }
    let turns = total / (T::lit(2.0) * T::PI());
    let rounded = turns.round();
    if (turns - rounded).abs() > T::lit(1e-3) {
        return Err(JostError::WindingIndeterminate(turns.to_f64_lossy()));
    }
    Ok(rounded.to_i64().unwrap_or(i64::MIN))
}

fn arg_increment<T: Real, F: Fn(Complex<T>) -> Complex<T>>(
    g: &F,
    a: Complex<T>,
    ga: Complex<T>,
    b: Complex<T>,
    gb: Complex<T>,
    depth: usize,
) -> Result<T, JostError> {
    const MAX_DEPTH: usize = 40;
    if ga.norm() == T::zero() || gb.norm() == T::zero() {
        return Err(JostError::ZeroOnContour);
    }
    let d = (gb / ga).arg();
    if d.abs() < T::FRAC_PI_8() {
        return Ok(d);
    }
    if depth >= MAX_DEPTH {
        return Err(JostError::ZeroOnContour);
    }
    let mid = (a + b) / T::lit(2.0);
    let gm = g(mid);
    Ok(arg_increment(g, a, ga, mid, gm, depth + 1)? + arg_increment(g, mid, gm, b, gb, depth + 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: f64) -> Barrier<f64> {
        Barrier::new(v).unwrap()
    }

    #[test]
    fn first_zero_matches_high_precision_root() {
        let z = find_zero(1, &b(2.0), &RootConfig::default()).unwrap();
        assert!((z.beta.re - 2.956_172_024_845_801_7).abs() < 1e-13);
        assert!((z.beta.im + 1.352_258_239_910_774).abs() < 1e-13);
        assert!(z.certified);
        assert!(z.residual <= 1e-12);
        assert!(z.in_cell());
    }

    #[test]
    fn small_index_roots() {
        let expected = [
            (2, 6.083_083_199_221_100_9, -2.148_208_816_020_897_5),
            (3, 9.251_106_966_434_727, -2.575_635_773_346_177_4),
            (10, 31.326_757_256_907_382, -3.794_023_127_314_23),
            (100, 314.143_042_776_426_75, -6.096_543_485_324_889),
        ];
        for (n, re, im) in expected {
            let z = find_zero(n, &b(2.0), &RootConfig::default()).unwrap();
            assert!((z.beta.re - re).abs() < 1e-12 * re, "n={n}: {}", z.beta);
            assert!((z.beta.im - im).abs() < 1e-11, "n={n}: {}", z.beta);
        }
    }

    #[test]
    fn free_particle_has_no_zeros() {
        assert!(matches!(
            find_zero(1, &b(0.0), &RootConfig::default()),
            Err(JostError::FreeParticle)
        ));
    }

    #[test]
    fn empty_request_rejected() {
        assert!(matches!(
            find_zeros(0, &b(2.0), &RootConfig::default()),
            Err(JostError::EmptyRequest)
        ));
    }

    #[test]
    fn invalid_config_rejected() {
        let cfg = RootConfig {
            max_iter: 0,
            ..RootConfig::default()
        };
        assert!(matches!(find_zero(1, &b(2.0), &cfg), Err(JostError::InvalidConfig)));
    }

    #[test]
    fn catalog_ordering_and_trends() {
        let zs = find_zeros(10, &b(2.0), &RootConfig::default()).unwrap();
        assert_eq!(zs.len(), 10);
        for (i, w) in zs.windows(2).enumerate() {
            assert_eq!(w[0].n, i + 1);
            assert!(w[1].beta.re > w[0].beta.re);
            assert!(w[1].beta.im < w[0].beta.im);
        }
    }

    #[test]
    fn large_index_close_to_seed() {
        let bar = b(2.0);
        let z = find_zero(9880, &bar, &RootConfig::default()).unwrap();
        let seed = asymptotic_seed(9880, &bar).unwrap();
        assert!((z.beta - seed).norm() < 1e-3);
        // arbitrary-precision root
        assert!((z.beta.re - 31_038.935_105_292_43).abs() < 1e-9);
        assert!((z.beta.im + 10.689_571_304_502_32).abs() < 1e-9);
        assert!(!z.certified);
        assert!(z.residual <= 1e-10);
    }

    #[test]
    fn winding_counts_single_zero_and_empty_region() {
        let bar = b(2.0);
        let rect = CellRect::for_index(1, &bar);
        assert_eq!(winding_number(&rect, &bar, 1e-3).unwrap(), 1);
        // strip above the zeros: nothing inside
        let upper = CellRect {
            re_lo: 0.5,
            re_hi: 40.0,
            im_lo: -0.5,
            im_hi: 3.0,
        };
        assert_eq!(winding_number(&upper, &bar, 1e-3).unwrap(), 0);
        // two cells together hold two zeros
        let mut two = CellRect::for_index(2, &bar);
        two.re_lo = rect.re_lo;
        assert_eq!(winding_number(&two, &bar, 1e-3).unwrap(), 2);
    }

    #[test]
    fn single_precision_first_zero() {
        let bar = Barrier::new(2.0f32).unwrap();
        let z = find_zero(1, &bar, &RootConfig::default()).unwrap();
        assert!((z.beta.re - 2.956_172).abs() < 1e-4);
        assert!((z.beta.im + 1.352_258).abs() < 1e-4);
        assert!(z.certified);
    }
}
