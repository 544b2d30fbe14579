//! The s-wave Jost function of the spherical barrier `V(r) = V0` for `r < R`.
//!
//! Everything is dimensionless with `R = 1`: `β = kR` and `v = V0 R²`. With
//! `u = β² - v` the reduced Jost function is
//!
//! ```text
//! G(β; v) = C(u) - iβ S(u),   C(u) = cos √u,   S(u) = sin √u / √u
//! ```
//!
//! `C` and `S` are even in `√u`, so they are entire functions of `u` and the
//! branch of the square root never matters. The interior wave number is taken
//! as `√(β² - v)` rather than `√(v - β²)`; both give the same zero set, and this
//! choice makes the free limit `G(β; 0) = e^{-iβ}` exact. The normalized Jost
//! function is `f₊(β) = e^{iβ} G(β; v)`, which is identically 1 at `v = 0`.
//!
//! The zeros of `G` solve `√(β² - v) cot √(β² - v) = iβ`, but the cotangent form
//! is never evaluated: it has poles where `G` is perfectly regular.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::jost::JostError;
use crate::scalar::Real;

/// Default `|u|` below which `C`, `S` and their derivatives use power series.
pub const DEFAULT_SERIES_SWITCH: f64 = 1e-3;

/// Number of power-series terms used near `u = 0`.
const SERIES_TERMS: usize = 14;

/// Dimensionless barrier strength `v = V0 R²`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct Barrier<T> {
    v: T,
}

impl<T: Real> Barrier<T> {
    /// Repulsive barrier of strength `v ≥ 0`. `v = 0` is the free particle.
    pub fn new(v: T) -> Result<Self, JostError> {
        if !v.is_finite() || v < T::zero() {
            return Err(JostError::InvalidBarrier(v.to_f64_lossy()));
        }
        Ok(Self { v })
    }

    pub fn free() -> Self {
        Self { v: T::zero() }
    }

    #[inline]
    pub fn v(&self) -> T {
        self.v
    }

    #[inline]
    pub fn is_free(&self) -> bool {
        self.v == T::zero()
    }
}

/// Which square root of `u` the closed forms use. Results are identical for
/// both; the choice is exposed so that tests can exercise it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Principal,
    Negated,
}

/// `C(u)`, `S(u)` and their `u`-derivatives at one point.
#[derive(Clone, Copy, Debug)]
pub struct Trig<T> {
    pub c: Complex<T>,
    pub s: Complex<T>,
    pub dc: Complex<T>,
    pub ds: Complex<T>,
}

/// Evaluates `C`, `S`, `C'`, `S'` at `u`, switching to power series for
/// `|u| < series_switch`.
pub fn trig_of_u<T: Real>(u: Complex<T>, series_switch: T) -> Trig<T> {
    if u.norm() < series_switch {
        trig_series(u)
    } else {
        trig_closed(u, Branch::Principal)
    }
}

/// Closed forms through an explicit square root of `u`. Not valid at `u = 0`.
pub fn trig_closed<T: Real>(u: Complex<T>, branch: Branch) -> Trig<T> {
    let mut w = u.sqrt();
    if branch == Branch::Negated {
        w = -w;
    }
    let c = w.cos();
    let s = w.sin() / w;
    let two = T::lit(2.0);
    Trig {
        c,
        s,
        dc: -s / two,
        ds: (c - s) / (u * two),
    }
}

/// Taylor series of `C`, `S`, `C'`, `S'` about `u = 0`.
pub fn trig_series<T: Real>(u: Complex<T>) -> Trig<T> {
    // C = Σ (-u)^k/(2k)!,  S = Σ (-u)^k/(2k+1)!,  S' = Σ_{k≥1} k (-1)^k u^{k-1}/(2k+1)!
    let mut c = Complex::new(T::zero(), T::zero());
    let mut s = c;
    let mut ds = c;
    let mut pow = Complex::new(T::one(), T::zero()); // (-u)^k
    let mut pow_prev = Complex::new(T::zero(), T::zero()); // (-u)^(k-1)
    let mut fact_even = T::one(); // (2k)!
    for k in 0..SERIES_TERMS {
        let kk = T::from_index(k);
        let fact_odd = fact_even * (T::lit(2.0) * kk + T::one());
        c = c + pow / fact_even;
        s = s + pow / fact_odd;
        if k >= 1 {
            // k (-1)^k u^(k-1) = -k (-u)^(k-1)
            ds = ds - pow_prev * kk / fact_odd;
        }
        pow_prev = pow;
        pow = pow * (-u);
        fact_even = fact_odd * (T::lit(2.0) * kk + T::lit(2.0));
    }
    Trig {
        c,
        s,
        dc: -s / T::lit(2.0),
        ds,
    }
}

#[inline]
fn u_of<T: Real>(beta: Complex<T>, barrier: &Barrier<T>) -> Complex<T> {
    beta * beta - Complex::new(barrier.v(), T::zero())
}

/// Reduced Jost function `G(β; v)`.
pub fn jost_reduced<T: Real>(beta: Complex<T>, barrier: &Barrier<T>) -> Complex<T> {
    jost_reduced_with(beta, barrier, T::lit(DEFAULT_SERIES_SWITCH))
}

pub fn jost_reduced_with<T: Real>(
    beta: Complex<T>,
    barrier: &Barrier<T>,
    series_switch: T,
) -> Complex<T> {
    jost_eval(beta, barrier, series_switch).value
}

/// `G(β; v) = cos w - iβ sin w / w` evaluated literally with a chosen
/// square-root branch `w`, bypassing the series. Requires `β² ≠ v`. Loses
/// relative accuracy near the zeros; see [`jost_eval`].
pub fn jost_reduced_branch<T: Real>(
    beta: Complex<T>,
    barrier: &Barrier<T>,
    branch: Branch,
) -> Complex<T> {
    let tr = trig_closed(u_of(beta, barrier), branch);
    tr.c - Complex::<T>::i() * beta * tr.s
}

/// `G`, `dG/dβ` and the magnitude scale of the terms that cancel in `G`.
#[derive(Clone, Copy, Debug)]
pub struct JostEval<T> {
    pub value: Complex<T>,
    pub derivative: Complex<T>,
    pub scale: T,
}

impl<T: Real> JostEval<T> {
    /// `|G|` relative to the size of the terms that cancel at a zero. Its
    /// floating point floor grows like `ε|β|`.
    #[inline]
    pub fn relative_residual(&self) -> T {
        if self.scale > T::zero() {
            self.value.norm() / self.scale
        } else {
            self.value.norm()
        }
    }
}

/// Evaluates `G` and `dG/dβ`.
///
/// Away from `u = 0` this uses `w = √u` on the branch closest to `β` and
///
/// ```text
/// G  = e^{-iw} - iη sin w,                      η = β/w - 1 = v / ((β + w) w)
/// G' = -i (β/w)(e^{-iw} + η cos w) + i v sin w / w³
/// ```
///
/// In the lower half plane `cos w` and `β sin w / w` are both of size
/// `e^{|Im w|}` and cancel down to `e^{-|Im w|}` at a zero, so evaluating the
/// textbook form would leave Newton with a derivative buried in rounding
/// noise. The rearranged form has no such cancellation.
pub fn jost_eval<T: Real>(beta: Complex<T>, barrier: &Barrier<T>, series_switch: T) -> JostEval<T> {
    let i = Complex::<T>::i();
    let v = barrier.v();
    let u = u_of(beta, barrier);
    if u.norm() < series_switch {
        let tr = trig_series(u);
        let two = T::lit(2.0);
        // dG/dβ = 2β C'(u) - i S(u) - 2iβ² S'(u)
        return JostEval {
            value: tr.c - i * beta * tr.s,
            derivative: beta * tr.dc * two - i * tr.s - i * beta * beta * tr.ds * two,
            scale: tr.c.norm() + beta.norm() * tr.s.norm(),
        };
    }
    let mut w = u.sqrt();
    if (beta * w.conj()).re < T::zero() {
        w = -w;
    }
    let eta = Complex::new(v, T::zero()) / ((beta + w) * w);
    let decay = (-i * w).exp();
    let (sin_w, cos_w) = (w.sin(), w.cos());
    let value = decay - i * eta * sin_w;
    let derivative =
        -i * (beta / w) * (decay + eta * cos_w) + i * sin_w * v / (w * w * w);
    JostEval {
        value,
        derivative,
        scale: decay.norm() + eta.norm() * sin_w.norm(),
    }
}

/// Derivative `dG/dβ`.
pub fn jost_reduced_derivative<T: Real>(beta: Complex<T>, barrier: &Barrier<T>) -> Complex<T> {
    jost_eval(beta, barrier, T::lit(DEFAULT_SERIES_SWITCH)).derivative
}

/// Normalized Jost function `f₊(β) = e^{iβ} G(β; v)`.
pub fn jost_full<T: Real>(beta: Complex<T>, barrier: &Barrier<T>) -> Complex<T> {
    (Complex::<T>::i() * beta).exp() * jost_reduced(beta, barrier)
}

/// `f₋(β)`; for real potentials `f₋(β) = conj(f₊(conj β))`.
pub fn jost_minus<T: Real>(beta: Complex<T>, barrier: &Barrier<T>) -> Complex<T> {
    jost_full(beta.conj(), barrier).conj()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    type C64 = Complex<f64>;

    fn b(v: f64) -> Barrier<f64> {
        Barrier::new(v).unwrap()
    }

    #[test]
    fn free_particle_at_pi_is_minus_one() {
        let g = jost_reduced(C64::new(std::f64::consts::PI, 0.0), &b(0.0));
        assert!((g - C64::new(-1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn origin_value_is_cosh_sqrt_v() {
        let g = jost_reduced(C64::new(0.0, 0.0), &b(2.0));
        assert_relative_eq!(g.re, 2f64.sqrt().cosh(), max_relative = 1e-15);
        assert_eq!(g.im, 0.0);
        let f = jost_full(C64::new(0.0, 0.0), &b(2.0));
        assert_relative_eq!(f.re, 2.178183556608571, max_relative = 1e-14);
    }

    #[test]
    fn full_jost_is_one_for_free_particle() {
        for &(re, im) in &[(0.3, -2.0), (10.0, 4.0), (-7.5, 0.1), (0.0, 0.0)] {
            let f = jost_full(C64::new(re, im), &b(0.0));
            assert!((f - 1.0).norm() < 1e-13, "{f}");
        }
    }

    #[test]
    fn vanishes_at_first_zero() {
        // high-precision root of the transcendental equation at v = 2
        let beta1 = C64::new(2.956_172_024_845_801_7, -1.352_258_239_910_774);
        assert!(jost_reduced(beta1, &b(2.0)).norm() <= 1e-12);
        assert!(jost_full(beta1, &b(2.0)).norm() <= 1e-12);
    }

    #[test]
    fn series_matches_closed_form_near_origin() {
        for &r in &[2e-6, 1e-5, 3e-4, 1e-3, 5e-3, 9e-3] {
            for k in 0..8 {
                let phi = k as f64 * 0.785;
                let u = C64::from_polar(r, phi);
                let a = trig_series(u);
                let c = trig_closed(u, Branch::Principal);
                assert_relative_eq!((a.c - c.c).norm() / c.c.norm(), 0.0, epsilon = 1e-13);
                assert_relative_eq!((a.s - c.s).norm() / c.s.norm(), 0.0, epsilon = 1e-13);
                // S' closed form loses digits to cancellation as u → 0
                assert!((a.ds - c.ds).norm() / c.ds.norm() < 1e-13 / r);
            }
        }
    }

    #[test]
    fn series_is_finite_at_u_zero() {
        let t = trig_series(C64::new(0.0, 0.0));
        assert_eq!(t.c, C64::new(1.0, 0.0));
        assert_eq!(t.s, C64::new(1.0, 0.0));
        assert_relative_eq!(t.ds.re, -1.0 / 6.0, max_relative = 1e-15);
        // β = √v puts u exactly at zero
        let g = jost_reduced(C64::new(2f64.sqrt(), 0.0), &b(2.0));
        assert!(g.is_finite());
    }

    #[test]
    fn both_branches_agree() {
        let bar = b(2.0);
        for &(re, im) in &[(1.0, -1.0), (31.3, -3.8), (-4.0, 2.5), (0.2, 0.0)] {
            let beta = C64::new(re, im);
            let p = jost_reduced_branch(beta, &bar, Branch::Principal);
            let n = jost_reduced_branch(beta, &bar, Branch::Negated);
            assert!((p - n).norm() <= 1e-14 * p.norm().max(1.0));
        }
    }

    #[test]
    fn rejects_negative_and_nan_strength() {
        assert!(Barrier::new(-1.0).is_err());
        assert!(Barrier::new(f64::NAN).is_err());
        assert!(Barrier::new(0.0).unwrap().is_free());
    }

    #[test]
    fn single_precision_evaluates() {
        let bar = Barrier::new(2.0f32).unwrap();
        let g = jost_reduced(Complex::new(0.0f32, 0.0), &bar);
        assert!((g.re - 2f32.sqrt().cosh()).abs() < 1e-5);
    }
}
