//! On-shell scattering quantities and diagnostics built from the Jost zeros.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::jost::function::{jost_full, jost_reduced, Barrier};
use crate::jost::roots::JostZero;
use crate::jost::JostError;
use crate::scalar::Real;

/// Largest momentum increment used when unwrapping the phase shift.
const PHASE_STEP: f64 = 0.01;

/// `S(β) = f₋(β)/f₊(β)` for real `β`, where `f₋ = conj(f₊)`.
pub fn s_matrix<T: Real>(beta: T, barrier: &Barrier<T>) -> Complex<T> {
    let f = jost_full(Complex::new(beta, T::zero()), barrier);
    f.conj() / f
}

/// Phase shift `δ(β) = -arg f₊(β)`, continued from `δ(0) = 0` along the real
/// axis so that `S = e^{2iδ}` with no `2π` jumps.
pub fn phase_shift<T: Real>(beta: T, barrier: &Barrier<T>) -> T {
    let steps = (beta.abs() / T::lit(PHASE_STEP)).ceil().to_usize().unwrap_or(0).max(1);
    let h = beta / T::from_index(steps);
    let f = |x: T| jost_full(Complex::new(x, T::zero()), barrier);
    let mut prev = f(T::zero());
    let mut arg = T::zero();
    for k in 1..=steps {
        let cur = f(h * T::from_index(k));
        arg = arg + (cur / prev).arg();
        prev = cur;
    }
    -arg
}

/// Truncated Hadamard factorization
///
/// ```text
/// f₊(β) ≈ e^{iβ} G(0) Π_n (1 - β/β_n)(1 + β/conj(β_n))
/// ```
///
/// with each stored zero paired with its mirror `-conj(β_n)` so that the
/// partial products converge. Diagnostic only.
pub fn hadamard_reconstruct<T: Real>(
    beta: Complex<T>,
    zeros: &[JostZero<T>],
    barrier: &Barrier<T>,
) -> Result<Complex<T>, JostError> {
    if zeros.is_empty() {
        return Err(JostError::EmptyCatalog);
    }
    let one = Complex::new(T::one(), T::zero());
    let product = zeros.iter().fold(one, |acc, z| {
        acc * (one - beta / z.beta) * (one + beta / z.beta.conj())
    });
    let g0 = jost_reduced(Complex::new(T::zero(), T::zero()), barrier);
    Ok((Complex::<T>::i() * beta).exp() * g0 * product)
}

/// `|hadamard - f₊| / |f₊|` at `β`.
pub fn hadamard_relative_error<T: Real>(
    beta: Complex<T>,
    zeros: &[JostZero<T>],
    barrier: &Barrier<T>,
) -> Result<T, JostError> {
    let approx = hadamard_reconstruct(beta, zeros, barrier)?;
    let exact = jost_full(beta, barrier);
    Ok((approx - exact).norm() / exact.norm())
}

/// Whether a pole would show up as a scattering peak.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PoleKind {
    Narrow,
    Virtual,
}

/// Width-to-energy ratio above which a pole counts as a virtual resonance.
/// A heuristic cut, not a physical law.
pub const VIRTUAL_WIDTH_RATIO: f64 = 2.0;

/// `Virtual` when the width `4|Re β||Im β|` exceeds twice the energy
/// `(Re β)² - (Im β)²` (always the case for negative energy).
pub fn classify_virtual<T: Real>(beta: Complex<T>) -> PoleKind {
    let energy = beta.re * beta.re - beta.im * beta.im;
    let width = T::lit(4.0) * beta.re.abs() * beta.im.abs();
    if width > T::lit(VIRTUAL_WIDTH_RATIO) * energy {
        PoleKind::Virtual
    } else {
        PoleKind::Narrow
    }
}
