//! Maps from Jost zeros to critical-line points, zeta-height estimates and
//! prime estimates.
//!
//! With `β² = E - iG/2`:
//!
//! * critical line: `z = ½ - i Re β / (2 Im β)`, so `Re z = ½` identically;
//! * energy and width: `E = (Re β)² - (Im β)²`, `G = 4 |Re β| |Im β|`;
//! * height estimate: `t̂ = 4πE/G`;
//! * prime estimate: `p̂ = G/(4π)`.
//!
//! The width is taken in magnitude so that fourth-quadrant zeros give
//! positive widths. For `Re β > 0 > Im β` the estimates obey the exact
//! identity `t̂ = 2π Im z - π |Im β| / Re β`.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::jost::JostZero;
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum SpectralError {
    #[error("Im β = 0: the critical-line map is undefined on the real axis")]
    ZeroImaginaryPart,
    #[error("zero width (β on an axis): height estimate undefined")]
    OnAxisZeroWidth,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct CriticalPoint<T> {
    pub z: Complex<T>,
    pub source_n: usize,
}

/// `z = ½ - i Re β / (2 Im β)`.
pub fn to_critical_line<T: Real>(beta: Complex<T>) -> Result<Complex<T>, SpectralError> {
    if beta.im == T::zero() {
        return Err(SpectralError::ZeroImaginaryPart);
    }
    let half = T::lit(0.5);
    Ok(Complex::new(half, -beta.re / (T::lit(2.0) * beta.im)))
}

/// `(E, G)` with `E = (Re β)² - (Im β)²` and `G = 4 |Re β| |Im β|`.
pub fn energy_width<T: Real>(beta: Complex<T>) -> (T, T) {
    (
        beta.re * beta.re - beta.im * beta.im,
        T::lit(4.0) * beta.re.abs() * beta.im.abs(),
    )
}

/// Height estimate `t̂ = 4πE/G`.
pub fn height_estimate<T: Real>(beta: Complex<T>) -> Result<T, SpectralError> {
    let (e, g) = energy_width(beta);
    if g == T::zero() {
        return Err(SpectralError::OnAxisZeroWidth);
    }
    Ok(T::lit(4.0) * T::PI() * e / g)
}

/// Leading-order form `π |Re β| / |Im β|` of the height estimate.
pub fn height_estimate_leading<T: Real>(beta: Complex<T>) -> Result<T, SpectralError> {
    if beta.im == T::zero() {
        return Err(SpectralError::OnAxisZeroWidth);
    }
    Ok(T::PI() * beta.re.abs() / beta.im.abs())
}

/// Prime estimate `p̂ = G/(4π)`.
pub fn prime_estimate<T: Real>(beta: Complex<T>) -> T {
    let (_, g) = energy_width(beta);
    g / (T::lit(4.0) * T::PI())
}

/// Pole `β = t/2 - i/4` of the scattering function on a surface of constant
/// negative curvature; it maps to `½ + it` exactly.
pub fn pavlov_fadeev_pole<T: Real>(t: T) -> Complex<T> {
    Complex::new(t / T::lit(2.0), -T::lit(0.25))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct ResonanceObservables<T> {
    pub n: usize,
    pub energy: T,
    pub width: T,
    pub t_hat: T,
    pub p_hat: T,
    pub z: CriticalPoint<T>,
}

impl<T: Real> ResonanceObservables<T> {
    pub fn from_beta(n: usize, beta: Complex<T>) -> Result<Self, SpectralError> {
        let (energy, width) = energy_width(beta);
        Ok(Self {
            n,
            energy,
            width,
            t_hat: height_estimate(beta)?,
            p_hat: prime_estimate(beta),
            z: CriticalPoint {
                z: to_critical_line(beta)?,
                source_n: n,
            },
        })
    }

    pub fn from_zero(zero: &JostZero<T>) -> Result<Self, SpectralError> {
        Self::from_beta(zero.n, zero.beta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type C = Complex<f64>;

    #[test]
    fn critical_line_examples() {
        assert_eq!(to_critical_line(C::new(3.0, -1.0)).unwrap(), C::new(0.5, 1.5));
        assert_eq!(to_critical_line(C::new(-3.0, -1.0)).unwrap(), C::new(0.5, -1.5));
        assert_eq!(to_critical_line(C::new(3.0, 0.0)), Err(SpectralError::ZeroImaginaryPart));
    }

    #[test]
    fn pole_map_composition() {
        for t in [14.134725, 0.0, 1.0] {
            let z = to_critical_line(pavlov_fadeev_pole(t)).unwrap();
            assert_eq!(z, C::new(0.5, t));
        }
        assert_eq!(pavlov_fadeev_pole(14.134725), C::new(7.0673625, -0.25));
    }

    #[test]
    fn energy_width_examples() {
        assert_eq!(energy_width(C::new(3.0, -1.0)), (8.0, 12.0));
        assert_eq!(energy_width(C::new(-3.0, -1.0)), (8.0, 12.0));
        assert_eq!(energy_width(C::new(1.0, -2.0)), (-3.0, 8.0));
        let b = C::new(3.0, -1.0);
        let (e, g) = energy_width(b);
        assert_eq!(b * b, C::new(e, -g / 2.0));
    }

    #[test]
    fn height_and_prime_examples() {
        let h = height_estimate(C::new(3.0, -1.0)).unwrap();
        assert!((h - 8.0 * std::f64::consts::PI / 3.0).abs() < 1e-14);
        assert_eq!(height_estimate(C::new(1.0, -1.0)).unwrap(), 0.0);
        assert_eq!(height_estimate(C::new(2.0, 0.0)), Err(SpectralError::OnAxisZeroWidth));
        assert!((prime_estimate(C::new(3.0, -1.0)) - 0.954_929_658_551_372).abs() < 1e-14);
        assert_eq!(prime_estimate(C::new(5.0, 0.0)), 0.0);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn pole_map_lands_on_critical_line(t in 0.0f64..1e6) {
            let z = to_critical_line(pavlov_fadeev_pole(t)).unwrap();
            prop_assert!((z - C::new(0.5, t)).norm() <= 1e-14 * t.max(1.0));
        }

        #[test]
        fn critical_line_real_part_is_exactly_half(re in -1e4f64..1e4, im in -50.0f64..-1e-6) {
            prop_assert_eq!(to_critical_line(C::new(re, im)).unwrap().re, 0.5);
        }

        #[test]
        fn height_identity(re in 1e-3f64..1e5, im in -40.0f64..-1e-3) {
            let b = C::new(re, im);
            let lhs = height_estimate(b).unwrap();
            let z = to_critical_line(b).unwrap();
            let rhs = 2.0 * std::f64::consts::PI * z.im - std::f64::consts::PI * im.abs() / re;
            let scale = std::f64::consts::PI * (re / im.abs() + im.abs() / re);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * scale);
        }

        #[test]
        fn mirror_invariance(re in -1e4f64..1e4, im in -40.0f64..-1e-3) {
            let b = C::new(re, im);
            let m = -b.conj();
            prop_assert_eq!(energy_width(b), energy_width(m));
            prop_assert_eq!(prime_estimate(b), prime_estimate(m));
            if re != 0.0 {
                prop_assert_eq!(height_estimate(b).unwrap(), height_estimate(m).unwrap());
            }
        }
    }
}
