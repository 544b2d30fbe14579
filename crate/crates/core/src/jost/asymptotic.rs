//! Large-`n` asymptotics of the Jost zeros.

use num_complex::Complex;

use crate::jost::{Barrier, JostError};
use crate::scalar::Real;

/// Leading asymptotic position of the `n`-th barrier zero (positive branch):
///
/// ```text
/// β_n ≈ nπ - L/(nπ) - i (L - 1/(nπ)),   L = ln(2nπ/√v)
/// ```
///
/// Used as the Newton seed. The mirror zero for `-n` is `-conj(seed(n))`.
pub fn asymptotic_seed<T: Real>(n: usize, barrier: &Barrier<T>) -> Result<Complex<T>, JostError> {
    if n == 0 {
        return Err(JostError::ZeroIndex);
    }
    if barrier.is_free() {
        return Err(JostError::FreeParticle);
    }
    let npi = T::from_index(n) * T::PI();
    let log = (T::lit(2.0) * npi / barrier.v().sqrt()).ln();
    Ok(Complex::new(npi - log / npi, -(log - T::one() / npi)))
}

/// Seed for the negative-index (third quadrant) mirror zero.
pub fn asymptotic_seed_mirror<T: Real>(
    n: usize,
    barrier: &Barrier<T>,
) -> Result<Complex<T>, JostError> {
    asymptotic_seed(n, barrier).map(|b| -b.conj())
}

/// Two-term asymptotics for a generic cutoff potential behaving like
/// `C (R - r)^σ` just inside the cutoff: `β_n ≈ nπ - i (σ + 2) ln(n) / 2`.
///
/// The `O(1)` remainder is unknown, so this is a trend predictor only and is
/// never used to seed Newton.
pub fn asymptotic_generic<T: Real>(n: usize, sigma: T) -> Result<Complex<T>, JostError> {
    if n == 0 {
        return Err(JostError::ZeroIndex);
    }
    if !(sigma >= T::zero()) {
        return Err(JostError::InvalidSigma(sigma.to_f64_lossy()));
    }
    let nn = T::from_index(n);
    Ok(Complex::new(
        nn * T::PI(),
        -(sigma + T::lit(2.0)) * nn.ln() / T::lit(2.0),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: f64) -> Barrier<f64> {
        Barrier::new(v).unwrap()
    }

    #[test]
    fn seed_first_and_tenth() {
        // L = ln(2π/√2) = 1.4914009...
        let s1 = asymptotic_seed(1, &b(2.0)).unwrap();
        assert!((s1.re - 2.666_896_013_837_561).abs() < 1e-12);
        assert!((s1.im + 1.172_993_589_945_582).abs() < 1e-12);
        let s10 = asymptotic_seed(10, &b(2.0)).unwrap();
        assert!((s10.re - 31.295_163_312_034_767).abs() < 1e-11);
        assert!((s10.im + 3.762_057_580_505_04).abs() < 1e-11);
    }

    #[test]
    fn mirror_branch_sign_pattern() {
        for n in [1, 7, 1000] {
            let s = asymptotic_seed(n, &b(2.0)).unwrap();
            let m = asymptotic_seed_mirror(n, &b(2.0)).unwrap();
            assert_eq!(m, -s.conj());
            assert!(m.re < 0.0 && m.im < 0.0);
        }
    }

    #[test]
    fn seed_rejects_free_particle_and_zero_index() {
        assert!(matches!(asymptotic_seed(1, &b(0.0)), Err(JostError::FreeParticle)));
        assert!(matches!(asymptotic_seed(0, &b(2.0)), Err(JostError::ZeroIndex)));
    }

    #[test]
    fn generic_two_term_values() {
        let a = asymptotic_generic(10, 0.0f64).unwrap();
        assert!((a.re - 31.415_926_535_897_93).abs() < 1e-12);
        assert!((a.im + 2.302_585_092_994_046).abs() < 1e-12);
        let one = asymptotic_generic(1, 0.0f64).unwrap();
        assert_eq!(one.im, 0.0);
        assert!((one.re - std::f64::consts::PI).abs() < 1e-15);
        let s2 = asymptotic_generic(10, 2.0f64).unwrap();
        assert!((s2.im + 4.605_170_185_988_092).abs() < 1e-12);
        assert!(asymptotic_generic(3, -1.0f64).is_err());
    }
}
