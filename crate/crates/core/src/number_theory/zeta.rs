use num_complex::Complex64;

use super::primes::PrimeTable;
use super::NumberTheoryError;

/// Even-index Bernoulli numbers `B_2, B_4, …, B_30`.
const BERNOULLI_EVEN: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

fn check_domain(z: Complex64) -> Result<(), NumberTheoryError> {
    if z.re > 1.0 {
        Ok(())
    } else {
        Err(NumberTheoryError::Domain(z.re))
    }
}

/// Partial Dirichlet sum `Σ_{n ≤ terms} n^{-z}` for `Re z > 1`. The tail is
/// `O(terms^{1 - Re z})`.
pub fn zeta_dirichlet(z: Complex64, terms: usize) -> Result<Complex64, NumberTheoryError> {
    check_domain(z)?;
    // smallest terms first
    Ok((1..=terms)
        .rev()
        .map(|n| (-z * (n as f64).ln()).exp())
        .sum())
}

/// Partial Euler product `Π_p (1 - p^{-z})^{-1}` over the table, `Re z > 1`.
pub fn euler_product(z: Complex64, table: &PrimeTable) -> Result<Complex64, NumberTheoryError> {
    check_domain(z)?;
    let one = Complex64::new(1.0, 0.0);
    Ok(table
        .primes()
        .iter()
        .fold(one, |acc, &p| acc / (one - (-z * (p as f64).ln()).exp())))
}

/// `ζ(s)` by Euler–Maclaurin summation, valid for any `s ≠ 1` of moderate
/// size. The cut `N ≈ 2|s|/π` keeps the Bernoulli tail below `1e-15` relative.
pub fn zeta_euler_maclaurin(s: Complex64) -> Complex64 {
    let n_cut = ((2.0 * s.norm() / std::f64::consts::PI).ceil() as usize).max(20);
    let nf = n_cut as f64;
    let ln_n = nf.ln();
    let head: Complex64 = (1..n_cut)
        .rev()
        .map(|n| (-s * (n as f64).ln()).exp())
        .sum();
    let n_pow = (-s * ln_n).exp(); // N^{-s}
    let one = Complex64::new(1.0, 0.0);
    let mut total = head + n_pow * nf / (s - one) + n_pow * 0.5;

    // Σ B_2k/(2k)! s(s+1)…(s+2k-2) N^{-s-2k+1}
    let mut rising = s; // s(s+1)…(s+2k-2)
    let mut fact = 2.0; // (2k)!
    let mut n_factor = n_pow / nf; // N^{-s-2k+1}
    for (k, b) in BERNOULLI_EVEN.iter().enumerate() {
        let k = k + 1;
        total += rising * n_factor * (b / fact);
        let a = 2.0 * k as f64;
        rising = rising * (s + (a - 1.0)) * (s + a);
        fact *= (a + 1.0) * (a + 2.0);
        n_factor /= nf * nf;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number_theory::primes::sieve;

    #[test]
    fn basel() {
        let z = zeta_dirichlet(Complex64::new(2.0, 0.0), 1_000_000).unwrap();
        let exact = std::f64::consts::PI.powi(2) / 6.0;
        // tail ≈ 1/terms
        assert!((z.re - exact).abs() < 1.1e-6);
        let em = zeta_euler_maclaurin(Complex64::new(2.0, 0.0));
        assert!((em.re - exact).abs() < 1e-14);
    }

    #[test]
    fn euler_identity_at_two() {
        let primes = sieve(1_000_000).unwrap();
        let ep = euler_product(Complex64::new(2.0, 0.0), &primes).unwrap();
        let dir = zeta_dirichlet(Complex64::new(2.0, 0.0), 10_000_000).unwrap();
        assert!((ep - dir).norm() < 1e-6);
    }

    #[test]
    fn domain_guard() {
        assert!(matches!(
            zeta_dirichlet(Complex64::new(0.5, 10.0), 10),
            Err(NumberTheoryError::Domain(_))
        ));
        let primes = sieve(10).unwrap();
        assert!(euler_product(Complex64::new(1.0, 3.0), &primes).is_err());
    }

    #[test]
    fn euler_maclaurin_reference_values() {
        // arbitrary precision references
        let z = zeta_euler_maclaurin(Complex64::new(2.0, 1.0));
        assert!((z - Complex64::new(1.150_355_703_254_902_7, -0.437_530_865_919_607_9)).norm() < 1e-14);
        let half = zeta_euler_maclaurin(Complex64::new(0.5, 0.0));
        assert!((half.re + 1.460_354_508_809_586_8).abs() < 1e-13);
    }
}
