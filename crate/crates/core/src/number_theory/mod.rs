//! Independent ground truth: primes, `ζ` on `Re z > 1`, and zeta-zero heights.

mod primes;
mod riemann_siegel;
mod zeros;
mod zeta;

pub use primes::{
    first_primes, is_prime_trial_division, nth_prime, nth_prime_upper_bound, prime_asymptotic,
    sieve, PrimeTable,
};
pub use riemann_siegel::{
    gram_point, hardy_z, hardy_z_euler_maclaurin, hardy_z_riemann_siegel, riemann_siegel_theta,
    riemann_siegel_theta_derivative, GramPoint, EULER_MACLAURIN_BELOW,
};
pub use zeros::{
    counting_check, counting_estimate, find_zeta_zeros, find_zeta_zeros_below,
    zeta_height_asymptotic, CountCheck, ZeroSource, ZetaZeroTable, MAX_SUBDIVISION_DEPTH,
    ZERO_TOLERANCE,
};
pub use zeta::{euler_product, zeta_dirichlet, zeta_euler_maclaurin};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NumberTheoryError {
    #[error("sieve limit {limit} too small; re-sieve up to at least {needed}")]
    LimitTooSmall { limit: u64, needed: u64 },
    #[error("indices start at 1")]
    ZeroIndex,
    #[error("sequence not strictly increasing at entry {index}")]
    NotIncreasing { index: usize },
    #[error("series only converges for Re z > 1 (got Re z = {0})")]
    Domain(f64),
    #[error("Gram index must be ≥ -1, got {0}")]
    GramIndex(i64),
    #[error("zero count mismatch in Gram block [{t_lo}, {t_hi}]: found {found}, expected {expected}")]
    CountMismatch {
        t_lo: f64,
        t_hi: f64,
        found: usize,
        expected: usize,
    },
    #[error("height asymptotic 2πn/ln n needs n ≥ 2, got {0}")]
    HeightAsymptoticIndex(usize),
}
