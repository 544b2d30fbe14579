use serde::{Deserialize, Serialize};

use super::NumberTheoryError;

/// Primes in increasing order, all primes `≤ limit` when produced by [`sieve`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeTable {
    primes: Vec<u64>,
    limit: u64,
}

impl PrimeTable {
    /// Wraps an externally supplied list. Only monotonicity is checked here.
    pub fn from_sorted(primes: Vec<u64>) -> Result<Self, NumberTheoryError> {
        if let Some(i) = primes.windows(2).position(|w| w[1] <= w[0]) {
            return Err(NumberTheoryError::NotIncreasing { index: i + 2 });
        }
        let limit = primes.last().copied().unwrap_or(0);
        Ok(Self { primes, limit })
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// Number of stored primes `≤ x`.
    pub fn count_up_to(&self, x: u64) -> usize {
        self.primes.partition_point(|&p| p <= x)
    }
}

/// Sieve of Eratosthenes over odd numbers.
pub fn sieve(limit: u64) -> Result<PrimeTable, NumberTheoryError> {
    if limit < 2 {
        return Err(NumberTheoryError::LimitTooSmall { limit, needed: 2 });
    }
    let limit_usize = usize::try_from(limit).expect("sieve limit fits in memory");
    // index i stands for 2i + 1
    let mut composite = vec![false; limit_usize / 2 + 1];
    let mut i = 1;
    while (2 * i + 1) * (2 * i + 1) <= limit_usize {
        if !composite[i] {
            let p = 2 * i + 1;
            let mut m = p * p;
            while m <= limit_usize {
                composite[m / 2] = true;
                m += 2 * p;
            }
        }
        i += 1;
    }
    let mut primes = vec![2u64];
    primes.extend(
        (1..composite.len())
            .filter(|&i| !composite[i] && 2 * i < limit_usize)
            .map(|i| (2 * i + 1) as u64),
    );
    Ok(PrimeTable { primes, limit })
}

/// Upper bound on the `n`-th prime: `n (ln n + ln ln n)` for `n ≥ 6`.
pub fn nth_prime_upper_bound(n: usize) -> u64 {
    if n < 6 {
        return 13;
    }
    let x = n as f64;
    (x * (x.ln() + x.ln().ln())).ceil() as u64
}

/// The `n`-th prime (1-based) from the table.
pub fn nth_prime(table: &PrimeTable, n: usize) -> Result<u64, NumberTheoryError> {
    if n == 0 {
        return Err(NumberTheoryError::ZeroIndex);
    }
    table
        .primes
        .get(n - 1)
        .copied()
        .ok_or(NumberTheoryError::LimitTooSmall {
            limit: table.limit,
            needed: nth_prime_upper_bound(n),
        })
}

/// Sieve sized to contain at least `n` primes.
pub fn first_primes(n: usize) -> Result<PrimeTable, NumberTheoryError> {
    if n == 0 {
        return Err(NumberTheoryError::ZeroIndex);
    }
    sieve(nth_prime_upper_bound(n))
}

/// Prime number theorem estimate `p_n ≈ n ln n`.
pub fn prime_asymptotic(n: usize) -> Result<f64, NumberTheoryError> {
    if n == 0 {
        return Err(NumberTheoryError::ZeroIndex);
    }
    let x = n as f64;
    Ok(x * x.ln())
}

pub fn is_prime_trial_division(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    if x % 2 == 0 {
        return x == 2;
    }
    let mut d = 3u64;
    while d * d <= x {
        if x % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        let t = sieve(100).unwrap();
        assert_eq!(nth_prime(&t, 1).unwrap(), 2);
        assert_eq!(nth_prime(&t, 25).unwrap(), 97);
        assert_eq!(t.len(), 25);
        assert!(matches!(nth_prime(&t, 26), Err(NumberTheoryError::LimitTooSmall { .. })));
        assert!(sieve(1).is_err());
        assert_eq!(sieve(2).unwrap().primes(), &[2]);
        assert_eq!(sieve(3).unwrap().primes(), &[2, 3]);
    }

    #[test]
    fn ten_thousandth_prime() {
        let t = first_primes(10_000).unwrap();
        let p = nth_prime(&t, 10_000).unwrap();
        assert_eq!(p, 104_729);
        // trial-division oracle, counted independently
        let count = (2..=104_729u64).filter(|&x| is_prime_trial_division(x)).count();
        assert_eq!(count, 10_000);
    }

    #[test]
    fn prime_count_to_a_million() {
        let t = sieve(1_000_000).unwrap();
        assert_eq!(t.len(), 78_498);
        assert_eq!(t.count_up_to(1_000_000), 78_498);
    }

    #[test]
    fn asymptotic_values() {
        assert_eq!(prime_asymptotic(1).unwrap(), 0.0);
        assert!((prime_asymptotic(100).unwrap() - 460.517_018_598_809).abs() < 1e-9);
        let t = first_primes(10_000).unwrap();
        let ratio = nth_prime(&t, 10_000).unwrap() as f64 / prime_asymptotic(10_000).unwrap();
        assert!((ratio - 1.137).abs() < 5e-4, "{ratio}");
    }

    #[test]
    fn upper_bound_covers() {
        for n in [1, 5, 6, 100, 9880, 60_000] {
            let t = first_primes(n).unwrap();
            assert!(t.len() >= n);
        }
    }
}
