use std::path::PathBuf;

use jostzeta::io::{parse_prime_table, parse_zero_table};
use jostzeta::jost::{find_zero, Barrier, RootConfig};
use jostzeta::number_theory::*;
use jostzeta::spectral::{height_estimate, prime_estimate};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

#[test]
fn first_hundred_zeros_match_reference() {
    let reference = parse_zero_table(data("zeros_first100.txt")).unwrap();
    assert_eq!(reference.len(), 100);
    assert_eq!(reference.source(), ZeroSource::Ingested);
    let computed = find_zeta_zeros(100).unwrap();
    for n in 1..=100 {
        let (a, b) = (computed.get(n).unwrap(), reference.get(n).unwrap());
        assert!((a - b).abs() <= 1e-6, "n={n}: {a} vs {b}");
    }
    assert_eq!(computed.count_up_to(100.0), 29);
}

#[test]
fn zeros_near_normalization_index_match_reference() {
    let reference = parse_zero_table(data("zeros_9871_9890.txt")).unwrap();
    assert_eq!(reference.first_index(), 9871);
    let computed = find_zeta_zeros(9890).unwrap();
    for n in 9871..=9890 {
        let (a, b) = (computed.get(n).unwrap(), reference.get(n).unwrap());
        assert!((a - b).abs() <= 1e-6, "n={n}: {a} vs {b}");
    }
}

#[test]
fn counting_check_holds_at_every_decade() {
    let zeros = find_zeta_zeros_below(5e4).unwrap();
    for t in [10.0, 100.0, 1e3, 1e4, 5e4] {
        let c = counting_check(&zeros, t);
        assert!(c.passed, "{c:?}");
    }
}

#[test]
fn prime_table_round_trips_against_sieve() {
    let ingested = parse_prime_table(data("primes_first10000.txt")).unwrap();
    let sieved = first_primes(10_000).unwrap();
    assert_eq!(ingested.primes(), &sieved.primes()[..10_000]);
    assert_eq!(ingested.primes()[9879], 103_387);
}

#[test]
fn normalization_factors_at_9880() {
    let bar = Barrier::new(2.0).unwrap();
    let beta = find_zero(9880, &bar, &RootConfig::default()).unwrap().beta;
    let t = parse_zero_table(data("zeros_9871_9890.txt")).unwrap().get(9880).unwrap();
    let p = nth_prime(&first_primes(9880).unwrap(), 9880).unwrap() as f64;
    let nz = t / height_estimate(beta).unwrap();
    let np = p / prime_estimate(beta);
    assert!((nz - 1.071_58).abs() < 1e-4, "Nz = {nz}");
    assert!((np - 0.978_92).abs() < 1e-4, "Np = {np}");
}
