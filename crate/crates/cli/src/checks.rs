//! The invariant suite behind `validate`.

use serde::Serialize;

use jostzeta::io::{parse_prime_table, parse_zero_table, read_catalog_file};
use jostzeta::jost::{
    asymptotic_generic, asymptotic_seed, find_zeros, hadamard_relative_error, jost_reduced,
    s_matrix, Barrier, JostZero, AUTO_CERTIFY_MAX_N,
};
use jostzeta::number_theory::{
    counting_check, euler_product, find_zeta_zeros, first_primes, sieve, zeta_dirichlet,
};
use jostzeta::spectral::{
    energy_width, height_estimate, pavlov_fadeev_pole, prime_estimate, to_critical_line,
};
use jostzeta::Complex64;

use crate::{CliError, RunSpec, Source};

/// Absolute `|G(β_n)|` bound checked unless `--tol` is looser.
pub const RESIDUAL_BOUND: f64 = 1e-10;
pub const MAX_NEWTON_STEPS: usize = 8;
const SAMPLES: usize = 1000;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub skipped: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.to_owned(),
            passed,
            skipped: false,
            detail: detail.into(),
        }
    }

    fn skip(name: &str, why: &str) -> Self {
        Self {
            name: name.to_owned(),
            passed: true,
            skipped: true,
            detail: why.to_owned(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub passed: bool,
    pub spec: RunSpec,
    pub warnings: Vec<String>,
    pub checks: Vec<Check>,
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    xs[xs.len() / 2]
}

/// Index ranges `[1, 10), [10, 100), …` clipped to `n_max`, dropping short tails.
fn decades(n_max: usize, from: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut lo = from;
    while lo * 10 <= n_max {
        out.push((lo, lo * 10));
        lo *= 10;
    }
    out
}

fn roots(zeros: &[JostZero<f64>], bound: f64) -> Check {
    let worst = zeros.iter().map(|z| z.residual).fold(0.0, f64::max);
    let bad = zeros
        .iter()
        .find(|z| !(z.residual <= bound) || !z.in_cell() || !(z.beta.im < 0.0));
    match bad {
        Some(z) => Check::new(
            "roots",
            false,
            format!("zero {} at {} has |G| = {:e} or lies outside its cell", z.n, z.beta, z.residual),
        ),
        None => Check::new(
            "roots",
            true,
            format!("{} zeros in their cells, max |G| = {worst:e} ≤ {bound:e}", zeros.len()),
        ),
    }
}

fn certification(zeros: &[JostZero<f64>]) -> Check {
    let upto = zeros.len().min(AUTO_CERTIFY_MAX_N);
    match zeros[..upto].iter().find(|z| !z.certified) {
        Some(z) => Check::new("certification", false, format!("cell {} not certified", z.n)),
        None => Check::new("certification", true, format!("cells 1..={upto} have winding number 1")),
    }
}

fn seed_convergence(zeros: &[JostZero<f64>], barrier: &Barrier<f64>) -> Check {
    if let Some(z) = zeros.iter().skip(1).find(|z| z.iterations > MAX_NEWTON_STEPS) {
        return Check::new(
            "seed_convergence",
            false,
            format!("zero {} took {} Newton steps", z.n, z.iterations),
        );
    }
    let medians: Vec<f64> = decades(zeros.len(), 1)
        .into_iter()
        .map(|(lo, hi)| {
            median(
                zeros[lo - 1..hi]
                    .iter()
                    .map(|z| (z.beta - asymptotic_seed(z.n, barrier).expect("v > 0")).norm())
                    .collect(),
            )
        })
        .collect();
    let ok = medians.windows(2).all(|w| w[1] <= w[0]);
    Check::new("seed_convergence", ok, format!("decade medians of |β - seed|: {medians:?}"))
}

fn critical_line(zeros: &[JostZero<f64>]) -> Check {
    use std::f64::consts::PI;
    for z in zeros {
        let b = z.beta;
        let Ok(c) = to_critical_line(b) else {
            return Check::new("critical_line", false, format!("zero {} on the real axis", z.n));
        };
        let t_hat = height_estimate(b).expect("off-axis");
        let rhs = 2.0 * PI * c.im - PI * b.im.abs() / b.re;
        let scale = PI * (b.re / b.im.abs() + b.im.abs() / b.re);
        let m = -b.conj();
        let mirrored = energy_width(m) == energy_width(b)
            && prime_estimate(m) == prime_estimate(b)
            && height_estimate(m).ok() == Some(t_hat);
        if c.re != 0.5 || (t_hat - rhs).abs() > 1e-12 * scale || !mirrored {
            return Check::new("critical_line", false, format!("identity broken at zero {}", z.n));
        }
    }
    let mut worst = 0.0f64;
    for k in 0..SAMPLES {
        let t = 1e3 * k as f64 / SAMPLES as f64;
        let z = to_critical_line(pavlov_fadeev_pole(t)).expect("off-axis");
        worst = worst.max((z - Complex64::new(0.5, t)).norm() / t.max(1.0));
    }
    Check::new(
        "critical_line",
        worst <= 1e-14,
        format!("Re z = 1/2, height identity and mirror symmetry hold; pole map error {worst:e}"),
    )
}

fn scattering(barrier: &Barrier<f64>) -> Vec<Check> {
    let unitarity = (1..=SAMPLES)
        .map(|k| (s_matrix(100.0 * k as f64 / SAMPLES as f64, barrier).norm() - 1.0).abs())
        .fold(0.0, f64::max);
    let free = Barrier::free();
    let mut free_err = 0.0f64;
    for i in 0..40 {
        for j in 0..25 {
            let b = Complex64::new(-60.0 + 3.0 * i as f64, -12.0 + 1.0 * j as f64);
            let e = (-Complex64::i() * b).exp();
            free_err = free_err.max((jost_reduced(b, &free) - e).norm() / e.norm().max(1.0));
        }
    }
    let mut bound_ok = true;
    for i in 1..=40 {
        for j in 1..=25 {
            let (kappa, v) = (50.0 * i as f64 / 40.0, 10.0 * j as f64 / 25.0);
            let g = jost_reduced(Complex64::new(0.0, kappa), &Barrier::new(v).expect("v > 0"));
            bound_ok &= g.re > 0.0 && g.im.abs() <= 1e-12 * g.re;
        }
    }
    vec![
        Check::new("unitarity", unitarity <= 1e-12, format!("max ||S| - 1| = {unitarity:e}")),
        Check::new("free_particle", free_err <= 1e-12, format!("max |G - e^(-iβ)| = {free_err:e}")),
        Check::new("no_bound_states", bound_ok, "G(iκ) > 0 on κ ∈ (0, 50], v ∈ (0, 10]"),
    ]
}

fn hadamard(zeros: &[JostZero<f64>], barrier: &Barrier<f64>) -> Check {
    let cuts: Vec<usize> = [zeros.len() / 100, zeros.len() / 10, zeros.len()]
        .into_iter()
        .filter(|&m| m >= 1)
        .collect();
    if cuts.len() < 3 {
        return Check::skip("hadamard", "needs n_max ≥ 100");
    }
    let at = Complex64::new(1.0, 0.0);
    let errs: Vec<f64> = cuts
        .iter()
        .map(|&m| hadamard_relative_error(at, &zeros[..m], barrier).expect("non-empty"))
        .collect();
    let ok = errs.windows(2).all(|w| w[1] < w[0]);
    Check::new("hadamard", ok, format!("relative error at β = 1 for {cuts:?} zeros: {errs:?}"))
}

/// Least-squares slope of `Im β_n` against `ln n` over the top decade, to be
/// compared with `-(σ + 2)/2`.
fn generic_asymptotics(zeros: &[JostZero<f64>], sigma: f64) -> Check {
    if zeros.len() < 100 {
        return Check::skip("generic_asymptotics", "needs n_max ≥ 100");
    }
    let top = &zeros[zeros.len() / 10..];
    let xs: Vec<f64> = top.iter().map(|z| (z.n as f64).ln()).collect();
    let ys: Vec<f64> = top.iter().map(|z| z.beta.im).collect();
    let (mx, my) = (
        xs.iter().sum::<f64>() / xs.len() as f64,
        ys.iter().sum::<f64>() / ys.len() as f64,
    );
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for (x, y) in xs.iter().zip(&ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    let slope = sxy / sxx;
    let expected = asymptotic_generic(2, sigma).expect("σ ≥ 0").im / 2f64.ln();
    Check::new(
        "generic_asymptotics",
        (slope - expected).abs() <= 0.05,
        format!("d Im β / d ln n = {slope:.4}, two-term form gives {expected:.4}"),
    )
}

fn zeta_zeros(spec: &RunSpec) -> Result<Check, CliError> {
    let table = find_zeta_zeros(spec.n_max)?;
    let t_last = *table.heights().last().expect("n_max ≥ 1");
    let mut t = 10.0;
    let mut checked = Vec::new();
    while t <= t_last {
        let c = counting_check(&table, t);
        if !c.passed {
            return Ok(Check::new(
                "zeta_zeros",
                false,
                format!("{} zeros below {t}, estimate {:.3}", c.counted, c.estimate),
            ));
        }
        checked.push(t);
        t *= 10.0;
    }
    let mut detail = format!("{} zeros up to t = {t_last:.6}; counting check at {checked:?}", table.len());
    if let Source::File(p) = &spec.zeta_source {
        let reference = parse_zero_table(p)?;
        let last = reference.last_index().min(table.len());
        let mut worst = 0.0f64;
        for n in reference.first_index()..=last {
            worst = worst.max((reference.get(n).expect("in range") - table.get(n).expect("in range")).abs());
        }
        if worst > 1e-6 {
            return Ok(Check::new("zeta_zeros", false, format!("{detail}; |Δt| = {worst:e} against {}", p.display())));
        }
        detail.push_str(&format!("; max |Δt| = {worst:e} against {}", p.display()));
    }
    Ok(Check::new("zeta_zeros", true, detail))
}

fn primes(spec: &RunSpec) -> Result<Check, CliError> {
    let table = first_primes(spec.n_max)?;
    let mut detail = format!("sieved {} primes", table.len());
    if let Source::File(p) = &spec.prime_source {
        let ingested = parse_prime_table(p)?;
        let k = ingested.len().min(table.len());
        if ingested.primes()[..k] != table.primes()[..k] {
            return Ok(Check::new("primes", false, format!("{} disagrees with the sieve", p.display())));
        }
        detail.push_str(&format!("; first {k} agree with {}", p.display()));
    }
    let big = sieve(1_000_000)?;
    let mut worst = 0.0f64;
    for z in [Complex64::new(2.0, 0.0), Complex64::new(3.0, 0.0), Complex64::new(2.0, 1.0)] {
        let d = (euler_product(z, &big)? - zeta_dirichlet(z, 10_000_000)?).norm();
        worst = worst.max(d);
    }
    detail.push_str(&format!("; Euler product vs Dirichlet series {worst:e}"));
    Ok(Check::new("primes", worst <= 1e-6, detail))
}

fn cache(spec: &RunSpec, zeros: &[JostZero<f64>]) -> Check {
    let Some(path) = &spec.cache else {
        return Check::skip("catalog_cache", "no --cache given");
    };
    if !path.exists() {
        return Check::skip("catalog_cache", "cache file does not exist yet");
    }
    match read_catalog_file(path) {
        Err(e) => Check::new("catalog_cache", false, format!("{}: {e}", path.display())),
        Ok(c) if c.v != spec.v => Check::skip("catalog_cache", "cache is for another barrier"),
        Ok(c) => {
            let k = c.zeros.len().min(zeros.len());
            match (0..k).find(|&i| c.zeros[i] != zeros[i]) {
                Some(i) => Check::new(
                    "catalog_cache",
                    false,
                    format!("{}: entry {} differs from recomputation", path.display(), i + 1),
                ),
                None => Check::new("catalog_cache", true, format!("{k} cached zeros reproduce bit-exactly")),
            }
        }
    }
}

/// Runs every check. Fails early only on errors that prevent checking at all.
pub fn validate(spec: &RunSpec) -> Result<ValidationReport, CliError> {
    let barrier = spec.barrier()?;
    let mut warnings = Vec::new();
    if spec.seed_only {
        warnings.push("--seed-only ignored: validation needs refined zeros".to_owned());
    }
    let bound = RESIDUAL_BOUND.max(spec.tol);
    if spec.tol > RESIDUAL_BOUND {
        warnings.push(format!("--tol {:e} relaxes the residual check to |G| ≤ {bound:e}", spec.tol));
    }
    let zeros = find_zeros(spec.n_max, &barrier, &spec.root_config())?;
    let mut checks = vec![
        roots(&zeros, bound),
        certification(&zeros),
        seed_convergence(&zeros, &barrier),
        critical_line(&zeros),
    ];
    checks.extend(scattering(&barrier));
    checks.push(hadamard(&zeros, &barrier));
    checks.push(generic_asymptotics(&zeros, spec.sigma));
    checks.push(zeta_zeros(spec)?);
    checks.push(primes(spec)?);
    checks.push(cache(spec, &zeros));
    Ok(ValidationReport {
        passed: checks.iter().all(|c| c.passed),
        spec: spec.clone(),
        warnings,
        checks,
    })
}
