//! Complex zeros of the s-wave Jost function for a spherical barrier, their
//! resonance observables, and independent number-theoretic ground truth
//! (primes, zeta zeros) to compare them against.
//!
//! The Jost and spectral-map code is generic over [`Real`] (`f32` or `f64`);
//! the number-theory side is `f64` only. The aliases below fix the common
//! double-precision instantiations.

pub mod io;
pub mod jost;
pub mod number_theory;
pub mod scalar;
pub mod spectral;

pub use scalar::Real;

pub type Complex64 = num_complex::Complex<f64>;
pub type Barrier64 = jost::Barrier<f64>;
pub type RootConfig64 = jost::RootConfig<f64>;
pub type JostZero64 = jost::JostZero<f64>;
pub type CriticalPoint64 = spectral::CriticalPoint<f64>;
pub type ResonanceObservables64 = spectral::ResonanceObservables<f64>;

pub type Barrier32 = jost::Barrier<f32>;
pub type JostZero32 = jost::JostZero<f32>;
