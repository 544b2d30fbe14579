//! Jost function of the spherical barrier and its complex zeros.

mod asymptotic;
mod function;
mod roots;
mod scattering;

pub use asymptotic::{asymptotic_generic, asymptotic_seed, asymptotic_seed_mirror};
pub use function::{
    jost_eval, jost_full, jost_minus, jost_reduced, jost_reduced_branch, jost_reduced_derivative,
    jost_reduced_with, trig_closed, trig_of_u, trig_series, Barrier, Branch, JostEval, Trig,
    DEFAULT_SERIES_SWITCH,
};
pub use roots::{
    find_zero, find_zeros, winding_number, CellRect, Certify, JostZero, RootConfig,
    AUTO_CERTIFY_MAX_N,
};
pub use scattering::{
    classify_virtual, hadamard_reconstruct, hadamard_relative_error, phase_shift, s_matrix,
    PoleKind, VIRTUAL_WIDTH_RATIO,
};

#[derive(Debug, thiserror::Error)]
pub enum JostError {
    #[error("barrier strength must be finite and non-negative, got {0}")]
    InvalidBarrier(f64),
    #[error("sigma must be non-negative, got {0}")]
    InvalidSigma(f64),
    #[error("zero indices start at 1")]
    ZeroIndex,
    #[error("no zeros for free particle (v = 0): G(β; 0) = e^(-iβ) never vanishes")]
    FreeParticle,
    #[error("empty request: n_max must be at least 1")]
    EmptyRequest,
    #[error("invalid root configuration: tolerances must be positive and max_iter ≥ 1")]
    InvalidConfig,
    #[error("Newton failed to converge in cell {n} after grid fallback")]
    ConvergenceFailure { n: usize },
    #[error("cell {n} has winding number {winding}, expected 1")]
    CertificationFailure { n: usize, winding: i64 },
    #[error("winding number is not an integer ({0} turns)")]
    WindingIndeterminate(f64),
    #[error("Jost function vanishes on the integration contour")]
    ZeroOnContour,
    #[error("empty zero catalog")]
    EmptyCatalog,
    #[error("zero {n}: {source}")]
    AtIndex {
        n: usize,
        #[source]
        source: Box<JostError>,
    },
}
