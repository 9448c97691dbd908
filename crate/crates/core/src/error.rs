//! Error type shared across the crate.
//!
//! Every fallible operation returns [`Result`]. Variants are grouped by
//! failure mode: invalid arguments (caller bugs or out-of-range requests),
//! series evaluations that cannot certify the requested accuracy, and
//! numerical breakdowns detected at run time (near-singular systems,
//! root-finding failures, violated realness/positivity checks).

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Unified error type for the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[non_exhaustive]
pub enum Error {
    /// A smoothness order outside the supported range was requested.
    #[error("unsupported smoothness order m = {requested}: must be between 1 and {ceiling}")]
    UnsupportedOrder { requested: u32, ceiling: u32 },

    /// A lattice size below the minimum of two points was requested.
    #[error("invalid lattice size N = {requested}: at least 2 nodes are required")]
    InvalidLatticeSize { requested: u32 },

    /// A point, sample, or parameter was NaN or infinite.
    #[error("non-finite value encountered in {context}: {value}")]
    NonFinite { context: &'static str, value: f64 },

    /// Series truncation controls that cannot be satisfied even in principle.
    #[error("invalid series control: {reason}")]
    InvalidControl { reason: String },

    /// A restricted-frequency sum was requested for the residue class of zero,
    /// where the defining series diverges.
    #[error("lattice sum diverges: residue index j = {j} is a multiple of N = {n}")]
    SingularLatticeSum { j: i64, n: u32 },

    /// A series evaluation stopped without certifying the requested tolerance.
    #[error(
        "series did not converge: certified tail bound {achieved:.3e} exceeds \
         tolerance {requested:.3e} after {terms} terms"
    )]
    SeriesNotConverged {
        requested: f64,
        achieved: f64,
        terms: usize,
    },

    /// Root isolation or polishing failed for a spectral polynomial.
    #[error("root finding failed for polynomial of degree {degree}: {reason}")]
    RootFinding { degree: usize, reason: String },

    /// Two interpolation nodes coincide (or nearly so) modulo 1.
    #[error(
        "interpolation nodes {a} and {b} are separated by {separation:.3e} (mod 1), \
         below the minimum of {minimum:.1e}"
    )]
    NodesTooClose {
        a: f64,
        b: f64,
        separation: f64,
        minimum: f64,
    },

    /// The dense interpolation system is numerically singular.
    #[error(
        "interpolation system is numerically singular at elimination step {step} \
         (pivot {pivot:.3e}); closest node pair: {node_a} and {node_b}"
    )]
    SingularSystem {
        step: usize,
        pivot: f64,
        node_a: f64,
        node_b: f64,
    },

    /// A quantity that is non-negative in exact arithmetic evaluated to a
    /// negative value beyond the rounding allowance.
    #[error("squared error norm evaluated to {value:.3e}, below the rounding floor")]
    NegativeNormSquared { value: f64 },

    /// A real-by-symmetry quantity retained a spurious imaginary part.
    #[error("spurious imaginary residue {residue:.3e} in {context}")]
    SpuriousImaginary { residue: f64, context: &'static str },

    /// Sampled data does not form a valid lattice sample vector.
    #[error("invalid sample data: {reason}")]
    InvalidSamples { reason: String },

    /// A quadrature or evaluation grid request was malformed.
    #[error("invalid grid: {reason}")]
    InvalidGrid { reason: String },
}
