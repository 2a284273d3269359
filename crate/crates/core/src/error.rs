use crate::hilbert::BasisOrigin;

/// Errors reported by the library. Every variant is a domain error: the
/// arguments fall outside the range on which the requested quantity is
/// defined (or computable at desk scale).
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("argument must be a positive integer")]
    ZeroArgument,

    #[error("{n} exceeds the factorization range (sieve bound {bound}, limit {limit})")]
    FactorRange { n: u64, bound: u64, limit: u64 },

    #[error("multiplicative structure undefined: gcd({a}, {q}) != 1")]
    NotCoprime { a: u64, q: u64 },

    #[error("residue {value} outside [{lo}, {hi})")]
    ResidueRange { value: u64, lo: u64, hi: u64 },

    #[error("{p}/{q} is not a reduced fraction")]
    NotReduced { p: u64, q: u64 },

    #[error("series diverges at beta = {beta} (pole at beta = 1)")]
    DivergentSeries { beta: f64 },

    #[error("needs at least {min} terms, got {got}")]
    TooFewTerms { got: u64, min: u64 },

    #[error("parameter {name} must be finite and nonnegative, got {value}")]
    BadParameter { name: &'static str, value: f64 },

    #[error("series must be non-empty with finite samples")]
    BadSeries,

    #[error("series too short: {len} < {min}")]
    SeriesTooShort { len: usize, min: usize },

    #[error("nonpositive value {value} at t = {t} inside the log-fit range")]
    NonPositiveFit { t: u64, value: f64 },

    #[error("{usable} usable bins in band, need at least {min}")]
    TooFewBins { usable: usize, min: usize },

    #[error("dimension {dim} outside supported range [{min}, {max}]")]
    DimensionRange { dim: usize, min: usize, max: usize },

    #[error("expected operand on the {expected:?} basis, got {found:?}")]
    BasisMismatch {
        expected: BasisOrigin,
        found: BasisOrigin,
    },

    #[error("step size {dt} too large for this system (max {max})")]
    StepSize { dt: f64, max: f64 },

    #[error("integration span {t_end} shorter than {min}")]
    SpanTooShort { t_end: f64, min: f64 },

    #[error("{n_iter} iterations below the minimum {min} for winding estimates")]
    TooFewIterations { n_iter: u64, min: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
