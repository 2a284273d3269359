//! Numerical toolkit for cyclic structure in `Z/qZ` and its quantum and
//! thermal realizations.
//!
//! Five subsystems, each usable on its own:
//!
//! - [`numtheory`] — exact arithmetic functions (factorization, totient,
//!   Carmichael lambda, Möbius, Mangoldt, multiplicative orders,
//!   primitive-root tests, Ramanujan sums);
//! - [`spectral`] — normalized cumulative sums, periodograms, and log-log
//!   slope fits for power-law spectra;
//! - [`hilbert`] — finite-dimensional number/phase operator algebra:
//!   phase states, clock and shift operators, order eigenstates, Galois
//!   twists, and evolution under the logarithmic Hamiltonian;
//! - [`thermal`] — partition function and thermal expectation values of
//!   the Bost–Connes system, with an independent Dirichlet-series oracle
//!   and the temperature asymptotes;
//! - [`phaselock`] — Adler-equation dynamics, circle-map winding numbers,
//!   the devil's staircase, and Mangoldt-modulated coupling.
//!
//! Everything is pure and deterministic; shared tables are built once and
//! read-only afterwards, so all entry points are safe to call from
//! concurrent threads.

pub mod error;
pub mod hilbert;
pub mod numtheory;
pub mod phaselock;
pub mod spectral;
pub mod thermal;

pub use error::{Error, Result};
pub use hilbert::{BasisOrigin, ComplexMatrix, StateVector, MAX_DIM, OPERATOR_TOL};
pub use num_complex::Complex64;
pub use numtheory::{ArithmeticValue, FactoredInteger, Sieve};
pub use phaselock::{
    AdlerParams, AdlerRun, CircleMapParams, ModulatedRun, StaircasePoint, WindingEstimate,
};
pub use spectral::{Periodogram, RealSeries, SlopeFit};
pub use thermal::{CriticalSlope, ReducedFraction, TailBoundedSum, ThermalSample};
