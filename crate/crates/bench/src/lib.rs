//! Shared input builders for the benchmark targets.

use cyclo_core::numtheory::carmichael;
use cyclo_core::spectral::{normalized_cumsum, RealSeries};

/// Normalized Carmichael cumulative-sum series of length `t_max`.
pub fn carmichael_series(t_max: u64, sigma: f64) -> RealSeries {
    normalized_cumsum(|n| carmichael(n).expect("in sieve range") as f64, t_max, sigma)
        .expect("valid series parameters")
}

/// Residues coprime to `q`.
pub fn units(q: u64) -> Vec<u64> {
    (1..q)
        .filter(|&a| cyclo_core::numtheory::gcd(a, q) == 1)
        .collect()
}
