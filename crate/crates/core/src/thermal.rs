//! Thermal expectation values of the shift/clock algebra under the
//! logarithmic Hamiltonian `H|n> = ln n |n>` — the Bost–Connes system at
//! inverse temperature `beta`.
//!
//! The closed form [`kms_expectation`] is an Euler product over the prime
//! decomposition of the denominator. It is cross-checked by an independent
//! route in [`dirichlet_oracle`]: a trace realized as a character-twisted
//! Dirichlet series, averaged over the Galois group `(Z/qZ)*` (the single
//! character `exp(2 pi i n p / q)` alone carries a genuinely nonzero
//! imaginary part and depends on `p`; only the symmetrized trace reproduces
//! the product formula). The series is summed in full periods of `q`, where
//! the character weights cancel and the tail drops one order faster.
//!
//! Products are accumulated in log space with explicit sign tracking so
//! deep low-temperature asymptotes (`beta = 50` and beyond) neither
//! overflow nor lose the sign pattern of the Möbius function.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hilbert::root_of_unity;
use crate::numtheory::{factorize, gcd, moebius, totient};

/// A fraction `p/q` in lowest terms (`gcd(p, q) = 1`, `q >= 1`).
///
/// `p = 0` reduces to `0/1` only, since `gcd(0, q) = q`. Improper
/// fractions such as `1/1` are allowed; thermal expectations depend on the
/// denominator alone, and locking labels need `1/1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReducedFraction {
    numer: u64,
    denom: u64,
}

impl ReducedFraction {
    pub fn new(numer: u64, denom: u64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::ZeroArgument);
        }
        if gcd(numer, denom) != 1 {
            return Err(Error::NotReduced {
                p: numer,
                q: denom,
            });
        }
        Ok(ReducedFraction { numer, denom })
    }

    /// Reduce `p/q` to lowest terms first.
    pub fn reduced(p: u64, q: u64) -> Result<Self> {
        if q == 0 {
            return Err(Error::ZeroArgument);
        }
        let g = gcd(p, q).max(1);
        ReducedFraction::new(p / g, q / g)
    }

    pub fn numer(&self) -> u64 {
        self.numer
    }

    pub fn denom(&self) -> u64 {
        self.denom
    }
}

impl std::fmt::Display for ReducedFraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

/// One cell of the thermal surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalSample {
    pub q: u64,
    pub p: u64,
    pub beta: f64,
    pub value: f64,
}

/// A truncated series value with an explicit bound on the neglected tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailBoundedSum {
    /// Partial sum (imaginary part is reported, not discarded).
    pub partial: Complex64,
    pub terms_used: u64,
    pub tail_bound: f64,
}

impl TailBoundedSum {
    pub fn real(&self) -> f64 {
        self.partial.re
    }
}

/// One-sided derivative of the expectation value across the critical line,
/// with the coarser `Mangoldt/q` ratio reported alongside.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalSlope {
    /// `lim_{eps -> 0+} psi_{1-eps}(1/q) / eps`: `ln b / phi(q)` when
    /// `q = b^k` is a prime power, 0 otherwise.
    pub derivative: f64,
    /// `Mangoldt(q) / q`, the simpler ratio quoted for the critical region.
    pub mangoldt_over_q: f64,
}

/// `ln|1 - e^x|`, stable for `x` of either sign and any magnitude.
fn ln_abs_one_minus_exp(x: f64) -> f64 {
    if x > 0.0 {
        x + (-(-x).exp()).ln_1p()
    } else {
        (-x.exp()).ln_1p()
    }
}

/// Partial sum of `zeta(beta) = sum n^-beta` over `n <= n_terms`, with the
/// Euler–Maclaurin closure `N^{1-beta}/(beta-1) - N^{-beta}/2` applied.
/// The first neglected correction is below `beta * N^{-beta-1}`, reported
/// as `tail_bound`.
///
/// Fails for `beta <= 1`: the series diverges at the pole.
pub fn zeta_partial(beta: f64, n_terms: u64) -> Result<TailBoundedSum> {
    if !beta.is_finite() {
        return Err(Error::BadParameter {
            name: "beta",
            value: beta,
        });
    }
    if beta <= 1.0 {
        return Err(Error::DivergentSeries { beta });
    }
    if n_terms < 10 {
        return Err(Error::TooFewTerms {
            got: n_terms,
            min: 10,
        });
    }
    // Ascending magnitudes: accumulate the small terms first.
    let mut sum = 0.0f64;
    for n in (1..=n_terms).rev() {
        sum += (n as f64).powf(-beta);
    }
    let nf = n_terms as f64;
    let closure = nf.powf(1.0 - beta) / (beta - 1.0) - 0.5 * nf.powf(-beta);
    Ok(TailBoundedSum {
        partial: Complex64::new(sum + closure, 0.0),
        terms_used: n_terms,
        tail_bound: beta * nf.powf(-beta - 1.0),
    })
}

/// Closed-form expectation value at `p/q`: the product over prime powers
/// `b^k` dividing `q` of `b^{-k beta} (1 - b^{beta-1}) / (1 - b^{-1})`.
///
/// The value depends on `q` only. Special points: the empty product gives
/// 1 at `q = 1`; every factor is 1 at `beta = 0`; each numerator vanishes
/// at `beta = 1`, so the value is 0 for `q >= 2` there (the continuous
/// limit across the critical line).
pub fn kms_expectation(frac: &ReducedFraction, beta: f64) -> Result<f64> {
    if !beta.is_finite() || beta < 0.0 {
        return Err(Error::BadParameter {
            name: "beta",
            value: beta,
        });
    }
    let q = frac.denom();
    if q == 1 || beta == 0.0 {
        return Ok(1.0);
    }
    if beta == 1.0 {
        return Ok(0.0);
    }
    let f = factorize(q)?;
    let mut log_abs = 0.0f64;
    let mut negative = false;
    for &(b, k) in f.factors() {
        let ln_b = (b as f64).ln();
        log_abs -= f64::from(k) * beta * ln_b;
        // numerator 1 - b^{beta-1} = 1 - e^x; negative once beta > 1
        let x = (beta - 1.0) * ln_b;
        log_abs += ln_abs_one_minus_exp(x);
        if x > 0.0 {
            negative = !negative;
        }
        // denominator 1 - b^{-1}
        log_abs -= ln_abs_one_minus_exp(-ln_b);
    }
    let value = log_abs.exp();
    Ok(if negative { -value } else { value })
}

/// The low-temperature phase-operator expectation written the other way
/// around: `q^{-beta}` times the product over the distinct primes dividing
/// `q` of `(1 - b^{beta-1}) / (1 - b^{-1})`.
///
/// Algebraically identical to [`kms_expectation`] because
/// `q^{-beta} = prod b^{-k_b beta}`; kept as a distinct evaluation route.
pub fn kms_lowtemp_phase(q: u64, beta: f64) -> Result<f64> {
    if !beta.is_finite() || beta <= 1.0 {
        return Err(Error::BadParameter {
            name: "beta",
            value: beta,
        });
    }
    if q == 0 {
        return Err(Error::ZeroArgument);
    }
    if q == 1 {
        return Ok(1.0);
    }
    let f = factorize(q)?;
    let mut log_abs = -beta * (q as f64).ln();
    let mut negative = false;
    for &(b, _) in f.factors() {
        let ln_b = (b as f64).ln();
        let x = (beta - 1.0) * ln_b;
        log_abs += ln_abs_one_minus_exp(x);
        if x > 0.0 {
            negative = !negative;
        }
        log_abs -= ln_abs_one_minus_exp(-ln_b);
    }
    let value = log_abs.exp();
    Ok(if negative { -value } else { value })
}

/// Independent trace oracle for [`kms_expectation`]: the Dirichlet series
/// `sum_n chi(n) n^{-beta} / (phi(q) zeta(beta))`, where `chi(n)` averages
/// `exp(2 pi i w n p / q)` over the Galois group elements `w` coprime to
/// `q`. Summation runs over full periods of `q` (character weights cancel
/// within each period, so the truncation error decays like `N^{-beta}`
/// rather than `N^{1-beta}`).
///
/// Shares nothing with the closed form: the character table comes from
/// direct root-of-unity sums and `phi(q)` from unit enumeration.
pub fn dirichlet_oracle(
    frac: &ReducedFraction,
    beta: f64,
    n_terms: u64,
) -> Result<TailBoundedSum> {
    if !beta.is_finite() {
        return Err(Error::BadParameter {
            name: "beta",
            value: beta,
        });
    }
    if beta <= 1.0 {
        return Err(Error::DivergentSeries { beta });
    }
    let q = frac.denom();
    let p = frac.numer();
    if q == 1 {
        // The character is constantly 1 and the series is zeta itself.
        return Ok(TailBoundedSum {
            partial: Complex64::new(1.0, 0.0),
            terms_used: n_terms,
            tail_bound: 0.0,
        });
    }
    if n_terms < q {
        return Err(Error::TooFewTerms {
            got: n_terms,
            min: q,
        });
    }

    let units: Vec<u64> = (1..q).filter(|&w| gcd(w, q) == 1).collect();
    let phi = units.len() as f64;
    let chi: Vec<Complex64> = (0..q)
        .map(|rho| {
            units
                .iter()
                .map(|&w| root_of_unity(q, (w * rho % q * p % q) as i64))
                .sum()
        })
        .collect();

    let blocks = n_terms / q;
    let n_eff = blocks * q;
    let mut sum = Complex64::new(0.0, 0.0);
    for m in (0..blocks).rev() {
        let base = m * q;
        let mut block = Complex64::new(0.0, 0.0);
        for j in 1..=q {
            let n = base + j;
            block += chi[(n % q) as usize] * (n as f64).powf(-beta);
        }
        sum += block;
    }
    let zeta = zeta_partial(beta, n_eff)?.real();
    Ok(TailBoundedSum {
        partial: sum / (phi * zeta),
        terms_used: n_eff,
        tail_bound: q as f64 * (beta + 1.0) * (n_eff as f64).powf(-beta),
    })
}

/// The `beta -> infinity` limit of the expectation value:
/// `mu(q) / phi(q)`.
pub fn lowtemp_limit(q: u64) -> Result<f64> {
    Ok(f64::from(moebius(q)?) / totient(q)? as f64)
}

/// Exact one-sided slope of `psi_{1-eps}(1/q)` in `eps` at the critical
/// line. Prime powers contribute a single vanishing Euler factor, giving
/// `ln b / phi(q)`; two or more distinct primes make the product `O(eps^2)`
/// and the slope 0.
pub fn critical_slope(q: u64) -> Result<CriticalSlope> {
    if q < 2 {
        return Err(Error::ZeroArgument);
    }
    let f = factorize(q)?;
    if f.is_prime_power() {
        let (b, _) = f.factors()[0];
        let ln_b = (b as f64).ln();
        Ok(CriticalSlope {
            derivative: ln_b / totient(q)? as f64,
            mangoldt_over_q: ln_b / q as f64,
        })
    } else {
        Ok(CriticalSlope {
            derivative: 0.0,
            mangoldt_over_q: 0.0,
        })
    }
}

/// Expectation values on the grid `q = 1..q_max` by `beta_grid`, row-major
/// with `q` outer. `p` is fixed to the smallest residue coprime to `q`
/// (0 for `q = 1`, else 1); the closed form has no `p` dependence.
pub fn thermal_surface(q_max: u64, beta_grid: &[f64]) -> Result<Vec<ThermalSample>> {
    if q_max == 0 {
        return Err(Error::ZeroArgument);
    }
    if beta_grid.is_empty() {
        return Err(Error::TooFewTerms { got: 0, min: 1 });
    }
    let mut samples = Vec::with_capacity((q_max as usize) * beta_grid.len());
    for q in 1..=q_max {
        let p = if q == 1 { 0 } else { 1 };
        let frac = ReducedFraction::new(p, q)?;
        for &beta in beta_grid {
            samples.push(ThermalSample {
                q,
                p,
                beta,
                value: kms_expectation(&frac, beta)?,
            });
        }
    }
    Ok(samples)
}
