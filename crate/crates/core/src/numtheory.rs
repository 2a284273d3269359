//! Exact arithmetic functions on the integers: factorization, Euler totient,
//! Carmichael lambda, Möbius, Mangoldt, multiplicative orders, primitive-root
//! tests, and Ramanujan sums.
//!
//! Everything here is deterministic integer arithmetic. Factorization is
//! trial division against a sieved prime table (built once, read-only), so
//! all functions are safe to call concurrently. Inputs beyond the square of
//! the sieve bound are rejected rather than silently mis-factored.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Default sieve bound; factorization accepts inputs up to its square.
pub const DEFAULT_SIEVE_BOUND: u64 = 1_000_000;

/// A positive integer with its prime-power decomposition.
///
/// Invariants: primes strictly increasing, exponents >= 1, and the product
/// of the prime powers reproduces `value`. `value == 1` has no factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInteger {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl FactoredInteger {
    pub fn value(&self) -> u64 {
        self.value
    }

    /// Prime-power factors `(p, k)` in increasing order of `p`.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// True when `value = p^k` for a single prime `p` (k >= 1).
    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, k)| k == 1)
    }

    /// All divisors of `value`, in no particular order.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, k) in &self.factors {
            let base = divs.clone();
            let mut pe = 1u64;
            for _ in 0..k {
                pe *= p;
                divs.extend(base.iter().map(|d| d * pe));
            }
        }
        divs
    }
}

/// The bundle of arithmetic values at a single integer.
#[derive(Debug, Clone, PartialEq)]
pub struct ArithmeticValue {
    pub n: u64,
    pub totient: u64,
    pub carmichael: u64,
    pub moebius: i32,
    pub mangoldt: f64,
}

/// Read-only prime table with trial-division factorization.
#[derive(Debug)]
pub struct Sieve {
    bound: u64,
    primes: Vec<u64>,
}

impl Sieve {
    /// Sieve of Eratosthenes up to `bound` (inclusive).
    pub fn new(bound: u64) -> Self {
        let bound = bound.max(2);
        let n = bound as usize;
        let mut composite = vec![false; n + 1];
        let mut primes = Vec::new();
        for p in 2..=n {
            if !composite[p] {
                primes.push(p as u64);
                let mut m = p * p;
                while m <= n {
                    composite[m] = true;
                    m += p;
                }
            }
        }
        Sieve { bound, primes }
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// Largest input accepted by [`Sieve::factorize`].
    pub fn limit(&self) -> u64 {
        self.bound.saturating_mul(self.bound)
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Trial-division factorization. Rejects 0 and anything above
    /// `bound^2`, where a leftover cofactor could be composite.
    pub fn factorize(&self, n: u64) -> Result<FactoredInteger> {
        if n == 0 {
            return Err(Error::ZeroArgument);
        }
        if n > self.limit() {
            return Err(Error::FactorRange {
                n,
                bound: self.bound,
                limit: self.limit(),
            });
        }
        let mut rest = n;
        let mut factors = Vec::new();
        for &p in &self.primes {
            if p * p > rest {
                break;
            }
            if rest.is_multiple_of(p) {
                let mut k = 0u32;
                while rest.is_multiple_of(p) {
                    rest /= p;
                    k += 1;
                }
                factors.push((p, k));
            }
        }
        if rest > 1 {
            // rest has no prime factor <= sqrt(rest), hence prime.
            factors.push((rest, 1));
        }
        Ok(FactoredInteger { value: n, factors })
    }
}

fn default_sieve() -> &'static Sieve {
    static SIEVE: OnceLock<Sieve> = OnceLock::new();
    SIEVE.get_or_init(|| Sieve::new(DEFAULT_SIEVE_BOUND))
}

/// Greatest common divisor.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// `base^exp mod modulus` by binary exponentiation (modulus >= 1).
pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = (base % modulus) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Prime-power decomposition of `n` against the shared default sieve.
pub fn factorize(n: u64) -> Result<FactoredInteger> {
    default_sieve().factorize(n)
}

/// Euler totient: the order of the unit group `(Z/nZ)*`, with phi(1) = 1.
pub fn totient(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(totient_of(&f))
}

fn totient_of(f: &FactoredInteger) -> u64 {
    f.factors()
        .iter()
        .map(|&(p, k)| p.pow(k - 1) * (p - 1))
        .product()
}

/// Carmichael lambda: the exponent of `(Z/nZ)*`, with lambda(1) = 1.
///
/// lambda(2) = 1, lambda(4) = 2, lambda(2^k) = 2^(k-2) for k >= 3, and
/// lambda(p^k) = phi(p^k) for odd primes; composites take the lcm.
pub fn carmichael(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(carmichael_of(&f))
}

fn carmichael_of(f: &FactoredInteger) -> u64 {
    f.factors()
        .iter()
        .map(|&(p, k)| {
            if p == 2 {
                match k {
                    1 => 1,
                    2 => 2,
                    _ => 1u64 << (k - 2),
                }
            } else {
                p.pow(k - 1) * (p - 1)
            }
        })
        .fold(1, lcm)
}

/// Möbius function: 0 when `n` has a squared prime factor, otherwise
/// `(-1)^k` over the `k` distinct primes; mu(1) = 1.
pub fn moebius(n: u64) -> Result<i32> {
    let f = factorize(n)?;
    if !f.is_squarefree() {
        return Ok(0);
    }
    Ok(if f.factors().len() % 2 == 0 { 1 } else { -1 })
}

/// Mangoldt function: `ln b` when `n = b^k` for a prime `b`, else 0.
pub fn mangoldt(n: u64) -> Result<f64> {
    let f = factorize(n)?;
    if n > 1 && f.is_prime_power() {
        Ok((f.factors()[0].0 as f64).ln())
    } else {
        Ok(0.0)
    }
}

/// Mangoldt values for all `n` in `[0, n_max]` (index 0 unused, set to 0).
///
/// Bulk form for long coupling-modulation runs: one boolean sieve instead
/// of `n_max` factorizations.
pub fn mangoldt_table(n_max: u64) -> Vec<f64> {
    let n = n_max as usize;
    let mut table = vec![0.0f64; n + 1];
    if n < 2 {
        return table;
    }
    let mut composite = vec![false; n + 1];
    for p in 2..=n {
        if !composite[p] {
            let lnp = (p as f64).ln();
            let mut m = p * p;
            while m <= n {
                composite[m] = true;
                m += p;
            }
            let mut pk = p;
            loop {
                table[pk] = lnp;
                match pk.checked_mul(p) {
                    Some(next) if next <= n => pk = next,
                    _ => break,
                }
            }
        }
    }
    table
}

/// Smallest `r >= 1` with `a^r = 1 (mod q)`.
///
/// Requires `q >= 2`, `1 <= a < q`, and `gcd(a, q) = 1`; otherwise no power
/// of `a` returns to 1. The order is found by stripping primes from
/// lambda(q) rather than scanning exponents linearly.
pub fn mult_order(a: u64, q: u64) -> Result<u64> {
    if q < 2 {
        return Err(Error::ZeroArgument);
    }
    if a == 0 || a >= q {
        return Err(Error::ResidueRange {
            value: a,
            lo: 1,
            hi: q,
        });
    }
    if gcd(a, q) != 1 {
        return Err(Error::NotCoprime { a, q });
    }
    let lambda = carmichael(q)?;
    let mut r = lambda;
    for &(p, _) in factorize(lambda)?.factors() {
        while r % p == 0 && mod_pow(a, r / p, q) == 1 {
            r /= p;
        }
    }
    debug_assert_eq!(mod_pow(a, r, q), 1);
    Ok(r)
}

/// True iff `a` generates the full unit group mod `q`:
/// `gcd(a, q) = 1` and `ord_q(a) = phi(q)`.
pub fn is_primitive_root(a: u64, q: u64) -> Result<bool> {
    if q < 2 {
        return Err(Error::ZeroArgument);
    }
    if a == 0 || a >= q {
        return Err(Error::ResidueRange {
            value: a,
            lo: 1,
            hi: q,
        });
    }
    if gcd(a, q) != 1 {
        return Ok(false);
    }
    Ok(mult_order(a, q)? == totient(q)?)
}

/// Ramanujan sum `c_q(n)`: the sum of `n`-th powers of the primitive q-th
/// roots of unity. Always an integer; evaluated through the closed form
/// `mu(q/g) * phi(q) / phi(q/g)` with `g = gcd(n, q)`.
pub fn ramanujan_sum(q: u64, n: u64) -> Result<i64> {
    if q == 0 || n == 0 {
        return Err(Error::ZeroArgument);
    }
    let g = gcd(n, q);
    let mu = moebius(q / g)?;
    if mu == 0 {
        return Ok(0);
    }
    let phi_q = totient(q)?;
    let phi_qg = totient(q / g)?;
    // phi(d) divides phi(q) for d | q, so this division is exact.
    debug_assert_eq!(phi_q % phi_qg, 0);
    Ok(i64::from(mu) * (phi_q / phi_qg) as i64)
}

/// All of totient, lambda, Möbius and Mangoldt at `n` in one call.
pub fn arithmetic_value(n: u64) -> Result<ArithmeticValue> {
    Ok(ArithmeticValue {
        n,
        totient: totient(n)?,
        carmichael: carmichael(n)?,
        moebius: moebius(n)?,
        mangoldt: mangoldt(n)?,
    })
}
