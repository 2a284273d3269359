//! Finite-dimensional realization of the number/phase operator algebra:
//! number states, discrete-Fourier phase states and the Hermitian phase
//! operator, the truncated one-sided shift, modular multiplication and
//! clock operators, order eigenstates, Galois twists, and the logarithmic
//! time evolution.
//!
//! Two bases coexist and must not be mixed:
//!
//! * [`BasisOrigin::Zero`] — residues `|0> .. |q-1>` of `Z/qZ`, where the
//!   phase, clock and modular-shift operators live;
//! * [`BasisOrigin::One`]  — positive integers `|1> .. |N>`, where the
//!   Hamiltonian `ln N` is finite and time evolution is defined.
//!
//! Every state and operator carries its origin and evolution rejects the
//! wrong one (`ln 0` has nowhere to go).
//!
//! All roots of unity are drawn from one canonical constructor indexed by
//! the reduced residue, so identities that are permutations of table
//! entries (clock conjugation, Galois relabeling) hold bit-exactly rather
//! than merely to rounding.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::numtheory::{gcd, mult_order};

/// Largest operator dimension constructed by this module.
pub const MAX_DIM: usize = 4096;

/// Absolute max-norm tolerance for the unitarity/hermiticity predicates.
pub const OPERATOR_TOL: f64 = 1e-12;

/// Index origin of the underlying number-state basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisOrigin {
    /// `|0>, |1>, ..., |q-1>` — the `Z/qZ` basis.
    Zero,
    /// `|1>, |2>, ..., |N>` — the positive-integer basis.
    One,
}

/// The canonical primitive-root power `exp(2 pi i k / q)`, with `k`
/// reduced into `[0, q)` before any trigonometry.
pub fn root_of_unity(q: u64, k: i64) -> Complex64 {
    let r = k.rem_euclid(q as i64) as f64;
    Complex64::from_polar(1.0, TAU * r / q as f64)
}

fn check_dim(dim: usize, min: usize) -> Result<()> {
    if dim < min || dim > MAX_DIM {
        return Err(Error::DimensionRange {
            dim,
            min,
            max: MAX_DIM,
        });
    }
    Ok(())
}

/// Dense complex vector on a number-state basis.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    basis: BasisOrigin,
    amplitudes: DVector<Complex64>,
}

impl StateVector {
    pub fn from_amplitudes(basis: BasisOrigin, amplitudes: Vec<Complex64>) -> Result<Self> {
        check_dim(amplitudes.len(), 1)?;
        Ok(StateVector {
            basis,
            amplitudes: DVector::from_vec(amplitudes),
        })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn basis_origin(&self) -> BasisOrigin {
        self.basis
    }

    pub fn amplitude(&self, i: usize) -> Complex64 {
        self.amplitudes[i]
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        self.amplitudes.as_slice()
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.norm()
    }

    /// Inner product `<self|other>` (conjugate-linear in `self`).
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        assert_eq!(self.basis, other.basis, "basis mismatch in inner product");
        self.amplitudes.dotc(&other.amplitudes)
    }

    pub fn sub(&self, other: &StateVector) -> StateVector {
        assert_eq!(self.basis, other.basis, "basis mismatch in subtraction");
        StateVector {
            basis: self.basis,
            amplitudes: &self.amplitudes - &other.amplitudes,
        }
    }

    pub fn scale(&self, factor: Complex64) -> StateVector {
        StateVector {
            basis: self.basis,
            amplitudes: &self.amplitudes * factor,
        }
    }
}

/// Dense complex operator on a number-state basis.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    basis: BasisOrigin,
    entries: DMatrix<Complex64>,
}

impl ComplexMatrix {
    pub fn from_fn(
        basis: BasisOrigin,
        dim: usize,
        f: impl Fn(usize, usize) -> Complex64,
    ) -> Result<Self> {
        check_dim(dim, 1)?;
        Ok(ComplexMatrix {
            basis,
            entries: DMatrix::from_fn(dim, dim, f),
        })
    }

    pub fn identity(basis: BasisOrigin, dim: usize) -> Result<Self> {
        check_dim(dim, 1)?;
        Ok(ComplexMatrix {
            basis,
            entries: DMatrix::identity(dim, dim),
        })
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn basis_origin(&self) -> BasisOrigin {
        self.basis
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[(row, col)]
    }

    pub fn adjoint(&self) -> ComplexMatrix {
        ComplexMatrix {
            basis: self.basis,
            entries: self.entries.adjoint(),
        }
    }

    pub fn trace(&self) -> Complex64 {
        self.entries.trace()
    }

    pub fn scale(&self, factor: Complex64) -> ComplexMatrix {
        ComplexMatrix {
            basis: self.basis,
            entries: &self.entries * factor,
        }
    }

    /// Matrix product; panics on dimension or basis mismatch (mixing the
    /// two bases is a programming error, not a data condition).
    pub fn matmul(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.basis, other.basis, "basis mismatch in product");
        assert_eq!(self.dim(), other.dim(), "dimension mismatch in product");
        ComplexMatrix {
            basis: self.basis,
            entries: &self.entries * &other.entries,
        }
    }

    pub fn apply(&self, state: &StateVector) -> StateVector {
        assert_eq!(self.basis, state.basis, "basis mismatch in application");
        StateVector {
            basis: self.basis,
            amplitudes: &self.entries * &state.amplitudes,
        }
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        assert_eq!(self.basis, other.basis, "basis mismatch in comparison");
        assert_eq!(self.dim(), other.dim(), "dimension mismatch in comparison");
        let mut max = 0.0f64;
        for (a, b) in self.entries.iter().zip(other.entries.iter()) {
            max = max.max((a - b).norm());
        }
        max
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.adjoint()) <= tol
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        let id = ComplexMatrix::identity(self.basis, self.dim()).expect("dim already valid");
        self.adjoint().matmul(self).max_abs_diff(&id) <= tol
    }
}

impl std::ops::Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs)
    }
}

/// Number operator: diagonal `n` over the chosen basis
/// (`0..dim-1` or `1..dim`).
pub fn number_operator(dim: usize, basis: BasisOrigin) -> Result<ComplexMatrix> {
    check_dim(dim, 1)?;
    let offset = match basis {
        BasisOrigin::Zero => 0,
        BasisOrigin::One => 1,
    };
    ComplexMatrix::from_fn(basis, dim, |r, c| {
        if r == c {
            Complex64::new((r + offset) as f64, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// Truncated one-sided shift `E|n> = |n-1>`, `E|0> = 0`: ones on the
/// first superdiagonal. Satisfies `E* E = 1 - |0><0|` exactly; the
/// truncation also clips `E E*` at the top state.
pub fn lowering_e(dim: usize) -> Result<ComplexMatrix> {
    check_dim(dim, 2)?;
    ComplexMatrix::from_fn(BasisOrigin::Zero, dim, |r, c| {
        if c == r + 1 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// Truncation of the exponential-phase eigenstate
/// `sum_n e^{i n psi} |n>` to `dim` terms, normalized on those terms.
///
/// `lowering_e` reproduces it up to a boundary defect:
/// `||E|psi> - e^{i psi}|psi>|| = 1/sqrt(dim)`.
pub fn susskind_glogower_state(dim: usize, psi: f64) -> Result<StateVector> {
    check_dim(dim, 1)?;
    let norm = 1.0 / (dim as f64).sqrt();
    StateVector::from_amplitudes(
        BasisOrigin::Zero,
        (0..dim)
            .map(|n| Complex64::from_polar(norm, psi * n as f64))
            .collect(),
    )
}

/// Discrete-Fourier phase state: amplitude
/// `exp(i (theta0 + 2 pi p / q) n) / sqrt(q)` at `|n>`.
pub fn phase_state(q: u64, p: u64, theta0: f64) -> Result<StateVector> {
    check_dim(q as usize, 1)?;
    if p >= q {
        return Err(Error::ResidueRange {
            value: p,
            lo: 0,
            hi: q,
        });
    }
    let norm = 1.0 / (q as f64).sqrt();
    let amps = (0..q)
        .map(|n| {
            let fourier = root_of_unity(q, (p * n % q) as i64);
            let reference = Complex64::from_polar(1.0, theta0 * n as f64);
            fourier * reference * norm
        })
        .collect();
    StateVector::from_amplitudes(BasisOrigin::Zero, amps)
}

/// Hermitian phase operator `sum_p theta_p |theta_p><theta_p|` with
/// eigenvalues `theta_p = theta0 + 2 pi p / q`.
pub fn phase_operator(q: u64, theta0: f64) -> Result<ComplexMatrix> {
    check_dim(q as usize, 1)?;
    let dim = q as usize;
    let mut entries = DMatrix::from_element(dim, dim, Complex64::new(0.0, 0.0));
    for p in 0..q {
        let theta_p = theta0 + TAU * p as f64 / q as f64;
        let state = phase_state(q, p, theta0)?;
        for r in 0..dim {
            for c in 0..dim {
                entries[(r, c)] +=
                    state.amplitude(r) * state.amplitude(c).conj() * theta_p;
            }
        }
    }
    Ok(ComplexMatrix {
        basis: BasisOrigin::Zero,
        entries,
    })
}

/// Modular multiplication `mu_a |n> = |a n (mod q)>`, a permutation of the
/// `Z/qZ` basis. Defined only for `gcd(a, q) = 1`; otherwise the map is
/// not injective and has no inverse.
pub fn shift_mu(q: u64, a: u64) -> Result<ComplexMatrix> {
    check_dim(q as usize, 2)?;
    let a = a % q;
    if gcd(a, q) != 1 {
        return Err(Error::NotCoprime { a, q });
    }
    ComplexMatrix::from_fn(BasisOrigin::Zero, q as usize, |r, c| {
        if r as u64 == a * c as u64 % q {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// Plain multiplication `|n> -> |a n>` on the positive-integer basis,
/// truncated to `a n <= dim`. Unlike [`shift_mu`] there is no modular
/// wrap-around, which is exactly what makes it scale as `a^{it}` under
/// [`evolve_sigma_t`].
pub fn mult_shift(dim: usize, a: u64) -> Result<ComplexMatrix> {
    check_dim(dim, 1)?;
    if a == 0 {
        return Err(Error::ZeroArgument);
    }
    ComplexMatrix::from_fn(BasisOrigin::One, dim, |r, c| {
        let n = (c + 1) as u64;
        if (r + 1) as u64 == a * n {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// Clock operator `e_p |n> = exp(2 pi i p n / q) |n>` on the `Z/qZ`
/// basis; `p` may be any integer and is reduced mod `q`.
pub fn clock_e(q: u64, p: i64) -> Result<ComplexMatrix> {
    check_dim(q as usize, 1)?;
    let p = p.rem_euclid(q as i64) as u64;
    ComplexMatrix::from_fn(BasisOrigin::Zero, q as usize, |r, c| {
        if r == c {
            root_of_unity(q, (p * r as u64 % q) as i64)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// Clock operator on the positive-integer basis `|1..dim>`: diagonal
/// `exp(2 pi i p n / q)` at `|n>`. This is the realization on which the
/// time evolution acts.
pub fn positive_clock(dim: usize, q: u64, p: i64) -> Result<ComplexMatrix> {
    check_dim(dim, 1)?;
    check_dim(q as usize, 1)?;
    let p = p.rem_euclid(q as i64) as u64;
    ComplexMatrix::from_fn(BasisOrigin::One, dim, |r, c| {
        if r == c {
            let n = (r + 1) as u64;
            root_of_unity(q, (p % q * (n % q) % q) as i64)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// Eigenvector of [`shift_mu`] with eigenvalue `exp(2 pi i k / r)`:
/// the inverse Fourier sum `(1/sqrt(r)) sum_j exp(-2 pi i k j / r)
/// |a^j mod q>` over the orbit of 1 under multiplication by `a`.
pub fn order_eigenstate(q: u64, a: u64, k: u64) -> Result<StateVector> {
    check_dim(q as usize, 2)?;
    let a = a % q;
    if gcd(a, q) != 1 {
        return Err(Error::NotCoprime { a, q });
    }
    let r = mult_order(a, q)?;
    if k >= r {
        return Err(Error::ResidueRange {
            value: k,
            lo: 0,
            hi: r,
        });
    }
    let norm = 1.0 / (r as f64).sqrt();
    let mut amps = vec![Complex64::new(0.0, 0.0); q as usize];
    let mut power = 1u64; // a^j mod q, distinct for j = 0..r-1
    for j in 0..r {
        let phase = root_of_unity(r, -((k * j % r) as i64));
        amps[power as usize] = phase * norm;
        power = power * a % q;
    }
    StateVector::from_amplitudes(BasisOrigin::Zero, amps)
}

/// Galois twist of the clock operator: the group element indexed by `t`
/// (coprime to `q`) sends every q-th root of unity `z` to `z^t`, so the
/// twisted `e_p` is the clock at `t p mod q`.
pub fn galois_twist(q: u64, t: u64, p: i64) -> Result<ComplexMatrix> {
    check_dim(q as usize, 1)?;
    // gcd(t mod q, q) = gcd(t, q), and for q = 1 the twist is trivial.
    let t_red = t % q;
    if gcd(t_red, q) != 1 {
        return Err(Error::NotCoprime { a: t, q });
    }
    let p = p.rem_euclid(q as i64) as u64;
    clock_e(q, (t_red * p % q) as i64)
}

/// Galois twist of the positive-basis clock, for use under evolution.
pub fn galois_twist_positive(dim: usize, q: u64, t: u64, p: i64) -> Result<ComplexMatrix> {
    check_dim(q as usize, 1)?;
    let t_red = t % q;
    if gcd(t_red, q) != 1 {
        return Err(Error::NotCoprime { a: t, q });
    }
    let p = p.rem_euclid(q as i64) as u64;
    positive_clock(dim, q, (t_red * p % q) as i64)
}

/// Heisenberg evolution under the logarithmic Hamiltonian: conjugation by
/// `diag(n^{it})` on the positive-integer basis, i.e. entry `(m, n)` of
/// `x` picks up the phase `(m/n)^{it}`.
///
/// Rejects operators on the `Z/qZ` basis: `ln 0` is undefined there.
pub fn evolve_sigma_t(x: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    if x.basis_origin() != BasisOrigin::One {
        return Err(Error::BasisMismatch {
            expected: BasisOrigin::One,
            found: x.basis_origin(),
        });
    }
    let dim = x.dim();
    let logs: Vec<f64> = (1..=dim).map(|n| (n as f64).ln()).collect();
    ComplexMatrix::from_fn(BasisOrigin::One, dim, |r, c| {
        x.entry(r, c) * Complex64::from_polar(1.0, t * (logs[r] - logs[c]))
    })
}
