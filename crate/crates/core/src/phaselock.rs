//! Classical locking dynamics: the Adler equation (analytic mean beat
//! frequency plus a fixed-step integrator), circle-map winding numbers, the
//! devil's staircase with plateau detection, and a coupling modulated by
//! the Mangoldt function.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::numtheory::{gcd, mangoldt_table};
use crate::spectral::RealSeries;
use crate::thermal::ReducedFraction;

/// Minimum iteration count for winding-number estimates.
pub const MIN_WINDING_ITER: u64 = 1_000;

/// Largest denominator tried when labeling staircase plateaus.
pub const LOCK_DENOM_MAX: u64 = 8;

/// Parameters of the phase-difference equation
/// `dPhi/dt = detuning - coupling * sin(Phi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdlerParams {
    /// Interaction strength `K` (rad/s); nonnegative.
    pub coupling: f64,
    /// Frequency detuning (rad/s).
    pub detuning: f64,
    /// Initial phase difference (rad).
    pub phi0: f64,
}

impl AdlerParams {
    fn validate(&self) -> Result<()> {
        if !self.coupling.is_finite() || self.coupling < 0.0 {
            return Err(Error::BadParameter {
                name: "coupling",
                value: self.coupling,
            });
        }
        for (name, value) in [("detuning", self.detuning), ("phi0", self.phi0)] {
            if !value.is_finite() {
                return Err(Error::BadParameter { name, value });
            }
        }
        Ok(())
    }
}

/// Integrated trajectory plus its mean beat frequency.
#[derive(Debug, Clone, PartialEq)]
pub struct AdlerRun {
    /// Phase samples; entry `i` (1-based index) holds `Phi((i-1) dt)`.
    pub trajectory: RealSeries,
    /// `(Phi(t_end) - Phi(t_burn)) / (t_end - t_burn)` after a 20% burn-in.
    pub mean_frequency: f64,
}

/// Mean beat frequency of the locked/unlocked branches: zero inside the
/// locked zone `|detuning| <= coupling`, otherwise
/// `sign(detuning) * sqrt(detuning^2 - coupling^2)` — the real-valued
/// domain of the unlocked formula, which meets the locked branch
/// continuously at zero.
pub fn adler_mean_frequency(params: &AdlerParams) -> f64 {
    let k = params.coupling;
    let dw = params.detuning;
    if dw.abs() <= k {
        0.0
    } else {
        dw.signum() * (dw * dw - k * k).sqrt()
    }
}

/// Classical fixed-step 4th-order integration of the phase equation.
///
/// Step size is capped at `0.01 / max(coupling, |detuning|, 1)` and the
/// span must cover at least 100 steps.
pub fn adler_integrate(params: &AdlerParams, t_end: f64, dt: f64) -> Result<AdlerRun> {
    params.validate()?;
    if !dt.is_finite() || dt <= 0.0 {
        return Err(Error::BadParameter {
            name: "dt",
            value: dt,
        });
    }
    let dt_max = 1e-2 / params.coupling.max(params.detuning.abs()).max(1.0);
    if dt > dt_max {
        return Err(Error::StepSize { dt, max: dt_max });
    }
    if !t_end.is_finite() || t_end < 100.0 * dt {
        return Err(Error::SpanTooShort {
            t_end,
            min: 100.0 * dt,
        });
    }

    let k = params.coupling;
    let dw = params.detuning;
    let deriv = |phi: f64| dw - k * phi.sin();

    let n_steps = (t_end / dt).round() as usize;
    let mut samples = Vec::with_capacity(n_steps + 1);
    let mut phi = params.phi0;
    samples.push(phi);
    for _ in 0..n_steps {
        let k1 = deriv(phi);
        let k2 = deriv(phi + 0.5 * dt * k1);
        let k3 = deriv(phi + 0.5 * dt * k2);
        let k4 = deriv(phi + dt * k3);
        phi += dt * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0;
        samples.push(phi);
    }

    let burn = (0.2 * n_steps as f64).floor() as usize;
    let mean_frequency =
        (samples[n_steps] - samples[burn]) / ((n_steps - burn) as f64 * dt);
    Ok(AdlerRun {
        trajectory: RealSeries::new(1, samples)?,
        mean_frequency,
    })
}

/// Parameters of the circle map
/// `Phi_{n+1} = Phi_n + 2 pi Omega - c sin(Phi_n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleMapParams {
    /// Bare winding parameter; `[0, 1]` is the canonical window.
    pub omega: f64,
    /// Coupling coefficient `c`; the map is a homeomorphism for `c < 1`.
    pub coupling: f64,
    /// Initial phase (rad).
    pub phi0: f64,
    pub n_iter: u64,
}

impl CircleMapParams {
    fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("omega", self.omega),
            ("coupling", self.coupling),
            ("phi0", self.phi0),
        ] {
            if !value.is_finite() {
                return Err(Error::BadParameter { name, value });
            }
        }
        if self.coupling < 0.0 {
            return Err(Error::BadParameter {
                name: "coupling",
                value: self.coupling,
            });
        }
        if self.n_iter < MIN_WINDING_ITER {
            return Err(Error::TooFewIterations {
                n_iter: self.n_iter,
                min: MIN_WINDING_ITER,
            });
        }
        Ok(())
    }
}

/// Finite-iterate winding estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindingEstimate {
    /// `(Phi_n - Phi_0) / (2 pi n)` at `n = n_iter`.
    pub winding: f64,
    /// Convergence-rate estimate `1 / n_iter`.
    pub uncertainty: f64,
    /// Set when the coupling reaches 1 somewhere along the run: locking
    /// zones may overlap there and the limit is not guaranteed.
    pub overlap_regime: bool,
}

/// One step of the circle map on the lifted (unwrapped) phase.
#[inline]
fn circle_step(phi: f64, two_pi_omega: f64, c: f64) -> f64 {
    phi + two_pi_omega - c * phi.sin()
}

/// Winding-number estimate over `n_iter` iterates of the lift.
///
/// `coupling >= 1` is accepted but flagged via
/// [`WindingEstimate::overlap_regime`].
pub fn winding_number(params: &CircleMapParams) -> Result<WindingEstimate> {
    params.validate()?;
    let two_pi_omega = TAU * params.omega;
    let c = params.coupling;
    let mut phi = params.phi0;
    for _ in 0..params.n_iter {
        phi = circle_step(phi, two_pi_omega, c);
    }
    Ok(WindingEstimate {
        winding: (phi - params.phi0) / (TAU * params.n_iter as f64),
        uncertainty: 1.0 / params.n_iter as f64,
        overlap_regime: c >= 1.0,
    })
}

/// One sampled point of the staircase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StaircasePoint {
    pub omega: f64,
    pub winding: f64,
    /// Lowest-denominator rational within `2 / n_iter` of the winding
    /// estimate (denominators up to [`LOCK_DENOM_MAX`]), if any.
    pub locked_to: Option<ReducedFraction>,
}

fn lock_label(winding: f64, threshold: f64) -> Option<ReducedFraction> {
    for q in 1..=LOCK_DENOM_MAX {
        let p = (winding * q as f64).round();
        if p < 0.0 {
            continue;
        }
        let p = p as u64;
        if gcd(p, q) != 1 && !(p == 0 && q == 1) {
            continue; // already covered at a smaller denominator
        }
        if (winding - p as f64 / q as f64).abs() < threshold {
            return ReducedFraction::new(p, q).ok();
        }
    }
    None
}

/// Winding numbers on a uniform grid over `[omega_lo, omega_hi]`, with
/// plateau labels attached where the estimate sits within `2 / n_iter` of
/// a low-denominator rational. Requires the homeomorphism regime `c < 1`.
pub fn staircase(
    coupling: f64,
    omega_lo: f64,
    omega_hi: f64,
    n_points: usize,
    n_iter: u64,
) -> Result<Vec<StaircasePoint>> {
    if !coupling.is_finite() || !(0.0..1.0).contains(&coupling) {
        return Err(Error::BadParameter {
            name: "coupling",
            value: coupling,
        });
    }
    if !omega_lo.is_finite() || !omega_hi.is_finite() || omega_lo >= omega_hi {
        return Err(Error::BadParameter {
            name: "omega_lo",
            value: omega_lo,
        });
    }
    if n_points < 2 {
        return Err(Error::TooFewTerms {
            got: n_points as u64,
            min: 2,
        });
    }
    let threshold = 2.0 / n_iter as f64;
    let step = (omega_hi - omega_lo) / (n_points - 1) as f64;
    let mut points = Vec::with_capacity(n_points);
    for i in 0..n_points {
        let omega = omega_lo + i as f64 * step;
        let estimate = winding_number(&CircleMapParams {
            omega,
            coupling,
            phi0: 0.0,
            n_iter,
        })?;
        points.push(StaircasePoint {
            omega,
            winding: estimate.winding,
            locked_to: lock_label(estimate.winding, threshold),
        });
    }
    Ok(points)
}

/// Width of the locking plateau at `frac = p/q`, located by bisection from
/// inside the plateau out to the first unlocked parameter on either side.
///
/// Returns 0 when no locked point is found on the initial scan, or when
/// the measured width does not exceed the estimator's own resolution
/// (`4 / n_iter` plus the bisection tolerance) — a plateau that narrow is
/// indistinguishable from none.
pub fn plateau_width(
    coupling: f64,
    frac: &ReducedFraction,
    tol: f64,
    n_iter: u64,
) -> Result<f64> {
    if !coupling.is_finite() || !(0.0..1.0).contains(&coupling) {
        return Err(Error::BadParameter {
            name: "coupling",
            value: coupling,
        });
    }
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::BadParameter {
            name: "tol",
            value: tol,
        });
    }
    if n_iter < MIN_WINDING_ITER {
        return Err(Error::TooFewIterations {
            n_iter,
            min: MIN_WINDING_ITER,
        });
    }

    let target = frac.numer() as f64 / frac.denom() as f64;
    let threshold = 2.0 / n_iter as f64;
    let nu = |omega: f64| -> Result<f64> {
        Ok(winding_number(&CircleMapParams {
            omega,
            coupling,
            phi0: 0.0,
            n_iter,
        })?
        .winding)
    };
    let locked = |omega: f64| -> Result<bool> { Ok((nu(omega)? - target).abs() < threshold) };

    // Coarse scan around the center of the presumptive plateau.
    let q2 = (frac.denom() * frac.denom()) as f64;
    let delta = (coupling / PI).max(1.0 / q2) * 0.75;
    const SCAN_POINTS: usize = 41;
    let mut locked_lo = f64::NAN;
    let mut locked_hi = f64::NAN;
    for i in 0..SCAN_POINTS {
        let omega = target - delta + 2.0 * delta * i as f64 / (SCAN_POINTS - 1) as f64;
        if locked(omega)? {
            if locked_lo.is_nan() {
                locked_lo = omega;
            }
            locked_hi = omega;
        }
    }
    if locked_lo.is_nan() {
        return Ok(0.0);
    }

    // Bracket outward until unlocked on both sides, then bisect each edge.
    let mut outside_lo = locked_lo - delta;
    while locked(outside_lo)? {
        outside_lo -= delta;
    }
    let mut outside_hi = locked_hi + delta;
    while locked(outside_hi)? {
        outside_hi += delta;
    }

    let mut lo = (outside_lo, locked_lo);
    while lo.1 - lo.0 > tol {
        let mid = 0.5 * (lo.0 + lo.1);
        if locked(mid)? {
            lo.1 = mid;
        } else {
            lo.0 = mid;
        }
    }
    let mut hi = (locked_hi, outside_hi);
    while hi.1 - hi.0 > tol {
        let mid = 0.5 * (hi.0 + hi.1);
        if locked(mid)? {
            hi.0 = mid;
        } else {
            hi.1 = mid;
        }
    }

    let width = 0.5 * (hi.0 + hi.1) - 0.5 * (lo.0 + lo.1);
    let resolution = 4.0 / n_iter as f64 + 2.0 * tol;
    Ok(if width > resolution { width } else { 0.0 })
}

/// A modulated-coupling run: winding estimate plus per-step beat series.
#[derive(Debug, Clone, PartialEq)]
pub struct ModulatedRun {
    pub winding: WindingEstimate,
    /// `(Phi_n - Phi_{n-1}) / 2 pi` for step `n = 1..n_iter`.
    pub beat: RealSeries,
}

/// Circle map with the coupling modulated by the Mangoldt function:
/// step `n` uses `c_n = c (1 + kappa (Mangoldt(n) - 1))`.
///
/// Centering on `Mangoldt - 1` makes `kappa = 0` reproduce
/// [`winding_number`] bit-exactly and keeps the mean coupling near `c`
/// (the Mangoldt function averages to 1). Runs whose effective coupling
/// ever reaches 1 are flagged through
/// [`WindingEstimate::overlap_regime`].
pub fn mangoldt_modulated_map(
    omega: f64,
    coupling: f64,
    kappa: f64,
    n_iter: u64,
) -> Result<ModulatedRun> {
    for (name, value) in [("omega", omega), ("coupling", coupling), ("kappa", kappa)] {
        if !value.is_finite() {
            return Err(Error::BadParameter { name, value });
        }
    }
    if coupling < 0.0 {
        return Err(Error::BadParameter {
            name: "coupling",
            value: coupling,
        });
    }
    if n_iter < MIN_WINDING_ITER {
        return Err(Error::TooFewIterations {
            n_iter,
            min: MIN_WINDING_ITER,
        });
    }

    let lambda = mangoldt_table(n_iter);
    let two_pi_omega = TAU * omega;
    let phi0 = 0.0f64;
    let mut phi = phi0;
    let mut beat = Vec::with_capacity(n_iter as usize);
    let mut max_coupling = f64::NEG_INFINITY;
    for n in 1..=n_iter {
        let c_n = coupling * (1.0 + kappa * (lambda[n as usize] - 1.0));
        max_coupling = max_coupling.max(c_n);
        let next = circle_step(phi, two_pi_omega, c_n);
        beat.push((next - phi) / TAU);
        phi = next;
    }
    Ok(ModulatedRun {
        winding: WindingEstimate {
            winding: (phi - phi0) / (TAU * n_iter as f64),
            uncertainty: 1.0 / n_iter as f64,
            overlap_regime: max_coupling >= 1.0,
        },
        beat: RealSeries::new(1, beat)?,
    })
}
