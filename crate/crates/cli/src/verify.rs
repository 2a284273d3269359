//! Verification suites behind `cyclo verify` — the library invariants run
//! at fixed desk-scale parameters, reported as JSON with one entry per
//! check.

use cyclo_core::hilbert::{
    clock_e, evolve_sigma_t, galois_twist_positive, mult_shift, order_eigenstate, phase_state,
    positive_clock, shift_mu, BasisOrigin, ComplexMatrix, OPERATOR_TOL,
};
use cyclo_core::numtheory::{gcd, mult_order};
use cyclo_core::phaselock::{
    adler_integrate, adler_mean_frequency, plateau_width, staircase, winding_number,
    AdlerParams, CircleMapParams,
};
use cyclo_core::thermal::{
    critical_slope, dirichlet_oracle, kms_expectation, kms_lowtemp_phase, lowtemp_limit,
    zeta_partial, ReducedFraction,
};
use cyclo_core::Complex64;
use serde_json::json;

use crate::args::Suite;
use crate::output::{CliResult, Meta, ARTIFACT_VERSION};

struct Check {
    name: &'static str,
    measured: f64,
    tolerance: f64,
    detail: String,
}

impl Check {
    fn pass(&self) -> bool {
        self.measured <= self.tolerance
    }

    fn json(&self) -> serde_json::Value {
        json!({
            "name": self.name,
            "pass": self.pass(),
            "measured": self.measured,
            "tolerance": self.tolerance,
            "detail": self.detail,
        })
    }
}

fn frac(p: u64, q: u64) -> ReducedFraction {
    ReducedFraction::new(p, q).expect("reduced by construction")
}

fn operators_checks() -> CliResult<Vec<Check>> {
    let mut checks = Vec::new();

    let mut ortho = 0.0f64;
    for q in 1..=32u64 {
        let states: Vec<_> = (0..q)
            .map(|p| phase_state(q, p, 0.0).expect("valid phase state"))
            .collect();
        for (i, a) in states.iter().enumerate() {
            for (j, b) in states.iter().enumerate() {
                let expect = if i == j { 1.0 } else { 0.0 };
                ortho = ortho.max((a.inner(b) - Complex64::new(expect, 0.0)).norm());
            }
        }
        let mut projector = ComplexMatrix::from_fn(BasisOrigin::Zero, q as usize, |_, _| {
            Complex64::new(0.0, 0.0)
        })?;
        for s in &states {
            projector = ComplexMatrix::from_fn(BasisOrigin::Zero, q as usize, |r, c| {
                projector.entry(r, c) + s.amplitude(r) * s.amplitude(c).conj()
            })?;
        }
        let id = ComplexMatrix::identity(BasisOrigin::Zero, q as usize)?;
        ortho = ortho.max(projector.max_abs_diff(&id));
    }
    checks.push(Check {
        name: "phase-state orthonormality/completeness",
        measured: ortho,
        tolerance: OPERATOR_TOL,
        detail: "max residual over q <= 32".into(),
    });

    let mut eigen = 0.0f64;
    let mut order_real = 0.0f64;
    for q in 2..=32u64 {
        for a in (2..q).filter(|&a| gcd(a, q) == 1) {
            let mu = shift_mu(q, a)?;
            let r = mult_order(a, q)?;
            for k in 0..r {
                let u = order_eigenstate(q, a, k)?;
                let eig =
                    Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / r as f64);
                eigen = eigen.max(mu.apply(&u).sub(&u.scale(eig)).norm());
            }
            if q <= 24 {
                let mut power = ComplexMatrix::identity(BasisOrigin::Zero, q as usize)?;
                for _ in 0..r {
                    power = power.matmul(&mu);
                }
                let id = ComplexMatrix::identity(BasisOrigin::Zero, q as usize)?;
                order_real = order_real.max(power.max_abs_diff(&id));
            }
        }
    }
    checks.push(Check {
        name: "u_k eigenresidual max",
        measured: eigen,
        tolerance: OPERATOR_TOL,
        detail: "max ||mu u - e^{2 pi i k / r} u|| over q <= 32".into(),
    });
    checks.push(Check {
        name: "shift order realization mu^r = 1",
        measured: order_real,
        tolerance: 0.0,
        detail: "exact over q <= 24".into(),
    });

    let mut mult = 0.0f64;
    let mut exchange = 0.0f64;
    for q in 2..=24u64 {
        let units: Vec<u64> = (1..q).filter(|&a| gcd(a, q) == 1).collect();
        for &k in &units {
            for &l in &units {
                let lhs = shift_mu(q, k)?.matmul(&shift_mu(q, l)?);
                mult = mult.max(lhs.max_abs_diff(&shift_mu(q, k * l % q)?));
            }
        }
        for &a in &units {
            let mu = shift_mu(q, a)?;
            let a_inv = units.iter().copied().find(|&x| a * x % q == 1).unwrap();
            for p in 0..q {
                let conj = mu.matmul(&clock_e(q, p as i64)?).matmul(&mu.adjoint());
                exchange = exchange.max(conj.max_abs_diff(&clock_e(q, (p * a_inv % q) as i64)?));
            }
        }
    }
    checks.push(Check {
        name: "shift multiplicativity",
        measured: mult,
        tolerance: 0.0,
        detail: "mu_k mu_l = mu_{kl}, exact over q <= 24".into(),
    });
    checks.push(Check {
        name: "clock-shift exchange",
        measured: exchange,
        tolerance: 0.0,
        detail: "mu e_p mu* = e_{p a^{-1}}, exact over q <= 24".into(),
    });

    let dim = 64;
    let t = 1.3;
    let m = mult_shift(dim, 2)?;
    let sigma = evolve_sigma_t(&m, t)?
        .max_abs_diff(&m.scale(Complex64::from_polar(1.0, t * 2.0f64.ln())));
    checks.push(Check {
        name: "evolution scales the plain shift by a^{it}",
        measured: sigma,
        tolerance: OPERATOR_TOL,
        detail: "dim 64, a = 2, t = 1.3".into(),
    });

    let mut commute = 0.0f64;
    for q in 2..=12u64 {
        for t_g in (1..q).filter(|&w| gcd(w, q) == 1) {
            for &time in &[0.31f64, 1.7] {
                let twisted = galois_twist_positive(48, q, t_g, 1)?;
                commute = commute.max(evolve_sigma_t(&twisted, time)?.max_abs_diff(&twisted));
            }
        }
    }
    let clock = positive_clock(48, 5, 2)?;
    commute = commute.max(evolve_sigma_t(&clock, 0.9)?.max_abs_diff(&clock));
    checks.push(Check {
        name: "Galois twist commutes with evolution",
        measured: commute,
        tolerance: OPERATOR_TOL,
        detail: "generators over q <= 12, dim 48".into(),
    });

    Ok(checks)
}

fn kms_checks(q_max: u64, n_terms: u64) -> CliResult<Vec<Check>> {
    let mut checks = Vec::new();

    let z2 = (zeta_partial(2.0, 10_000)?.real() - std::f64::consts::PI.powi(2) / 6.0).abs();
    let z4 = (zeta_partial(4.0, 10_000)?.real() - std::f64::consts::PI.powi(4) / 90.0).abs();
    checks.push(Check {
        name: "zeta constants",
        measured: z2.max(z4),
        tolerance: 1e-8,
        detail: "zeta(2) vs pi^2/6 and zeta(4) vs pi^4/90 at N = 10^4".into(),
    });

    let mut oracle_diff = 0.0f64;
    for q in 1..=q_max {
        let p = if q == 1 { 0 } else { 1 };
        for &beta in &[1.5f64, 2.0, 3.0] {
            let closed = kms_expectation(&frac(p, q), beta)?;
            let oracle = dirichlet_oracle(&frac(p, q), beta, n_terms)?;
            oracle_diff = oracle_diff.max((oracle.real() - closed).abs());
        }
    }
    checks.push(Check {
        name: "oracle-vs-closed-form max |diff|",
        measured: oracle_diff,
        tolerance: 1e-3,
        detail: format!("q <= {q_max}, beta in {{1.5, 2, 3}}, N = {n_terms}"),
    });

    let mut hot = 0.0f64;
    let mut cold = 0.0f64;
    let mut phase_form = 0.0f64;
    for q in 1..=40u64 {
        let p = if q == 1 { 0 } else { 1 };
        hot = hot.max((kms_expectation(&frac(p, q), 0.0)? - 1.0).abs());
        cold = cold.max((kms_expectation(&frac(p, q), 50.0)? - lowtemp_limit(q)?).abs());
        for &beta in &[1.5f64, 3.0, 10.0] {
            phase_form = phase_form
                .max((kms_lowtemp_phase(q, beta)? - kms_expectation(&frac(p, q), beta)?).abs());
        }
    }
    checks.push(Check {
        name: "beta = 0 gives exactly 1",
        measured: hot,
        tolerance: 0.0,
        detail: "q <= 40".into(),
    });
    checks.push(Check {
        name: "beta = 50 matches mu(q)/phi(q)",
        measured: cold,
        tolerance: 1e-10,
        detail: "q <= 40".into(),
    });
    checks.push(Check {
        name: "phase form equals Euler product",
        measured: phase_form,
        tolerance: 1e-12,
        detail: "q <= 40, beta in {1.5, 3, 10}".into(),
    });

    let fd = |q: u64, eps: f64| -> CliResult<f64> {
        Ok(kms_expectation(&frac(1, q), 1.0 - eps)? / eps)
    };
    let mut slope_err = 0.0f64;
    for q in 2..=40u64 {
        let eps = 1e-4;
        let richardson = 2.0 * fd(q, eps / 2.0)? - fd(q, eps)?;
        let exact = critical_slope(q)?.derivative;
        let err = if exact == 0.0 {
            richardson.abs()
        } else {
            (richardson - exact).abs() / exact.abs()
        };
        slope_err = slope_err.max(err);
    }
    checks.push(Check {
        name: "critical slope vs Richardson differences",
        measured: slope_err,
        tolerance: 1e-6,
        detail: "relative error (absolute where the slope is 0), q <= 40".into(),
    });

    Ok(checks)
}

fn dynamics_checks() -> CliResult<Vec<Check>> {
    let mut checks = Vec::new();

    let mut unlocked = 0.0f64;
    for ratio in [1.25f64, 1.5, 2.0, 4.0] {
        let params = AdlerParams {
            coupling: 1.0,
            detuning: ratio,
            phi0: 0.1,
        };
        let dt = (1e-2 / ratio.max(1.0)) * 0.8;
        let run = adler_integrate(&params, 500.0, dt)?;
        let analytic = adler_mean_frequency(&params);
        unlocked = unlocked.max((run.mean_frequency - analytic).abs() / analytic.abs());
    }
    checks.push(Check {
        name: "Adler unlocked relative error",
        measured: unlocked,
        tolerance: 0.01,
        detail: "detuning/K in {1.25, 1.5, 2, 4}, t_end = 500".into(),
    });

    let mut locked = 0.0f64;
    for ratio in [0.0f64, 0.5, 0.9] {
        let params = AdlerParams {
            coupling: 1.0,
            detuning: ratio,
            phi0: 0.1,
        };
        locked = locked.max(adler_integrate(&params, 500.0, 0.008)?.mean_frequency.abs());
    }
    checks.push(Check {
        name: "Adler locked absolute error",
        measured: locked,
        tolerance: 1e-3,
        detail: "detuning/K in {0, 0.5, 0.9}, t_end = 500".into(),
    });

    let mut rigid = 0.0f64;
    for omega in [0.1f64, 0.3, 0.77] {
        let est = winding_number(&CircleMapParams {
            omega,
            coupling: 0.0,
            phi0: 0.0,
            n_iter: 10_000,
        })?;
        rigid = rigid.max((est.winding - omega).abs());
    }
    checks.push(Check {
        name: "rigid rotation winding",
        measured: rigid,
        tolerance: 1e-9,
        detail: "c = 0 reproduces omega".into(),
    });

    let points = staircase(0.8, 0.0, 1.0, 201, 2_000)?;
    let mut violation = 0.0f64;
    for w in points.windows(2) {
        violation = violation.max(w[0].winding - w[1].winding);
    }
    checks.push(Check {
        name: "staircase monotone",
        measured: violation.max(0.0),
        tolerance: 1e-12,
        detail: "largest winding decrease over the c = 0.8 grid".into(),
    });

    let half = frac(1, 2);
    let widths: Vec<f64> = [0.2f64, 0.5, 0.9]
        .iter()
        .map(|&c| plateau_width(c, &half, 1e-4, 10_000))
        .collect::<Result<_, _>>()?;
    let strict = widths[0] > 0.0 && widths[0] < widths[1] && widths[1] < widths[2];
    checks.push(Check {
        name: "plateau widths increase with coupling",
        measured: if strict { 0.0 } else { 1.0 },
        tolerance: 0.0,
        detail: format!(
            "widths at 1/2: {:.5}, {:.5}, {:.5} for c = 0.2, 0.5, 0.9",
            widths[0], widths[1], widths[2]
        ),
    });

    Ok(checks)
}

fn suite_names(suite: Suite) -> &'static str {
    match suite {
        Suite::Operators => "operators",
        Suite::Kms => "kms",
        Suite::Dynamics => "dynamics",
        Suite::All => "all",
    }
}

pub fn run_suite(suite: Suite) -> CliResult<(serde_json::Value, bool)> {
    let mut checks = Vec::new();
    if matches!(suite, Suite::Operators | Suite::All) {
        checks.extend(operators_checks()?);
    }
    if matches!(suite, Suite::Kms | Suite::All) {
        checks.extend(kms_checks(12, 100_000)?);
    }
    if matches!(suite, Suite::Dynamics | Suite::All) {
        checks.extend(dynamics_checks()?);
    }
    let passed = checks.iter().filter(|c| c.pass()).count();
    let failed = checks.len() - passed;
    let report = json!({
        "suite": suite_names(suite),
        "version": ARTIFACT_VERSION,
        "checks": checks.iter().map(Check::json).collect::<Vec<_>>(),
        "passed": passed,
        "failed": failed,
    });
    Ok((report, failed == 0))
}

/// Per-sample comparison table for `kms-check`: closed form vs oracle,
/// asymptotes, and critical slopes.
pub fn kms_check_report(q_max: u64, n_terms: u64) -> CliResult<serde_json::Value> {
    let _ = Meta::new("kms-check"); // metadata added by the caller

    let mut oracle_rows = Vec::new();
    let mut max_diff = 0.0f64;
    for q in 1..=q_max {
        let p = if q == 1 { 0 } else { 1 };
        for &beta in &[1.5f64, 2.0, 3.0] {
            let closed = kms_expectation(&frac(p, q), beta)?;
            let oracle = dirichlet_oracle(&frac(p, q), beta, n_terms)?;
            let diff = (oracle.real() - closed).abs();
            max_diff = max_diff.max(diff);
            oracle_rows.push(json!({
                "q": q,
                "beta": beta,
                "closed_form": closed,
                "oracle": oracle.real(),
                "abs_diff": diff,
                "tail_bound": oracle.tail_bound,
            }));
        }
    }

    let mut asymptote_rows = Vec::new();
    let mut max_asymptote = 0.0f64;
    for q in 1..=40u64 {
        let p = if q == 1 { 0 } else { 1 };
        let cold = kms_expectation(&frac(p, q), 50.0)?;
        let limit = lowtemp_limit(q)?;
        max_asymptote = max_asymptote.max((cold - limit).abs());
        asymptote_rows.push(json!({
            "q": q,
            "beta": 50.0,
            "closed_form": cold,
            "limit": limit,
            "abs_diff": (cold - limit).abs(),
        }));
    }

    let mut slope_rows = Vec::new();
    let mut max_slope_err = 0.0f64;
    for q in 2..=q_max.max(12) {
        let eps = 1e-4;
        let fd = |e: f64| -> CliResult<f64> {
            Ok(kms_expectation(&frac(1, q), 1.0 - e)? / e)
        };
        let richardson = 2.0 * fd(eps / 2.0)? - fd(eps)?;
        let slope = critical_slope(q)?;
        let err = if slope.derivative == 0.0 {
            richardson.abs()
        } else {
            (richardson - slope.derivative).abs() / slope.derivative.abs()
        };
        max_slope_err = max_slope_err.max(err);
        slope_rows.push(json!({
            "q": q,
            "derivative": slope.derivative,
            "richardson": richardson,
            "mangoldt_over_q": slope.mangoldt_over_q,
            "err": err,
        }));
    }

    let pass = max_diff <= 1e-3 && max_asymptote <= 1e-10 && max_slope_err <= 1e-6;
    Ok(json!({
        "oracle": oracle_rows,
        "asymptotes": asymptote_rows,
        "critical_slopes": slope_rows,
        "max_oracle_diff": max_diff,
        "max_asymptote_diff": max_asymptote,
        "max_slope_err": max_slope_err,
        "pass": pass,
    }))
}
