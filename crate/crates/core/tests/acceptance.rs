//! Acceptance suite: one test per criterion, each printing a PASS line
//! with the measured values once its assertions hold. Run with
//! `cargo test -p cyclo-core --test acceptance -- --nocapture` to see the
//! per-criterion report.

use std::time::Instant;

use cyclo_core::hilbert::{
    clock_e, evolve_sigma_t, galois_twist_positive, mult_shift, order_eigenstate, phase_state,
    positive_clock, shift_mu, ComplexMatrix, BasisOrigin, OPERATOR_TOL,
};
use cyclo_core::numtheory::{
    carmichael, gcd, moebius, mult_order, totient,
};
use cyclo_core::phaselock::{
    adler_integrate, adler_mean_frequency, plateau_width, staircase, winding_number,
    AdlerParams, CircleMapParams,
};
use cyclo_core::spectral::{growth_exponent, loglog_slope, normalized_cumsum, periodogram};
use cyclo_core::thermal::{
    critical_slope, dirichlet_oracle, kms_expectation, lowtemp_limit, thermal_surface,
    zeta_partial, ReducedFraction,
};
use num_complex::Complex64;

fn report(criterion: u32, label: &str, detail: String, started: Instant, limit_s: f64) {
    let elapsed = started.elapsed().as_secs_f64();
    assert!(
        elapsed < limit_s,
        "criterion {criterion} exceeded its {limit_s} s budget: {elapsed:.2} s"
    );
    println!("[PASS] criterion {criterion}: {label} — {detail} ({elapsed:.2} s)");
}

fn frac(p: u64, q: u64) -> ReducedFraction {
    ReducedFraction::new(p, q).unwrap()
}

fn beta_grid(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    (0..steps)
        .map(|i| lo + (hi - lo) * i as f64 / (steps - 1) as f64)
        .collect()
}

#[test]
fn criterion_1_table_anchors() {
    let t0 = Instant::now();
    assert_eq!(carmichael(8).unwrap(), 2);
    assert_eq!(totient(8).unwrap(), 4);
    assert_eq!(totient(7).unwrap(), 6);
    assert_eq!(totient(9).unwrap(), 6);
    assert_eq!(mult_order(3, 7).unwrap(), 6);
    assert_eq!(mult_order(2, 9).unwrap(), 6);
    assert_eq!(mult_order(3, 8).unwrap(), 2);
    report(
        1,
        "table anchors",
        "7 exact integer identities".into(),
        t0,
        1.0,
    );
}

#[test]
fn criterion_2_kms_oracle_equivalence() {
    let t0 = Instant::now();
    const N_TERMS: u64 = 1_000_000;
    let mut max_diff = 0.0f64;
    let mut max_imag = 0.0f64;
    let mut checked = 0u32;
    for q in 1..=12u64 {
        let ps: Vec<u64> = if q == 1 {
            vec![0]
        } else {
            (1..q).filter(|&p| gcd(p, q) == 1).collect()
        };
        for p in ps {
            let fraction = frac(p, q);
            for &beta in &[1.5f64, 2.0, 3.0] {
                let closed = kms_expectation(&fraction, beta).unwrap();
                let oracle = dirichlet_oracle(&fraction, beta, N_TERMS).unwrap();
                let diff = (oracle.real() - closed).abs();
                assert!(
                    diff <= 1e-3,
                    "q={q} p={p} beta={beta}: |{} - {closed}| = {diff}",
                    oracle.real()
                );
                max_diff = max_diff.max(diff);
                max_imag = max_imag.max(oracle.partial.im.abs());
                checked += 1;
            }
        }
    }
    report(
        2,
        "KMS oracle equivalence",
        format!("{checked} (q,p,beta) cells, max |oracle-closed| = {max_diff:.2e}, max imag = {max_imag:.2e}"),
        t0,
        60.0,
    );
}

#[test]
fn criterion_3_asymptote_suite() {
    let t0 = Instant::now();
    for q in 1..=40u64 {
        let p = if q == 1 { 0 } else { 1 };
        assert_eq!(
            kms_expectation(&frac(p, q), 0.0).unwrap(),
            1.0,
            "beta=0 at q={q}"
        );
        let cold = kms_expectation(&frac(p, q), 50.0).unwrap();
        let limit = lowtemp_limit(q).unwrap();
        assert!(
            (cold - limit).abs() <= 1e-10,
            "beta=50 asymptote at q={q}: {cold} vs {limit}"
        );
    }

    // Richardson-extrapolated finite differences of the closed form as the
    // independent route to the critical slope.
    let fd = |q: u64, eps: f64| kms_expectation(&frac(1, q), 1.0 - eps).unwrap() / eps;
    let mut max_rel = 0.0f64;
    for q in 2..=40u64 {
        let eps = 1e-4;
        let richardson = 2.0 * fd(q, eps / 2.0) - fd(q, eps);
        let exact = critical_slope(q).unwrap().derivative;
        if exact == 0.0 {
            assert!(richardson.abs() <= 1e-6, "q={q}: {richardson}");
        } else {
            let rel = (richardson - exact).abs() / exact.abs();
            assert!(rel <= 1e-6, "q={q}: rel err {rel}");
            max_rel = max_rel.max(rel);
        }
    }
    report(
        3,
        "asymptote suite",
        format!("beta=0 exact, beta=50 within 1e-10, critical slope max rel err {max_rel:.2e}"),
        t0,
        10.0,
    );
}

#[test]
fn criterion_4_thermal_surface_regeneration() {
    let t0 = Instant::now();
    let betas = beta_grid(0.5, 1.5, 41);
    let surface = thermal_surface(40, &betas).unwrap();
    assert_eq!(surface.len(), 40 * 41);
    for s in &surface {
        if s.q == 1 {
            assert_eq!(s.value, 1.0, "q=1 row at beta={}", s.beta);
        }
        if s.beta == 1.0 && s.q >= 2 {
            assert_eq!(s.value, 0.0, "critical line at q={}", s.q);
        }
        if s.beta == 1.5 {
            let mu = moebius(s.q).unwrap();
            if mu != 0 {
                assert_eq!(
                    s.value.signum(),
                    f64::from(mu).signum(),
                    "sign pattern at q={}",
                    s.q
                );
            }
        }
    }
    report(
        4,
        "thermal surface",
        "40x41 grid: q=1 row constant 1, beta=1 column 0, Moebius sign pattern at beta=1.5".into(),
        t0,
        5.0,
    );
}

#[test]
fn criterion_5_spectral_claims() {
    let t0 = Instant::now();

    // Growth exponent of the raw Carmichael cumulative sum.
    let mut running = 0.0f64;
    let raw: Vec<f64> = (1..=10_000u64)
        .map(|n| {
            running += carmichael(n).unwrap() as f64;
            running
        })
        .collect();
    let raw_series = cyclo_core::spectral::RealSeries::new(1, raw).unwrap();
    let growth = growth_exponent(&raw_series).unwrap();
    assert!(
        (1.8..=2.0).contains(&growth),
        "growth exponent {growth} outside [1.8, 2.0]"
    );

    // Log-log slope of the normalized-series periodogram.
    let t_max = 1u64 << 14;
    let series =
        normalized_cumsum(|n| carmichael(n).unwrap() as f64, t_max, 1.90).unwrap();
    let spectrum = periodogram(&series).unwrap();
    let fit = loglog_slope(&spectrum, (0.0, 0.5)).unwrap();
    assert!(
        (fit.exponent - (-0.70)).abs() <= 0.20,
        "spectral slope {} outside -0.70 +/- 0.20",
        fit.exponent
    );
    report(
        5,
        "spectral claims",
        format!(
            "growth exponent {growth:.3} in [1.8, 2.0]; spectral slope {:.3} in -0.70 +/- 0.20 ({} bins)",
            fit.exponent, fit.n_points
        ),
        t0,
        30.0,
    );
}

#[test]
fn criterion_6_operator_algebra_suite() {
    let t0 = Instant::now();

    // Phase-state orthonormality and completeness, q <= 32.
    let mut max_ortho = 0.0f64;
    for q in 1..=32u64 {
        let states: Vec<_> = (0..q).map(|p| phase_state(q, p, 0.0).unwrap()).collect();
        for (i, a) in states.iter().enumerate() {
            for (j, b) in states.iter().enumerate() {
                let expect = if i == j { 1.0 } else { 0.0 };
                let residual = (a.inner(b) - Complex64::new(expect, 0.0)).norm();
                max_ortho = max_ortho.max(residual);
            }
        }
        let mut completeness = ComplexMatrix::from_fn(BasisOrigin::Zero, q as usize, |_, _| {
            Complex64::new(0.0, 0.0)
        })
        .unwrap();
        for s in &states {
            completeness = ComplexMatrix::from_fn(BasisOrigin::Zero, q as usize, |r, c| {
                completeness.entry(r, c) + s.amplitude(r) * s.amplitude(c).conj()
            })
            .unwrap();
        }
        let id = ComplexMatrix::identity(BasisOrigin::Zero, q as usize).unwrap();
        max_ortho = max_ortho.max(completeness.max_abs_diff(&id));
    }
    assert!(max_ortho <= OPERATOR_TOL, "phase-state residual {max_ortho}");

    // Order eigenstates: residuals of the eigenvalue equation, plus the
    // operator realization mu^r = 1, for q <= 32.
    let mut max_eigen = 0.0f64;
    for q in 2..=32u64 {
        for a in (2..q).filter(|&a| gcd(a, q) == 1) {
            let mu = shift_mu(q, a).unwrap();
            let r = mult_order(a, q).unwrap();
            for k in 0..r {
                let u = order_eigenstate(q, a, k).unwrap();
                let eigen = Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / r as f64);
                let residual = mu.apply(&u).sub(&u.scale(eigen)).norm();
                max_eigen = max_eigen.max(residual);
            }
            let mut power = ComplexMatrix::identity(BasisOrigin::Zero, q as usize).unwrap();
            for _ in 0..r {
                power = power.matmul(&mu);
            }
            let id = ComplexMatrix::identity(BasisOrigin::Zero, q as usize).unwrap();
            assert_eq!(power.max_abs_diff(&id), 0.0, "mu_{a}^{r} != 1 mod {q}");
        }
    }
    assert!(max_eigen <= OPERATOR_TOL, "eigenstate residual {max_eigen}");

    // Multiplicativity and clock-shift exchange are exact permutations.
    for q in 2..=24u64 {
        let units: Vec<u64> = (1..q).filter(|&a| gcd(a, q) == 1).collect();
        for &k in &units {
            for &l in &units {
                let lhs = shift_mu(q, k).unwrap().matmul(&shift_mu(q, l).unwrap());
                let rhs = shift_mu(q, k * l % q).unwrap();
                assert_eq!(lhs.max_abs_diff(&rhs), 0.0, "mu multiplicativity q={q}");
            }
        }
        for &a in &units {
            let mu = shift_mu(q, a).unwrap();
            let a_inv = units.iter().copied().find(|&x| a * x % q == 1).unwrap();
            for p in 0..q {
                let conjugated = mu
                    .matmul(&clock_e(q, p as i64).unwrap())
                    .matmul(&mu.adjoint());
                let expect = clock_e(q, (p * a_inv % q) as i64).unwrap();
                assert_eq!(
                    conjugated.max_abs_diff(&expect),
                    0.0,
                    "clock-shift exchange q={q} a={a} p={p}"
                );
            }
        }
    }

    // Evolution identities at dim 64 on the positive-integer basis.
    let dim = 64;
    let t = 1.3;
    let m = mult_shift(dim, 2).unwrap();
    let evolved = evolve_sigma_t(&m, t).unwrap();
    let scaled = m.scale(Complex64::from_polar(1.0, t * 2.0f64.ln()));
    let sigma_residual = evolved.max_abs_diff(&scaled);
    assert!(sigma_residual <= OPERATOR_TOL, "sigma_t residual {sigma_residual}");

    let clock = positive_clock(dim, 5, 2).unwrap();
    assert_eq!(
        evolve_sigma_t(&clock, t).unwrap().max_abs_diff(&clock),
        0.0,
        "diagonal clock must be invariant"
    );

    // Galois twist and evolution commute on the generators, q <= 12.
    let mut max_commute = 0.0f64;
    for q in 2..=12u64 {
        for t_g in (1..q).filter(|&w| gcd(w, q) == 1) {
            for &time in &[0.31f64, 1.7] {
                let twisted = galois_twist_positive(dim, q, t_g, 1).unwrap();
                let evolve_then = evolve_sigma_t(&twisted, time).unwrap();
                max_commute = max_commute.max(evolve_then.max_abs_diff(&twisted));

                let m = mult_shift(dim, 3).unwrap(); // untouched by the twist
                let ev = evolve_sigma_t(&m, time).unwrap();
                let expect = m.scale(Complex64::from_polar(1.0, time * 3.0f64.ln()));
                max_commute = max_commute.max(ev.max_abs_diff(&expect));
            }
        }
    }
    assert!(max_commute <= OPERATOR_TOL, "commutation residual {max_commute}");

    report(
        6,
        "operator algebra",
        format!(
            "orthonormality/completeness {max_ortho:.1e}, eigenresiduals {max_eigen:.1e}, exchange exact, sigma_t {sigma_residual:.1e}, commutation {max_commute:.1e}"
        ),
        t0,
        30.0,
    );
}

#[test]
fn criterion_7_dynamics_suite() {
    let t0 = Instant::now();

    // Adler: numeric vs analytic mean frequency.
    let mut max_rel = 0.0f64;
    for ratio in [1.25f64, 1.5, 2.0, 4.0] {
        let params = AdlerParams {
            coupling: 1.0,
            detuning: ratio,
            phi0: 0.1,
        };
        let dt = (1e-2 / ratio.max(1.0)) * 0.8;
        let run = adler_integrate(&params, 500.0, dt).unwrap();
        let analytic = adler_mean_frequency(&params);
        let rel = (run.mean_frequency - analytic).abs() / analytic.abs();
        assert!(rel <= 0.01, "unlocked ratio {ratio}: rel err {rel}");
        max_rel = max_rel.max(rel);
    }
    let mut max_abs = 0.0f64;
    for ratio in [0.0f64, 0.5, 0.9] {
        let params = AdlerParams {
            coupling: 1.0,
            detuning: ratio,
            phi0: 0.1,
        };
        let run = adler_integrate(&params, 500.0, 0.008).unwrap();
        assert!(
            run.mean_frequency.abs() <= 1e-3,
            "locked ratio {ratio}: {}",
            run.mean_frequency
        );
        max_abs = max_abs.max(run.mean_frequency.abs());
    }

    // Rigid rotation reproduces omega.
    for omega in [0.1, 0.3, 0.77] {
        let est = winding_number(&CircleMapParams {
            omega,
            coupling: 0.0,
            phi0: 0.0,
            n_iter: 10_000,
        })
        .unwrap();
        assert!(
            (est.winding - omega).abs() <= 1e-9,
            "rigid rotation at omega={omega}: {}",
            est.winding
        );
    }

    // Staircase monotonicity at c = 0.8.
    let points = staircase(0.8, 0.0, 1.0, 501, 4_000).unwrap();
    for w in points.windows(2) {
        assert!(
            w[1].winding >= w[0].winding - 1e-12,
            "staircase not monotone at omega={}",
            w[1].omega
        );
    }

    // Plateau widths at 1/2 strictly increase with the coupling.
    let half = ReducedFraction::new(1, 2).unwrap();
    let widths: Vec<f64> = [0.2f64, 0.5, 0.9]
        .iter()
        .map(|&c| plateau_width(c, &half, 1e-5, 20_000).unwrap())
        .collect();
    assert!(
        widths[0] > 0.0 && widths[0] < widths[1] && widths[1] < widths[2],
        "widths not strictly increasing: {widths:?}"
    );

    report(
        7,
        "dynamics suite",
        format!(
            "Adler rel err {max_rel:.2e} (unlocked) / abs {max_abs:.2e} (locked); staircase monotone; 1/2-plateau widths {:.4} < {:.4} < {:.4}",
            widths[0], widths[1], widths[2]
        ),
        t0,
        60.0,
    );
}

#[test]
fn criterion_8_zeta_partition_function() {
    let t0 = Instant::now();
    let z2 = zeta_partial(2.0, 10_000).unwrap().real();
    let z4 = zeta_partial(4.0, 10_000).unwrap().real();
    let target2 = std::f64::consts::PI.powi(2) / 6.0;
    let target4 = std::f64::consts::PI.powi(4) / 90.0;
    assert!((z2 - target2).abs() <= 1e-8, "zeta(2): {z2} vs {target2}");
    assert!((z4 - target4).abs() <= 1e-8, "zeta(4): {z4} vs {target4}");
    report(
        8,
        "zeta partition function",
        format!(
            "zeta(2) err {:.1e}, zeta(4) err {:.1e}",
            (z2 - target2).abs(),
            (z4 - target4).abs()
        ),
        t0,
        1.0,
    );
}
