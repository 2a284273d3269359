//! One function per subcommand. Each builds its data through the library,
//! renders it with the pinned formatting, and returns the process exit
//! code.

use std::fmt::Write as _;

use cyclo_core::hilbert::{
    clock_e, galois_twist, lowering_e, mult_shift, number_operator, order_eigenstate,
    phase_operator, phase_state, positive_clock, shift_mu, BasisOrigin, ComplexMatrix,
    StateVector,
};
use cyclo_core::numtheory::{
    arithmetic_value, carmichael, factorize, is_primitive_root, mangoldt, moebius, mult_order,
    ramanujan_sum, totient,
};
use cyclo_core::phaselock::{adler_integrate, adler_mean_frequency, mangoldt_modulated_map,
    staircase, AdlerParams,
};
use cyclo_core::spectral::{
    growth_exponent, loglog_slope, normalized_cumsum, periodogram, RealSeries,
};
use cyclo_core::thermal::thermal_surface;
use serde_json::json;

use crate::args::*;
use crate::output::{emit_json, fmt_f64, resolve_out, write_file, CliError, CliResult, Meta};
use crate::verify;

pub fn numfun(args: NumfunArgs) -> CliResult<i32> {
    let n = args.n;
    let fn_name = |f: NumFn| match f {
        NumFn::Totient => "totient",
        NumFn::Carmichael => "carmichael",
        NumFn::Moebius => "moebius",
        NumFn::Mangoldt => "mangoldt",
        NumFn::Factorize => "factorize",
        NumFn::MultOrder => "mult-order",
        NumFn::PrimitiveRoot => "primitive-root",
        NumFn::Ramanujan => "ramanujan",
        NumFn::All => "all",
    };
    let mut meta = Meta::new("numfun")
        .param("fn", fn_name(args.function))
        .param("n", n);
    if let Some(a) = args.a {
        meta = meta.param("a", a);
    }
    if let Some(q) = args.q {
        meta = meta.param("q", q);
    }

    let need_a = || {
        args.a.ok_or_else(|| {
            CliError::Domain("this function needs --a (the base residue)".into())
        })
    };
    let mut body = json!({ "n": n });
    let obj = body.as_object_mut().expect("object literal");
    obj.insert("fn".into(), fn_name(args.function).into());
    match args.function {
        NumFn::Totient => {
            obj.insert("value".into(), totient(n)?.into());
        }
        NumFn::Carmichael => {
            obj.insert("value".into(), carmichael(n)?.into());
        }
        NumFn::Moebius => {
            obj.insert("value".into(), moebius(n)?.into());
        }
        NumFn::Mangoldt => {
            obj.insert("value".into(), mangoldt(n)?.into());
        }
        NumFn::Factorize => {
            let f = factorize(n)?;
            let factors: Vec<serde_json::Value> =
                f.factors().iter().map(|&(p, k)| json!([p, k])).collect();
            obj.insert("value".into(), factors.into());
        }
        NumFn::MultOrder => {
            let a = need_a()?;
            obj.insert("a".into(), a.into());
            obj.insert("value".into(), mult_order(a, n)?.into());
        }
        NumFn::PrimitiveRoot => {
            let a = need_a()?;
            obj.insert("a".into(), a.into());
            obj.insert("value".into(), is_primitive_root(a, n)?.into());
        }
        NumFn::Ramanujan => {
            let q = args.q.ok_or_else(|| {
                CliError::Domain("ramanujan needs --q (c_q(n))".into())
            })?;
            obj.insert("q".into(), q.into());
            obj.insert("value".into(), ramanujan_sum(q, n)?.into());
        }
        NumFn::All => {
            let v = arithmetic_value(n)?;
            obj.insert("totient".into(), v.totient.into());
            obj.insert("carmichael".into(), v.carmichael.into());
            obj.insert("moebius".into(), v.moebius.into());
            obj.insert("mangoldt".into(), v.mangoldt.into());
        }
    }
    obj.insert("meta".into(), meta.json());
    emit_json(args.out.as_deref(), &body)?;
    Ok(0)
}

fn series_csv(meta: &Meta, columns: (&str, &str), series: &RealSeries) -> String {
    let mut out = meta.csv_header(&format!("{},{}", columns.0, columns.1));
    for (i, &v) in series.samples().iter().enumerate() {
        let _ = writeln!(out, "{},{}", series.index(i), fmt_f64(v));
    }
    out
}

pub fn carmichael_spectrum(args: CarmichaelSpectrumArgs) -> CliResult<i32> {
    let dir = args
        .out_dir
        .clone()
        .unwrap_or_else(crate::output::out_dir);
    let meta = || {
        Meta::new("carmichael-spectrum")
            .param("t_max", args.t_max)
            .param("sigma", args.sigma)
            .param("f_lo", args.f_lo)
            .param("f_hi", args.f_hi)
            .note("fft input: mean-removed normalized series")
    };

    // The closure in normalized_cumsum cannot return Result; validating
    // the top of the range covers every n below it, so the unwraps below
    // cannot fire.
    carmichael(args.t_max).map_err(CliError::from)?;

    let series = normalized_cumsum(|n| carmichael(n).unwrap() as f64, args.t_max, args.sigma)?;
    let spectrum = periodogram(&series)?;
    let fit = loglog_slope(&spectrum, (args.f_lo, args.f_hi))?;

    let mut running = 0.0f64;
    let raw: Vec<f64> = (1..=args.t_max)
        .map(|n| {
            running += carmichael(n).unwrap() as f64;
            running
        })
        .collect();
    let growth = growth_exponent(&RealSeries::new(1, raw)?)?;

    write_file(
        &dir.join("carmichael_series.csv"),
        &series_csv(&meta(), ("t", "value"), &series),
    )?;

    let mut spec_csv = meta().csv_header("freq,power");
    for (f, p) in spectrum.frequencies().iter().zip(spectrum.powers()) {
        let _ = writeln!(spec_csv, "{},{}", fmt_f64(*f), fmt_f64(*p));
    }
    write_file(&dir.join("carmichael_periodogram.csv"), &spec_csv)?;

    let fit_json = json!({
        "meta": meta().json(),
        "exponent": fit.exponent,
        "intercept": fit.intercept,
        "f_lo": fit.band.0,
        "f_hi": fit.band.1,
        "residual_rms": fit.residual_rms,
        "n_points": fit.n_points,
        "n_dropped": fit.n_dropped,
        "growth_exponent": growth,
    });
    emit_json(Some(&dir.join("carmichael_slopefit.json")), &fit_json)?;
    Ok(0)
}

pub fn beta_grid(lo: f64, hi: f64, steps: usize) -> CliResult<Vec<f64>> {
    if steps < 2 || !(lo.is_finite() && hi.is_finite()) || lo >= hi {
        return Err(CliError::Domain(format!(
            "bad beta grid: [{lo}, {hi}] with {steps} steps"
        )));
    }
    Ok((0..steps)
        .map(|i| lo + (hi - lo) * i as f64 / (steps - 1) as f64)
        .collect())
}

pub fn kms_surface(args: KmsSurfaceArgs) -> CliResult<i32> {
    let grid = beta_grid(args.beta_min, args.beta_max, args.beta_steps)?;
    let samples = thermal_surface(args.q_max, &grid)?;
    let mut meta = Meta::new("kms-surface")
        .param("q_max", args.q_max)
        .param("beta_min", args.beta_min)
        .param("beta_max", args.beta_max)
        .param("beta_steps", args.beta_steps)
        .param("gnuplot", args.gnuplot);
    if args.beta_min <= 1.0 {
        meta = meta.note("values with beta <= 1 are closed-form only (unverified-by-oracle)");
    }
    let mut out = meta.csv_header("q,beta,psi");
    let mut current_q = 0u64;
    for s in &samples {
        if args.gnuplot && current_q != 0 && s.q != current_q {
            out.push('\n');
        }
        current_q = s.q;
        let _ = writeln!(out, "{},{},{}", s.q, fmt_f64(s.beta), fmt_f64(s.value));
    }
    write_file(&resolve_out(args.out, "kms_surface.csv"), &out)?;
    Ok(0)
}

pub fn kms_check(args: KmsCheckArgs) -> CliResult<i32> {
    let meta = Meta::new("kms-check")
        .param("q_max", args.q_max)
        .param("n_terms", args.n_terms);
    let report = verify::kms_check_report(args.q_max, args.n_terms)?;
    let pass = report["pass"].as_bool().unwrap_or(false);
    let mut body = report;
    body.as_object_mut()
        .expect("report object")
        .insert("meta".into(), meta.json());
    emit_json(args.out.as_deref(), &body)?;
    Ok(if pass { 0 } else { 1 })
}

pub fn staircase_cmd(args: StaircaseArgs) -> CliResult<i32> {
    let points = staircase(args.c, args.omega_lo, args.omega_hi, args.points, args.n_iter)?;
    let meta = Meta::new("staircase")
        .param("c", args.c)
        .param("omega_lo", args.omega_lo)
        .param("omega_hi", args.omega_hi)
        .param("points", args.points)
        .param("n_iter", args.n_iter);
    let mut out = meta.csv_header("Omega,nu,locked_p,locked_q");
    for p in &points {
        match p.locked_to {
            Some(frac) => {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    fmt_f64(p.omega),
                    fmt_f64(p.winding),
                    frac.numer(),
                    frac.denom()
                );
            }
            None => {
                let _ = writeln!(out, "{},{},,", fmt_f64(p.omega), fmt_f64(p.winding));
            }
        }
    }
    write_file(&resolve_out(args.out, "staircase.csv"), &out)?;
    Ok(0)
}

pub fn adler(args: AdlerArgs) -> CliResult<i32> {
    let params = AdlerParams {
        coupling: args.coupling,
        detuning: args.detuning,
        phi0: args.phi0,
    };
    let run = adler_integrate(&params, args.t_end, args.dt)?;
    let analytic = adler_mean_frequency(&params);

    let meta = Meta::new("adler")
        .param("coupling", args.coupling)
        .param("detuning", args.detuning)
        .param("phi0", args.phi0)
        .param("t_end", args.t_end)
        .param("dt", args.dt);
    let mut out = meta.csv_header("t,phi");
    for (i, &phi) in run.trajectory.samples().iter().enumerate() {
        let _ = writeln!(out, "{},{}", fmt_f64(i as f64 * args.dt), fmt_f64(phi));
    }
    write_file(&resolve_out(args.out, "adler_trajectory.csv"), &out)?;

    let summary = json!({
        "meta": meta.json(),
        "mean_frequency": run.mean_frequency,
        "analytic_mean_frequency": analytic,
        "abs_diff": (run.mean_frequency - analytic).abs(),
    });
    emit_json(None, &summary)?;
    Ok(0)
}

pub fn mangoldt_map(args: MangoldtMapArgs) -> CliResult<i32> {
    let run = mangoldt_modulated_map(args.omega, args.c, args.kappa, args.n_iter)?;
    let meta = || {
        Meta::new("mangoldt-map")
            .param("omega", args.omega)
            .param("c", args.c)
            .param("kappa", args.kappa)
            .param("n_iter", args.n_iter)
    };
    write_file(
        &resolve_out(args.out, "mangoldt_beat.csv"),
        &series_csv(&meta(), ("n", "beat"), &run.beat),
    )?;

    if let Some(spectrum_path) = &args.spectrum {
        let spectrum = periodogram(&run.beat)?;
        let mut out = meta().csv_header("freq,power");
        for (f, p) in spectrum.frequencies().iter().zip(spectrum.powers()) {
            let _ = writeln!(out, "{},{}", fmt_f64(*f), fmt_f64(*p));
        }
        write_file(spectrum_path, &out)?;
    }

    let summary = json!({
        "meta": meta().json(),
        "winding": run.winding.winding,
        "uncertainty": run.winding.uncertainty,
        "overlap_regime": run.winding.overlap_regime,
    });
    emit_json(None, &summary)?;
    Ok(0)
}

fn matrix_csv(meta: &Meta, m: &ComplexMatrix) -> String {
    let mut out = meta.csv_header("row,col,re,im");
    for row in 0..m.dim() {
        for col in 0..m.dim() {
            let v = m.entry(row, col);
            let _ = writeln!(out, "{},{},{},{}", row, col, fmt_f64(v.re), fmt_f64(v.im));
        }
    }
    out
}

fn state_csv(meta: &Meta, s: &StateVector) -> String {
    let mut out = meta.csv_header("row,col,re,im");
    for row in 0..s.dim() {
        let v = s.amplitude(row);
        let _ = writeln!(out, "{},0,{},{}", row, fmt_f64(v.re), fmt_f64(v.im));
    }
    out
}

pub fn operators_verify(args: OperatorsVerifyArgs) -> CliResult<i32> {
    let Some(target) = args.dump else {
        let (report, pass) = verify::run_suite(Suite::Operators)?;
        emit_json(args.out.as_deref(), &report)?;
        return Ok(if pass { 0 } else { 1 });
    };

    let name = |t: DumpTarget| match t {
        DumpTarget::Number => "number",
        DumpTarget::Lowering => "lowering",
        DumpTarget::PhaseOperator => "phase-operator",
        DumpTarget::PhaseState => "phase-state",
        DumpTarget::Mu => "mu",
        DumpTarget::Clock => "clock",
        DumpTarget::OrderState => "order-state",
        DumpTarget::Galois => "galois",
        DumpTarget::MultShift => "mult-shift",
        DumpTarget::PositiveClock => "positive-clock",
    };
    let meta = Meta::new("operators-verify")
        .param("dump", name(target))
        .param("q", args.q)
        .param("a", args.a)
        .param("p", args.p)
        .param("k", args.k)
        .param("t", args.t)
        .param("theta0", args.theta0)
        .param("dim", args.dim);

    let rendered = match target {
        DumpTarget::Number => matrix_csv(&meta, &number_operator(args.dim, BasisOrigin::Zero)?),
        DumpTarget::Lowering => matrix_csv(&meta, &lowering_e(args.dim)?),
        DumpTarget::PhaseOperator => matrix_csv(&meta, &phase_operator(args.q, args.theta0)?),
        DumpTarget::PhaseState => {
            let p = u64::try_from(args.p)
                .map_err(|_| CliError::Domain("phase-state index p must be >= 0".into()))?;
            state_csv(&meta, &phase_state(args.q, p, args.theta0)?)
        }
        DumpTarget::Mu => matrix_csv(&meta, &shift_mu(args.q, args.a)?),
        DumpTarget::Clock => matrix_csv(&meta, &clock_e(args.q, args.p)?),
        DumpTarget::OrderState => state_csv(&meta, &order_eigenstate(args.q, args.a, args.k)?),
        DumpTarget::Galois => matrix_csv(&meta, &galois_twist(args.q, args.t, args.p)?),
        DumpTarget::MultShift => matrix_csv(&meta, &mult_shift(args.dim, args.a)?),
        DumpTarget::PositiveClock => {
            matrix_csv(&meta, &positive_clock(args.dim, args.q, args.p)?)
        }
    };
    let default_name = format!("operator_{}.csv", name(target));
    let path = args
        .out
        .unwrap_or_else(|| crate::output::out_dir().join(default_name));
    write_file(&path, &rendered)?;
    Ok(0)
}

pub fn verify_cmd(args: VerifyArgs) -> CliResult<i32> {
    let (report, pass) = verify::run_suite(args.suite)?;
    emit_json(args.out.as_deref(), &report)?;
    Ok(if pass { 0 } else { 1 })
}
