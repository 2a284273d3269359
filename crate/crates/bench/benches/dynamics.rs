use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use cyclo_bench::carmichael_series;
use cyclo_core::phaselock::{
    adler_integrate, mangoldt_modulated_map, winding_number, AdlerParams, CircleMapParams,
};
use cyclo_core::spectral::{loglog_slope, periodogram};

fn bench_winding(c: &mut Criterion) {
    let params = CircleMapParams {
        omega: 0.4,
        coupling: 0.8,
        phi0: 0.0,
        n_iter: 100_000,
    };
    c.bench_function("winding_number 1e5 iterations", |b| {
        b.iter(|| winding_number(black_box(&params)).unwrap())
    });
}

fn bench_adler(c: &mut Criterion) {
    let params = AdlerParams {
        coupling: 1.0,
        detuning: 2.0,
        phi0: 0.1,
    };
    c.bench_function("adler_integrate t=100 dt=0.004", |b| {
        b.iter(|| adler_integrate(black_box(&params), 100.0, 0.004).unwrap())
    });
}

fn bench_modulated(c: &mut Criterion) {
    c.bench_function("mangoldt_modulated_map 2^14", |b| {
        b.iter(|| mangoldt_modulated_map(0.5, 0.5, 0.5, black_box(1 << 14)).unwrap())
    });
}

fn bench_spectral_pipeline(c: &mut Criterion) {
    let series = carmichael_series(1 << 12, 1.90);
    c.bench_function("periodogram + slope fit 2^12", |b| {
        b.iter(|| {
            let p = periodogram(black_box(&series)).unwrap();
            loglog_slope(&p, (0.0, 0.5)).unwrap()
        })
    });
}

criterion_group!(
    benches,
    bench_winding,
    bench_adler,
    bench_modulated,
    bench_spectral_pipeline
);
criterion_main!(benches);
