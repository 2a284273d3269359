use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use cyclo_core::thermal::{
    dirichlet_oracle, kms_expectation, thermal_surface, zeta_partial, ReducedFraction,
};

fn bench_surface(c: &mut Criterion) {
    let betas: Vec<f64> = (0..41).map(|i| 0.5 + i as f64 / 40.0).collect();
    c.bench_function("thermal_surface 40x41", |b| {
        b.iter(|| thermal_surface(black_box(40), black_box(&betas)).unwrap())
    });
}

fn bench_kms_expectation(c: &mut Criterion) {
    let frac = ReducedFraction::new(1, 360).unwrap();
    c.bench_function("kms_expectation q=360", |b| {
        b.iter(|| kms_expectation(black_box(&frac), black_box(1.7)).unwrap())
    });
}

fn bench_zeta(c: &mut Criterion) {
    c.bench_function("zeta_partial beta=1.5 N=1e5", |b| {
        b.iter(|| zeta_partial(black_box(1.5), black_box(100_000)).unwrap())
    });
}

fn bench_oracle(c: &mut Criterion) {
    let frac = ReducedFraction::new(1, 12).unwrap();
    c.bench_function("dirichlet_oracle q=12 N=1e4", |b| {
        b.iter(|| dirichlet_oracle(black_box(&frac), black_box(2.0), black_box(10_000)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_surface,
    bench_kms_expectation,
    bench_zeta,
    bench_oracle
);
criterion_main!(benches);
