use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use cyclo_bench::units;
use cyclo_core::hilbert::{
    evolve_sigma_t, mult_shift, order_eigenstate, phase_operator, shift_mu,
};

fn bench_phase_operator(c: &mut Criterion) {
    c.bench_function("phase_operator q=32", |b| {
        b.iter(|| phase_operator(black_box(32), 0.0).unwrap())
    });
}

fn bench_shift_product(c: &mut Criterion) {
    let q = 61;
    let mu_a = shift_mu(q, 2).unwrap();
    let mu_b = shift_mu(q, 7).unwrap();
    c.bench_function("shift_mu product q=61", |b| {
        b.iter(|| black_box(&mu_a).matmul(black_box(&mu_b)))
    });
}

fn bench_order_eigenstates(c: &mut Criterion) {
    let q = 31;
    let residues = units(q);
    c.bench_function("order eigenstates q=31 all units", |b| {
        b.iter(|| {
            let mut acc = 0usize;
            for &a in &residues {
                acc += order_eigenstate(black_box(q), a, 0).unwrap().dim();
            }
            acc
        })
    });
}

fn bench_evolution(c: &mut Criterion) {
    let m = mult_shift(128, 3).unwrap();
    c.bench_function("evolve_sigma_t dim=128", |b| {
        b.iter(|| evolve_sigma_t(black_box(&m), black_box(1.3)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_phase_operator,
    bench_shift_product,
    bench_order_eigenstates,
    bench_evolution
);
criterion_main!(benches);
