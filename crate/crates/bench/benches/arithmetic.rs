use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use cyclo_core::numtheory::{carmichael, factorize, mangoldt_table, mult_order, ramanujan_sum};

fn bench_factorize(c: &mut Criterion) {
    c.bench_function("factorize 2..4096", |b| {
        b.iter(|| {
            let mut acc = 0u64;
            for n in 2..4096u64 {
                acc ^= factorize(black_box(n)).unwrap().factors().len() as u64;
            }
            acc
        })
    });
}

fn bench_carmichael(c: &mut Criterion) {
    c.bench_function("carmichael 2..2048", |b| {
        b.iter(|| {
            let mut acc = 0u64;
            for n in 2..2048u64 {
                acc ^= carmichael(black_box(n)).unwrap();
            }
            acc
        })
    });
}

fn bench_mult_order(c: &mut Criterion) {
    let q = 3989; // prime
    c.bench_function("mult_order units mod 3989", |b| {
        b.iter(|| {
            let mut acc = 0u64;
            for a in 2..200u64 {
                acc ^= mult_order(black_box(a), q).unwrap();
            }
            acc
        })
    });
}

fn bench_ramanujan(c: &mut Criterion) {
    c.bench_function("ramanujan_sum grid 64x64", |b| {
        b.iter(|| {
            let mut acc = 0i64;
            for q in 1..=64u64 {
                for n in 1..=64u64 {
                    acc ^= ramanujan_sum(black_box(q), black_box(n)).unwrap();
                }
            }
            acc
        })
    });
}

fn bench_mangoldt_table(c: &mut Criterion) {
    c.bench_function("mangoldt_table 2^16", |b| {
        b.iter(|| mangoldt_table(black_box(1 << 16)))
    });
}

criterion_group!(
    benches,
    bench_factorize,
    bench_carmichael,
    bench_mult_order,
    bench_ramanujan,
    bench_mangoldt_table
);
criterion_main!(benches);
