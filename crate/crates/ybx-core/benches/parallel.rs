//! Parallel vs sequential timings for the three data-parallel sweeps:
//! catalog enumeration, braid validation, and the Veronese `ρ` table.
//!
//! "sequential" runs the same code inside a one-thread rayon pool, which
//! is what the library degrades to when built without the `parallel`
//! feature. Run with `cargo bench -p ybx-core`.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use ybx_core::catalog::enumerate_solutions;
use ybx_core::solution::Solution;
use ybx_core::veronese::build_veronese;
use ybx_core::word::Limits;

fn single_thread_pool() -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("pool builds")
}

fn bench_enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_order4");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| black_box(enumerate_solutions(4).unwrap().len()))
    });
    let pool = single_thread_pool();
    group.bench_function("sequential", |b| {
        b.iter(|| pool.install(|| black_box(enumerate_solutions(4).unwrap().len())))
    });
    group.finish();
}

fn bench_validate(c: &mut Criterion) {
    let s = Solution::trivial(64);
    let mut group = c.benchmark_group("validate_order64");
    group.bench_function("parallel", |b| {
        b.iter(|| black_box(s.validate().is_solution))
    });
    let pool = single_thread_pool();
    group.bench_function("sequential", |b| {
        b.iter(|| pool.install(|| black_box(s.validate().is_solution)))
    });
    group.finish();
}

fn bench_veronese(c: &mut Criterion) {
    let s = Solution::trivial(6);
    let limits = Limits::default();
    let mut group = c.benchmark_group("veronese_n6_d3");
    group.sample_size(20);
    group.bench_function("parallel", |b| {
        b.iter(|| black_box(build_veronese(&s, 3, limits).unwrap().order()))
    });
    let pool = single_thread_pool();
    group.bench_function("sequential", |b| {
        b.iter(|| pool.install(|| black_box(build_veronese(&s, 3, limits).unwrap().order())))
    });
    group.finish();
}

criterion_group!(benches, bench_enumerate, bench_validate, bench_veronese);
criterion_main!(benches);
