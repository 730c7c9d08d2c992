//! One-thread pool against rayon's default pool on the hot paths.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rayon::ThreadPoolBuilder;
use starconf::decomp::resurgence_scan;
use starconf::resolution::{hb_matrix, maximal_minors};
use starconf::star::symbolic_power;
use starconf::{Limits, StarConfig};

fn pools() -> Vec<(&'static str, rayon::ThreadPool)> {
    vec![
        (
            "sequential",
            ThreadPoolBuilder::new().num_threads(1).build().unwrap(),
        ),
        ("parallel", ThreadPoolBuilder::new().build().unwrap()),
    ]
}

fn bench_symbolic_power(c: &mut Criterion) {
    let mut group = c.benchmark_group("symbolic_power_s6_c3_l8");
    let cfg = StarConfig::new(6, 3).unwrap();
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| symbolic_power(&cfg, 8).unwrap()))
        });
    }
    group.finish();
}

fn bench_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("resurgence_scan_s4_c2_m20_r8");
    group.sample_size(10);
    let cfg = StarConfig::new(4, 2).unwrap();
    let limits = Limits::default();
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| resurgence_scan(&cfg, 20, 8, &limits).unwrap()))
        });
    }
    group.finish();
}

fn bench_minors(c: &mut Criterion) {
    let mut group = c.benchmark_group("maximal_minors_s5_m3");
    group.sample_size(10);
    let m = hb_matrix(5, 3).unwrap();
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| maximal_minors(&m).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_symbolic_power, bench_scan, bench_minors);
criterion_main!(benches);
