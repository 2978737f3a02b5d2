use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use symstoch::conjectures::{check_vertex_ideal, ConjectureOptions};
use symstoch::graphfactor::decompose_batch;
use symstoch::par::Strategy;
use symstoch::suite::{sample_points, SUITE_SEED};
use symstoch::symmat::{count_series, Family};

const STRATEGIES: [(&str, Strategy); 2] = [
    ("sequential", Strategy::Sequential),
    ("parallel", Strategy::Parallel),
];

fn counts(c: &mut Criterion) {
    let mut g = c.benchmark_group("count_series_S5_m12");
    for (name, s) in STRATEGIES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| count_series(5, Family::S, 12, s))
        });
    }
    g.finish();
}

fn decompositions(c: &mut Criterion) {
    let pts = sample_points(4, 3, 400, SUITE_SEED).expect("3S_4 sample");
    let mut g = c.benchmark_group("decompose_3S4_x400");
    for (name, s) in STRATEGIES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| decompose_batch(&pts, s).expect("decomposable"))
        });
    }
    g.finish();
}

fn vertex_sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("vertex_ideal_sweep_n3");
    g.sample_size(10);
    for (name, s) in STRATEGIES {
        let opts = ConjectureOptions {
            strategy: s,
            ..ConjectureOptions::default()
        };
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| check_vertex_ideal(3, &opts).expect("n = 3 sweep"))
        });
    }
    g.finish();
}

criterion_group!(benches, counts, decompositions, vertex_sweep);
criterion_main!(benches);
