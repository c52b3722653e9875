use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use solweights::catalog::table::Spec;
use solweights::catalog::System;
use solweights::par::{self, Mode};
use solweights::weights::summary::class_counts;
use solweights::weights::{m_summary, WeightStore};

const MODES: [(&str, Mode); 2] = [("parallel", Mode::Parallel), ("sequential", Mode::Sequential)];

fn row_batch(c: &mut Criterion) {
    let keys: Vec<_> = Spec::rows_at(0, System::H).into_iter().map(|s| (s, System::H, 0)).collect();
    let mut g = c.benchmark_group("rows_H_l0");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            par::set_mode(mode);
            b.iter(|| WeightStore::new().rows(&keys).unwrap())
        });
    }
    g.finish();
}

fn class_count(c: &mut Criterion) {
    let mut g = c.benchmark_group("class_counts_l2");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            par::set_mode(mode);
            b.iter(|| class_counts(&WeightStore::new(), 2).unwrap())
        });
    }
    g.finish();
}

fn weight_rows(c: &mut Criterion) {
    let mut g = c.benchmark_group("weights");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(BenchmarkId::new("row_S_H_l1", name), |b| {
            par::set_mode(mode);
            b.iter(|| WeightStore::new().row(Spec::S, System::H, 1).unwrap())
        });
        g.bench_function(BenchmarkId::new("m_F_l0", name), |b| {
            par::set_mode(mode);
            b.iter(|| m_summary(&WeightStore::new(), System::F, 0).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, row_batch, class_count, weight_rows);
criterion_main!(benches);
