use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qtsteer_cli::{render, run_sweep, OutputFormat, Preset, SweepConfig};

fn presets(c: &mut Criterion) {
    let mut group = c.benchmark_group("preset");
    group.sample_size(10);
    for name in ["fig1b", "fig2b", "fig5a"] {
        let config = name.parse::<Preset>().unwrap().config();
        group.bench_with_input(BenchmarkId::from_parameter(name), &config, |b, config| {
            b.iter(|| run_sweep(black_box(config)).unwrap())
        });
    }
    group.finish();
}

fn workers(c: &mut Criterion) {
    let base = "fig2c".parse::<Preset>().unwrap().config();
    let mut group = c.benchmark_group("workers");
    group.sample_size(10);
    for n in [1, 4, 8] {
        let config = SweepConfig { workers: n, ..base.clone() };
        group.bench_with_input(BenchmarkId::from_parameter(n), &config, |b, config| {
            b.iter(|| run_sweep(black_box(config)).unwrap())
        });
    }
    group.finish();
}

fn rendering(c: &mut Criterion) {
    let records = run_sweep(&"fig2a".parse::<Preset>().unwrap().config()).unwrap();
    c.bench_function("render/csv", |b| b.iter(|| render(black_box(&records), OutputFormat::Csv)));
    c.bench_function("render/json", |b| b.iter(|| render(black_box(&records), OutputFormat::Json)));
}

criterion_group!(benches, presets, workers, rendering);
criterion_main!(benches);
