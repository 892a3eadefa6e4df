use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use qtsteer_core::{
    accelerate_closed, accelerate_oracle, decoherence_triple, lqu, steering_report, steering_sum_oracle, Convention,
    Direction, ModelParams, Scenario,
};

fn model(c: &mut Criterion) {
    let params = ModelParams::new(Scenario::Both, 0.25, 0.5);
    c.bench_function("accelerate_closed/both", |b| b.iter(|| accelerate_closed(black_box(&params)).unwrap()));
    c.bench_function("accelerate_oracle/both", |b| b.iter(|| accelerate_oracle(black_box(&params)).unwrap()));
}

fn measures(c: &mut Criterion) {
    let state = accelerate_closed(&ModelParams::new(Scenario::Both, 0.25, 0.5)).unwrap();
    c.bench_function("decoherence_triple", |b| b.iter(|| decoherence_triple(black_box(&state)).unwrap()));
    c.bench_function("lqu", |b| b.iter(|| lqu(black_box(&state)).unwrap()));
    c.bench_function("steering_sum_oracle/ab", |b| {
        b.iter(|| steering_sum_oracle(black_box(&state), Direction::AtoB).unwrap())
    });
    c.bench_function("steering_report", |b| {
        b.iter(|| steering_report(black_box(&state), Convention::AsPrinted).unwrap())
    });
}

criterion_group!(benches, model, measures);
criterion_main!(benches);
