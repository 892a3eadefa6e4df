//! Criterion benchmarks for the qtsteer workspace. See `benches/`.
