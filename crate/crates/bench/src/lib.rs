//! Criterion benchmarks for pairdom live in `benches/`.
