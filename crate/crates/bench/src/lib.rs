//! Criterion benchmarks for the `g2skein` crate; see `benches/`.
