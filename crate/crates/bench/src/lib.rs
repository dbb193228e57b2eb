//! Criterion benchmarks for circlenum-core; see `benches/`.
