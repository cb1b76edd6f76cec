//! Criterion benchmarks for the hot paths of `multicirc`; see `benches/`.
