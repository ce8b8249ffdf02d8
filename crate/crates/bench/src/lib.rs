//! Criterion benchmarks for the scan and search loops; see `benches/`.
