//! Criterion benchmarks for `logflc-core`; see `benches/core.rs`.
