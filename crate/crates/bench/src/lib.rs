//! Criterion benchmarks for `invseq`; see `benches/avoiders.rs`.
