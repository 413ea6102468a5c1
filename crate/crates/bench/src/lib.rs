//! Benchmarks for `kacspec-core`; see `benches/`.
