//! Benchmarks for `cplxinfo`; see `benches/measures.rs`.
