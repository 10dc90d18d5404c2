//! Empty library crate; the benchmarks live under benches/.
