//! Benchmark-only crate; see `benches/engine.rs`. The library target exists
//! only so the package has a compilation root.
