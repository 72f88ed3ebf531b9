//! Criterion benchmarks for the counting, series, Riordan and bijection engines.
