//! Data-parallel helpers.
//!
//! With the default `parallel` feature the per-degree loops fan out over
//! rayon; without it the same helpers run sequentially, so the crate builds
//! and behaves identically with `--no-default-features`.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over the inclusive range, in parallel when enabled.
#[cfg(feature = "parallel")]
pub(crate) fn map_range<T, F>(lo: i64, hi: i64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(i64) -> T + Sync + Send,
{
    (lo..=hi).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_range<T, F>(lo: i64, hi: i64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(i64) -> T + Sync + Send,
{
    (lo..=hi).map(f).collect()
}

/// Always-sequential twin of `map_range`; the reference path for the
/// benchmark suite and the parallel-consistency tests.
pub(crate) fn map_range_seq<T, F>(lo: i64, hi: i64, f: F) -> Vec<T>
where
    F: Fn(i64) -> T,
{
    (lo..=hi).map(f).collect()
}
