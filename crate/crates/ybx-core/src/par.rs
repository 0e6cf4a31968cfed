//! Thin dispatch layer between rayon and plain iterators.
//!
//! Everything in the crate that sweeps an index range goes through these
//! helpers, so the `parallel` feature is the only place where rayon shows
//! up and the sequential fallback stays a one-liner. Sweep items are
//! cheap, so splits are clamped to a handful of chunks per thread to keep
//! the scheduling overhead below the work.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Sweeps shorter than this run inline: forking the pool costs more than
/// the loop itself, and it keeps nested sweeps (a validation inside an
/// enumeration) from flooding the scheduler with micro-tasks.
#[cfg(feature = "parallel")]
const SEQUENTIAL_FLOOR: usize = 1024;

#[cfg(feature = "parallel")]
fn min_chunk(len: usize) -> usize {
    (len / (8 * rayon::current_num_threads().max(1))).max(1)
}

#[cfg(feature = "parallel")]
pub(crate) fn map_indices<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    if len < SEQUENTIAL_FLOOR {
        return (0..len).map(f).collect();
    }
    (0..len)
        .into_par_iter()
        .with_min_len(min_chunk(len))
        .map(f)
        .collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indices<T, F>(len: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..len).map(f).collect()
}

#[cfg(feature = "parallel")]
pub(crate) fn all_indices<F>(len: usize, pred: F) -> bool
where
    F: Fn(usize) -> bool + Sync + Send,
{
    if len < SEQUENTIAL_FLOOR {
        return (0..len).all(pred);
    }
    (0..len)
        .into_par_iter()
        .with_min_len(min_chunk(len))
        .all(pred)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn all_indices<F>(len: usize, pred: F) -> bool
where
    F: Fn(usize) -> bool,
{
    (0..len).all(pred)
}

#[cfg(feature = "parallel")]
pub(crate) fn filter_map_indices<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    if len < SEQUENTIAL_FLOOR {
        return (0..len).filter_map(f).collect();
    }
    (0..len)
        .into_par_iter()
        .with_min_len(min_chunk(len))
        .filter_map(f)
        .collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn filter_map_indices<T, F>(len: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> Option<T>,
{
    (0..len).filter_map(f).collect()
}
