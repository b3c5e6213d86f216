//! Minimal deterministic work splitting for the counting loops.
//!
//! Thread count defaults to 1 and may be raised by the embedding binary
//! (the CLI caps it with the FSK_THREADS environment variable). Results are
//! sums, so they do not depend on the split.

use std::sync::atomic::{AtomicUsize, Ordering};

static THREADS: AtomicUsize = AtomicUsize::new(1);

/// Set the maximum number of worker threads used by counting loops.
pub fn set_max_threads(t: usize) {
    THREADS.store(t.max(1), Ordering::Relaxed);
}

pub fn max_threads() -> usize {
    THREADS.load(Ordering::Relaxed).max(1)
}

/// Sum `f(item)` over `items`, splitting across up to `max_threads()` scoped
/// threads.
pub fn sum_over<T, F>(items: &[T], f: F) -> u64
where
    T: Sync,
    F: Fn(&T) -> u64 + Sync,
{
    let threads = max_threads().min(items.len().max(1));
    if threads <= 1 || items.len() < 2 {
        return items.iter().map(&f).sum();
    }
    let chunk = items.len().div_ceil(threads);
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| scope.spawn(|| part.iter().map(&f).sum::<u64>()))
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).sum()
    })
}
