//! Deterministic helper for computing independent work items on scoped
//! threads. The worker count is capped by the `ZEONPERM_THREADS`
//! environment variable; results are assembled in index order, so output
//! never depends on scheduling.

use std::env;

pub const THREADS_ENV: &str = "ZEONPERM_THREADS";

pub fn thread_cap() -> usize {
    let available = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    match env::var(THREADS_ENV) {
        Ok(text) => match text.trim().parse::<usize>() {
            Ok(0) | Err(_) => available,
            Ok(cap) => available.min(cap),
        },
        Err(_) => available,
    }
}

/// Apply `f` to every index in 0..count, splitting the range into
/// contiguous chunks over at most `thread_cap()` threads.
pub fn map_indexed<T, F>(count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let workers = thread_cap().min(count.max(1));
    if workers <= 1 || count < 2 {
        return (0..count).map(f).collect();
    }
    let chunk = count.div_ceil(workers);
    let mut out = Vec::with_capacity(count);
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for w in 0..workers {
            let lo = w * chunk;
            let hi = ((w + 1) * chunk).min(count);
            if lo >= hi {
                break;
            }
            let f = &f;
            handles.push(scope.spawn(move || (lo..hi).map(f).collect::<Vec<T>>()));
        }
        for handle in handles {
            out.extend(handle.join().expect("worker panicked"));
        }
    });
    out
}
