//! Monotone row caches shared by the number tables and polynomial families.
//!
//! Reads take a shared lock; growth takes the exclusive lock and only ever
//! appends. `CFKL_CACHE_MAX` caps how many rows are retained: rows past the
//! cap are computed into a scratch copy and dropped after use.

use std::sync::{Arc, OnceLock, RwLock};

pub(crate) fn cache_cap() -> Option<usize> {
    static CAP: OnceLock<Option<usize>> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("CFKL_CACHE_MAX")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
    })
}

/// Row `n` is produced by `step(n, rows[..n])`.
pub(crate) struct RowCache<T> {
    rows: RwLock<Vec<Arc<T>>>,
    step: fn(usize, &[Arc<T>]) -> T,
}

impl<T> RowCache<T> {
    pub(crate) const fn new(step: fn(usize, &[Arc<T>]) -> T) -> Self {
        RowCache {
            rows: RwLock::new(Vec::new()),
            step,
        }
    }

    pub(crate) fn get(&self, n: usize) -> Arc<T> {
        if let Some(row) = self.rows.read().expect("cache lock").get(n) {
            return row.clone();
        }
        let cap = cache_cap();
        let keep = cap.map_or(n + 1, |c| c.min(n + 1));
        {
            let mut rows = self.rows.write().expect("cache lock");
            while rows.len() < keep {
                let next = (self.step)(rows.len(), &rows);
                rows.push(Arc::new(next));
            }
            if let Some(row) = rows.get(n) {
                return row.clone();
            }
        }
        // Past the cap: extend a scratch copy.
        let mut scratch: Vec<Arc<T>> = self.rows.read().expect("cache lock").clone();
        while scratch.len() <= n {
            let next = (self.step)(scratch.len(), &scratch);
            scratch.push(Arc::new(next));
        }
        scratch.swap_remove(n)
    }

    #[cfg(test)]
    pub(crate) fn len(&self) -> usize {
        self.rows.read().expect("cache lock").len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn squares(n: usize, _prev: &[Arc<u64>]) -> u64 {
        (n * n) as u64
    }

    #[test]
    fn grows_monotonically() {
        let c = RowCache::new(squares);
        assert_eq!(*c.get(5), 25);
        let l = c.len();
        assert!(l >= 1);
        assert_eq!(*c.get(2), 4);
        assert_eq!(c.len(), l);
    }

    #[test]
    fn concurrent_reads_agree() {
        static C: RowCache<u64> = RowCache::new(squares);
        std::thread::scope(|s| {
            for t in 0..8 {
                s.spawn(move || {
                    for n in (0..200).rev().skip(t) {
                        assert_eq!(*C.get(n), (n * n) as u64);
                    }
                });
            }
        });
    }
}
