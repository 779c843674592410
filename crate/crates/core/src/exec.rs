//! Sequential / data-parallel execution of the exhaustive searches.
//!
//! Every reduction used by the searches is associative and breaks ties by
//! enumeration index, so results are identical under either strategy and at
//! any worker count.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How an exhaustive enumeration is executed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    /// Rayon work-stealing over the current thread pool. Without the
    /// `parallel` feature this runs sequentially.
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// Map every index in `range` and combine the results with `reduce`.
    pub fn map_reduce<T, M, R>(self, range: Range<u64>, identity: T, map: M, reduce: R) -> T
    where
        T: Send + Sync + Clone,
        M: Fn(u64) -> T + Sync + Send,
        R: Fn(T, T) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => range.into_par_iter().map(map).reduce(|| identity.clone(), &reduce),
            _ => range.map(map).fold(identity, reduce),
        }
    }

    /// Like [`Exec::map_reduce`] over the elements of a slice.
    pub fn map_reduce_slice<S, T, M, R>(self, items: &[S], identity: T, map: M, reduce: R) -> T
    where
        S: Sync,
        T: Send + Sync + Clone,
        M: Fn(usize, &S) -> T + Sync + Send,
        R: Fn(T, T) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().enumerate().map(|(i, s)| map(i, s)).reduce(|| identity.clone(), &reduce),
            _ => items.iter().enumerate().map(|(i, s)| map(i, s)).fold(identity, reduce),
        }
    }

    /// Count the indices in `range` satisfying `pred`.
    pub fn count<P>(self, range: Range<u64>, pred: P) -> u64
    where
        P: Fn(u64) -> bool + Sync + Send,
    {
        self.map_reduce(range, 0u64, |i| pred(i) as u64, |a, b| a + b)
    }

    /// Smallest index in `range` satisfying `pred`.
    pub fn find_first<P>(self, range: Range<u64>, pred: P) -> Option<u64>
    where
        P: Fn(u64) -> bool + Sync + Send,
    {
        self.map_reduce(range, None, |i| pred(i).then_some(i), min_option)
    }

    /// Run `f` inside a pool of `threads` workers (0 = one per core).
    ///
    /// With one thread or without the `parallel` feature, `f` is called
    /// directly with [`Exec::Sequential`].
    pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce(Exec) -> T + Send) -> T {
        #[cfg(feature = "parallel")]
        if threads != 1 {
            let pool =
                rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("failed to build thread pool");
            return pool.install(|| f(Exec::Parallel));
        }
        let _ = threads;
        f(Exec::Sequential)
    }
}

/// Minimum of two options, `None` acting as +∞.
pub fn min_option<T: Ord>(a: Option<T>, b: Option<T>) -> Option<T> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}
