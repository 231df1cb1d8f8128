//! Sequential or data-parallel execution of independent work items.

/// How to run a batch of independent jobs. `Parallel` uses rayon when the
/// `parallel` feature is compiled in and silently degrades to sequential
/// otherwise.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// Whether jobs will actually run on a thread pool.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Maps `f` over `items`, preserving order.
    pub fn map_collect<T, R, F>(self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
        items.into_iter().map(f).collect()
    }

    /// Maps `f` over `items` and folds with an associative `combine`.
    pub fn map_reduce<T, R, F, C>(self, items: Vec<T>, identity: R, f: F, combine: C) -> R
    where
        T: Send,
        R: Send + Sync + Clone,
        F: Fn(T) -> R + Sync + Send,
        C: Fn(R, R) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).reduce(|| identity.clone(), &combine);
        }
        items.into_iter().map(f).fold(identity, combine)
    }
}
