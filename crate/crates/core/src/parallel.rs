//! Index-range data parallelism with a sequential fallback.
//!
//! Without the `parallel` feature every helper runs on the calling thread;
//! [`Execution::Parallel`] then behaves like [`Execution::Sequential`].
//! Results never depend on scheduling: searches return the lowest matching
//! index and reductions must be associative and commutative.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// `f` applied to the lowest index for which it returns `Some`.
pub fn find_map_first<T, F>(range: Range<u64>, exec: Execution, f: F) -> Option<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => range.into_par_iter().find_map_first(f),
        _ => range.into_iter().find_map(f),
    }
}

/// Folds every index into an accumulator and merges the partial results.
pub fn fold_reduce<A, F, R>(range: Range<u64>, exec: Execution, identity: fn() -> A, fold: F, reduce: R) -> A
where
    A: Send,
    F: Fn(A, u64) -> A + Sync + Send,
    R: Fn(A, A) -> A + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => range
            .into_par_iter()
            .fold(identity, &fold)
            .reduce(identity, &reduce),
        _ => {
            let _ = &reduce;
            range.into_iter().fold(identity(), fold)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn find_first_is_lowest_index() {
        for exec in [Execution::Sequential, Execution::Parallel] {
            let hit = find_map_first(0..10_000, exec, |i| (i % 97 == 96).then_some(i));
            assert_eq!(hit, Some(96));
            assert_eq!(find_map_first(0..100, exec, |_| None::<u64>), None);
        }
    }

    #[test]
    fn fold_reduce_matches_between_modes() {
        let sum = |exec| fold_reduce(0..100_000, exec, || 0u64, |acc, i| acc + i * i % 7, |a, b| a + b);
        assert_eq!(sum(Execution::Sequential), sum(Execution::Parallel));
    }
}
