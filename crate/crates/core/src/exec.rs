//! Sequential / parallel execution switch.
//!
//! Every data-parallel loop in the crate goes through [`Exec`], so callers can
//! pin a mode at runtime (benches compare both) while builds without the
//! `parallel` feature silently fall back to the sequential path.

/// How index-parallel loops are executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    /// Uses rayon when the `parallel` feature is enabled, otherwise identical
    /// to [`Exec::Sequential`].
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
    /// Whether this mode actually runs on the rayon pool.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// `(0..len).map(f).collect()`, order preserved.
    pub fn map_range<T, F>(self, len: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return (0..len).into_par_iter().map(f).collect();
        }
        (0..len).map(f).collect()
    }

    /// `items.iter().map(f).collect()`, order preserved.
    pub fn map_slice<S, T, F>(self, items: &[S], f: F) -> Vec<T>
    where
        S: Sync,
        T: Send,
        F: Fn(&S) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    pub fn sum_range<F>(self, len: usize, f: F) -> u64
    where
        F: Fn(usize) -> u64 + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return (0..len).into_par_iter().map(f).sum();
        }
        (0..len).map(f).sum()
    }

    /// True iff `f` holds for every index. Short-circuits in both modes.
    pub fn all_range<F>(self, len: usize, f: F) -> bool
    where
        F: Fn(usize) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return (0..len).into_par_iter().all(f);
        }
        (0..len).all(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        for exec in [Exec::Sequential, Exec::Parallel] {
            assert_eq!(exec.map_range(5, |i| i * i), vec![0, 1, 4, 9, 16]);
            assert_eq!(exec.sum_range(101, |i| i as u64), 5050);
            assert!(exec.all_range(10, |i| i < 10));
            assert!(!exec.all_range(10, |i| i < 9));
            assert_eq!(exec.map_slice(&[1, 2, 3], |x| x + 1), vec![2, 3, 4]);
        }
    }

    #[test]
    fn parallel_flag_tracks_feature() {
        assert!(!Exec::Sequential.is_parallel());
        assert_eq!(Exec::Parallel.is_parallel(), cfg!(feature = "parallel"));
    }
}
