//! Sequential or data-parallel execution of independent work items.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Uses rayon when the `parallel` feature is enabled, sequential otherwise.
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
    /// Results in input order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }

    /// Smallest index in `0..n` satisfying `pred`.
    pub fn find_first<F>(self, n: u64, pred: F) -> Option<u64>
    where
        F: Fn(u64) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => (0..n).into_par_iter().find_first(|&i| pred(i)),
            _ => (0..n).find(|&i| pred(i)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree() {
        let xs: Vec<u64> = (0..100).collect();
        for exec in [Exec::Sequential, Exec::Parallel] {
            assert_eq!(exec.map(&xs, |x| x * x)[7], 49);
            assert_eq!(exec.find_first(1000, |i| i > 10 && i % 7 == 0), Some(14));
            assert_eq!(exec.find_first(10, |_| false), None);
        }
    }
}
