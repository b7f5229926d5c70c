//! Data-parallel execution helpers.
//!
//! Hot loops (pair sampling, grid sweeps, batch rate checks) are expressed as
//! index-wise maps. With the `parallel` feature (default) they run on rayon;
//! without it they fall back to a plain sequential loop. The sequential
//! variants are always available so the bench suite can compare both paths.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over `0..n`, collecting results in index order.
/// Runs on the rayon pool when the `parallel` feature is enabled.
pub fn par_map_indexed<U: Send>(n: usize, f: impl Fn(usize) -> U + Sync) -> Vec<U> {
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        seq_map_indexed(n, f)
    }
}

/// Sequential reference for [`par_map_indexed`].
pub fn seq_map_indexed<U>(n: usize, f: impl Fn(usize) -> U) -> Vec<U> {
    (0..n).map(f).collect()
}

/// True when all items satisfy `f`; parallel when the feature is enabled.
pub fn par_all(n: usize, f: impl Fn(usize) -> bool + Sync) -> bool {
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().all(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).all(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_sequential_agree() {
        let f = |i: usize| (i as f64).sqrt().sin();
        assert_eq!(par_map_indexed(1000, f), seq_map_indexed(1000, f));
    }
}
