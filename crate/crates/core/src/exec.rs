//! Execution policy: data-parallel loops on rayon when the `parallel`
//! feature is enabled, plain sequential loops otherwise.
//!
//! Every parallel site in this crate is an order-preserving map over an
//! index range (results are collected by index, reductions happen after
//! the map), so parallel and sequential runs produce bit-identical output.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over `0..n`, collecting results in index order.
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Sequential reference implementation of [`map_indexed`]. Used by the
/// benchmark suite to compare against the parallel path.
pub fn map_indexed_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

/// Cap the global rayon pool from the `RISKOPT_THREADS` env var.
///
/// Call once at process start, before any parallel work. Ignored (returns
/// an error from rayon) if a global pool already exists; no-op when the
/// variable is unset, invalid, or the crate was built without `parallel`.
pub fn init_threads_from_env() {
    #[cfg(feature = "parallel")]
    {
        if let Ok(v) = std::env::var("RISKOPT_THREADS") {
            if let Ok(n) = v.trim().parse::<usize>() {
                if n >= 1 {
                    let _ = rayon::ThreadPoolBuilder::new()
                        .num_threads(n)
                        .build_global();
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_indexed_preserves_order() {
        let out = map_indexed(1000, |i| i * i);
        let expected: Vec<usize> = (0..1000).map(|i| i * i).collect();
        assert_eq!(out, expected);
    }

    #[test]
    fn sequential_and_default_agree() {
        let f = |i: usize| (i as f64).sin() * (i as f64 + 0.5).ln();
        let a = map_indexed(512, f);
        let b = map_indexed_seq(512, f);
        assert_eq!(a, b);
    }
}
