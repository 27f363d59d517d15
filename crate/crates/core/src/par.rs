//! Thin dispatch layer between the rayon-backed code paths and the
//! sequential fallback compiled when the `parallel` feature is off.
//!
//! Every helper preserves element order, so results are identical (not just
//! equivalent) across the two builds.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Run `f` on a pool with the given thread count (`0` = library default).
/// The sequential build runs the closure inline.
pub fn install<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    {
        if threads == 0 {
            f()
        } else {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .expect("thread pool construction failed")
                .install(f)
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        f()
    }
}

/// Order-preserving map over a slice.
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Order-preserving map over `0..n`.
pub fn map_range<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
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

/// Order-preserving flat map over `0..n`.
pub fn flat_map_range<U, F, I>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    I: IntoIterator<Item = U> + Send,
    <I as IntoIterator>::IntoIter: Send,
    F: Fn(usize) -> I + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n)
            .into_par_iter()
            .flat_map_iter(f)
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).flat_map(f).collect()
    }
}

pub fn all<T, F>(items: &[T], f: F) -> bool
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().all(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().all(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn helpers_preserve_order() {
        let xs: Vec<u64> = (0..1000).collect();
        assert_eq!(map(&xs, |&x| x * x), (0..1000).map(|x| x * x).collect::<Vec<u64>>());
        assert_eq!(map_range(5, |i| i + 1), vec![1, 2, 3, 4, 5]);
        assert_eq!(
            flat_map_range(3, |i| vec![i; i]),
            vec![1, 2, 2]
        );
        assert!(all(&xs, |&x| x < 1000));
        assert!(!all(&xs, |&x| x < 999));
    }

    #[test]
    fn install_runs_closure_with_requested_threads() {
        let r = install(2, || map_range(100, |i| i).iter().sum::<usize>());
        assert_eq!(r, 4950);
        let r = install(0, || 7);
        assert_eq!(r, 7);
    }
}
