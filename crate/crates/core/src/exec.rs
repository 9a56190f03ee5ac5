//! Deterministic work mapping. Output order always follows input order, so
//! downstream reports are byte-identical for any worker count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps f over items. jobs = 1 forces sequential evaluation, jobs = 0 uses
/// the default worker pool, and any other count runs a dedicated pool of
/// that size. Builds without the `parallel` feature always run
/// sequentially regardless of jobs.
pub fn map_ordered<T, U, F>(items: Vec<T>, jobs: usize, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        match jobs {
            1 => items.into_iter().map(f).collect(),
            0 => items.into_par_iter().map(f).collect(),
            k => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
                Ok(pool) => pool.install(|| items.into_par_iter().map(f).collect()),
                Err(_) => items.into_iter().map(f).collect(),
            },
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = jobs;
        items.into_iter().map(f).collect()
    }
}
