//! Sequential or data-parallel evaluation of independent queries.
//!
//! Every top-level query owns its memo store, so batches of (genus, d)
//! computations are embarrassingly parallel and scheduling cannot change
//! any value. With the `parallel` feature disabled, `Parallel` degrades to
//! the sequential path.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

impl ExecMode {
    /// The preferred mode for batch work under the current build.
    pub fn preferred() -> Self {
        if cfg!(feature = "parallel") {
            ExecMode::Parallel
        } else {
            ExecMode::Sequential
        }
    }
}

/// Map `f` over `items`, preserving input order in the output.
pub fn map_collect<T, U, F>(mode: ExecMode, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Send + Sync,
{
    match mode {
        ExecMode::Sequential => items.into_iter().map(f).collect(),
        ExecMode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                items.into_par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                items.into_iter().map(f).collect()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let input: Vec<u32> = (0..100).collect();
        let seq = map_collect(ExecMode::Sequential, input.clone(), |x| x * x);
        let par = map_collect(ExecMode::Parallel, input, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq[10], 100);
    }
}
