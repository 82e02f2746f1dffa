use nullideal_core::Executor;
use rayon::prelude::*;

/// Runs shards on a rayon pool; results come back in shard order.
#[derive(Debug, Default)]
pub struct Rayon {
    pool: Option<rayon::ThreadPool>,
}

impl Rayon {
    /// `None` uses the global pool.
    pub fn new(jobs: Option<usize>) -> Result<Self, rayon::ThreadPoolBuildError> {
        let pool = match jobs {
            Some(n) => Some(rayon::ThreadPoolBuilder::new().num_threads(n).build()?),
            None => None,
        };
        Ok(Rayon { pool })
    }
}

impl Executor for Rayon {
    fn run<T: Send, F: Fn(usize) -> T + Sync + Send>(&self, shards: usize, f: F) -> Vec<T> {
        let go = || (0..shards).into_par_iter().map(&f).collect();
        match &self.pool {
            Some(pool) => pool.install(go),
            None => go(),
        }
    }
}
