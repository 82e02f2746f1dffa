//! Shard executors for the enumeration-heavy oracles.
//!
//! Enumerations are split into independent shards; an executor runs the
//! shard closure for every index and returns the results in shard order.
//! Merged results never depend on how shards were scheduled.

use alloc::vec::Vec;

pub trait Executor: Sync {
    fn run<T, F>(&self, shards: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send;
}

/// Runs every shard on the calling thread.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sequential;

impl Executor for Sequential {
    fn run<T, F>(&self, shards: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        (0..shards).map(f).collect()
    }
}
