//! Optional worker pool with order-preserving reductions.

use std::sync::Arc;

use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};

use crate::error::{Error, Result};

/// Either the calling thread alone or a dedicated pool of `k` threads.
///
/// Every reduction returns the same value as the sequential loop.
#[derive(Clone, Default)]
pub enum Workers {
    #[default]
    Sequential,
    Pool(Arc<ThreadPool>),
}

impl Workers {
    pub fn new(count: usize) -> Result<Workers> {
        if count <= 1 {
            return Ok(Workers::Sequential);
        }
        ThreadPoolBuilder::new()
            .num_threads(count)
            .build()
            .map(|p| Workers::Pool(Arc::new(p)))
            .map_err(|e| Error::Workers(e.to_string()))
    }

    pub fn count(&self) -> usize {
        match self {
            Workers::Sequential => 1,
            Workers::Pool(p) => p.current_num_threads(),
        }
    }

    /// First `Some` in item order.
    pub fn find_map_first<T, R, F>(&self, items: &[T], f: F) -> Option<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Option<R> + Sync + Send,
    {
        match self {
            Workers::Sequential => items.iter().find_map(f),
            Workers::Pool(p) => p.install(|| items.par_iter().find_map_first(f)),
        }
    }

    /// `items.map(f)` with results in item order.
    pub fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Workers::Sequential => items.iter().map(f).collect(),
            Workers::Pool(p) => p.install(|| items.par_iter().map(f).collect()),
        }
    }
}

impl std::fmt::Debug for Workers {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Workers({})", self.count())
    }
}
