//! Worker pool sized by `BRAIDET_THREADS`.

use rayon::ThreadPool;

use crate::{Error, Result};

pub const THREADS_VAR: &str = "BRAIDET_THREADS";

/// Builds the pool used by every parallel command. An unset variable leaves
/// the choice to rayon; `0` or a non-number is an input error.
pub fn thread_pool() -> Result<ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(raw) = std::env::var(THREADS_VAR) {
        let threads: usize = raw
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Error::Input(format!("{THREADS_VAR}={raw:?} is not a positive integer")))?;
        builder = builder.num_threads(threads);
    }
    builder
        .build()
        .map_err(|e| Error::Input(format!("cannot start worker pool: {e}")))
}
