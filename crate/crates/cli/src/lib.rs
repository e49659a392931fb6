//! Harness behind the `nlspectra` binary: per-graph reports, table sweeps
//! over generated graphs and the fixed-degree-sequence experiment.

pub mod compute;
pub mod example1;
pub mod render;
pub mod tables;

use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    /// Bad input: exit code 2.
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Runtime(String),
}

impl HarnessError {
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Input(_) => 2,
            HarnessError::Runtime(_) => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Md,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "md" => Ok(Format::Md),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format `{s}` (csv, md, json)")),
        }
    }
}

/// Maps `f` over `items` in order; `threads == 1` runs serially, otherwise
/// on a dedicated pool of that size (`0` = rayon default).
pub fn ordered_map<T, R, F>(items: &[T], threads: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    if threads == 1 {
        return items.iter().map(f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool");
    pool.install(|| items.par_iter().map(f).collect())
}
