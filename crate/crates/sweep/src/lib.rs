//! Deterministic sweep harness for the cuboid polynomial families.
//!
//! Enumerates parameter tuples in a fixed lexicographic order, routes each
//! one through the exact-arithmetic verifiers in `cuboid-core`, and emits one
//! self-contained record per tuple plus a closing summary. Runs are
//! reproducible: the per-tuple splitter seed is derived from the global seed
//! and the tuple index, results are emitted in tuple order regardless of the
//! worker count, and interrupted runs resume from an atomic checkpoint.

pub mod checkpoint;
pub mod config;
pub mod record;
pub mod report;
pub mod runner;
pub mod tasks;

pub use config::{OutputFormat, SweepConfig, Task};
pub use record::{Params, Summary, SweepRecord};
pub use runner::{run, RunOutcome};

/// Errors surfaced by the harness.
#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("invalid configuration: {0}")]
    BadConfig(String),
    #[error("checkpoint does not match this configuration")]
    CheckpointMismatch,
    #[error("checkpointed run is already complete")]
    AlreadyComplete,
    #[error("malformed checkpoint or report: {0}")]
    Malformed(String),
}
