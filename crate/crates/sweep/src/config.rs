use std::fmt;
use std::path::PathBuf;

use sha2::{Digest, Sha256};

use crate::SweepError;

/// What a run verifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Task {
    /// Irreducibility of the degree-8 cofactor over coprime pairs `a ≠ u`.
    Conjecture1,
    /// Irreducibility of the degree-10 cofactor over coprime pairs `p ≠ q`.
    Conjecture2,
    /// Irreducibility of the degree-12 polynomial over coprime triples,
    /// with special cases routed to their closed-form identities.
    Conjecture3,
    /// Rational-solution search: no root may satisfy the cuboid inequalities.
    Theorem41,
    /// The six symbolic edge/diagonal identities.
    Identities,
}

impl Task {
    pub fn name(&self) -> &'static str {
        match self {
            Task::Conjecture1 => "conjecture1",
            Task::Conjecture2 => "conjecture2",
            Task::Conjecture3 => "conjecture3",
            Task::Theorem41 => "theorem41",
            Task::Identities => "identities",
        }
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Jsonl,
    Csv,
}

impl OutputFormat {
    pub fn name(&self) -> &'static str {
        match self {
            OutputFormat::Jsonl => "jsonl",
            OutputFormat::Csv => "csv",
        }
    }
}

/// Full description of a run. The content hash covers everything that
/// affects the record set — task, bound, seed, prime budget, format — but
/// not the worker count or file paths, so a resumed run may use different
/// parallelism.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub task: Task,
    pub max: u64,
    pub prime_budget: usize,
    pub seed: u64,
    pub workers: usize,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
    pub checkpoint: Option<PathBuf>,
    pub resume: bool,
    /// Stop cleanly after this many records (checkpoint stays resumable).
    pub halt_after: Option<u64>,
}

impl SweepConfig {
    pub fn new(task: Task, max: u64) -> Self {
        SweepConfig {
            task,
            max,
            prime_budget: cuboid_core::zirred::DEFAULT_PRIME_BUDGET,
            seed: 1,
            workers: 1,
            out: None,
            format: OutputFormat::Jsonl,
            checkpoint: None,
            resume: false,
            halt_after: None,
        }
    }

    pub fn validate(&self) -> Result<(), SweepError> {
        if self.max < 1 {
            return Err(SweepError::BadConfig("--max must be at least 1".into()));
        }
        if self.workers < 1 {
            return Err(SweepError::BadConfig("--workers must be at least 1".into()));
        }
        if self.checkpoint.is_some() && self.out.is_none() {
            return Err(SweepError::BadConfig(
                "--checkpoint requires --out (resume rewrites the report file)".into(),
            ));
        }
        if self.resume && self.checkpoint.is_none() {
            return Err(SweepError::BadConfig("--resume requires --checkpoint".into()));
        }
        Ok(())
    }

    /// Hash of the scientific content of the configuration.
    pub fn content_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(
            format!(
                "task={};max={};seed={};prime_budget={};format={}",
                self.task.name(),
                self.max,
                self.seed,
                self.prime_budget,
                self.format.name()
            )
            .as_bytes(),
        );
        let digest = h.finalize();
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}
