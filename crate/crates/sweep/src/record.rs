use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// The parameter tuple of one work item.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Params {
    Pair { a: u64, u: u64 },
    PqPair { p: u64, q: u64 },
    Triple { a: u64, b: u64, u: u64 },
    Identity { identity: String },
}

impl Params {
    /// Compact single-cell form for CSV and human-readable listings.
    pub fn cell(&self) -> String {
        match self {
            Params::Pair { a, u } => format!("a={a};u={u}"),
            Params::PqPair { p, q } => format!("p={p};q={q}"),
            Params::Triple { a, b, u } => format!("a={a};b={b};u={u}"),
            Params::Identity { identity } => identity.clone(),
        }
    }
}

/// One self-contained result: everything needed to re-check the tuple
/// without the run's context.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub parameters: Params,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    pub status: String,
    pub certificate: String,
    pub roots: Vec<String>,
    pub millis: u64,
    pub seed: u64,
}

impl SweepRecord {
    /// True when this record falsifies a conjecture or exhibits a
    /// perfect-cuboid witness — the scientifically interesting outcome.
    pub fn is_counterexample(&self) -> bool {
        matches!(
            self.status.as_str(),
            "reducible" | "special_identity_failed" | "special_cofactor_reducible"
                | "cuboid_witness" | "failed"
        )
    }
}

/// Closing totals for a run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub task: String,
    pub max: u64,
    /// Grid points scanned (before filters).
    pub grid: u64,
    /// Tuples that passed all filters; equals the number of records and the
    /// sum of `status_totals`.
    pub enumerated: u64,
    pub skipped: BTreeMap<String, u64>,
    pub status_totals: BTreeMap<String, u64>,
    pub counterexamples: Vec<String>,
    pub wall_millis: u64,
}

impl Summary {
    pub fn new(task: &str, max: u64, grid: u64) -> Self {
        Summary {
            task: task.to_string(),
            max,
            grid,
            enumerated: 0,
            skipped: BTreeMap::new(),
            status_totals: BTreeMap::new(),
            counterexamples: Vec::new(),
            wall_millis: 0,
        }
    }

    pub fn count_skip(&mut self, reason: &str) {
        *self.skipped.entry(reason.to_string()).or_insert(0) += 1;
    }

    pub fn count_record(&mut self, record: &SweepRecord) {
        self.enumerated += 1;
        *self
            .status_totals
            .entry(record.status.clone())
            .or_insert(0) += 1;
        if record.is_counterexample() {
            self.counterexamples
                .push(format!("{}:{}", record.parameters.cell(), record.status));
        }
    }

    /// Exit code contract: 0 all verified, 2 counterexample found.
    pub fn exit_code(&self) -> i32 {
        if self.counterexamples.is_empty() {
            0
        } else {
            2
        }
    }
}
