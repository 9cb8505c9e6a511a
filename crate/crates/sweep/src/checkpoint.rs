//! Atomic run checkpoints: progress plus the partial summary, guarded by a
//! hash of the configuration so a resume cannot silently mix runs.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::SweepError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Checkpoint {
    pub config_hash: String,
    /// First grid index not yet covered by the report file.
    pub next_index: u64,
    /// Records durably present in the report file.
    pub records: u64,
    pub skipped: BTreeMap<String, u64>,
    pub status_totals: BTreeMap<String, u64>,
    pub counterexamples: Vec<String>,
    pub complete: bool,
}

/// Write-temp-then-rename so a kill can never leave a torn checkpoint.
pub fn save(path: &Path, checkpoint: &Checkpoint) -> Result<(), SweepError> {
    let tmp = path.with_extension("tmp");
    let body = serde_json::to_string_pretty(checkpoint)
        .map_err(|e| SweepError::Malformed(e.to_string()))?;
    fs::write(&tmp, body)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

pub fn load(path: &Path) -> Result<Checkpoint, SweepError> {
    let body = fs::read_to_string(path)?;
    serde_json::from_str(&body).map_err(|e| SweepError::Malformed(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ck.json");
        let ck = Checkpoint {
            config_hash: "abc".into(),
            next_index: 42,
            records: 17,
            skipped: [("not_coprime".to_string(), 5u64)].into_iter().collect(),
            status_totals: [("irreducible".to_string(), 17u64)].into_iter().collect(),
            counterexamples: vec![],
            complete: false,
        };
        save(&path, &ck).unwrap();
        let loaded = load(&path).unwrap();
        assert_eq!(loaded.next_index, 42);
        assert_eq!(loaded.records, 17);
        assert!(!loaded.complete);
    }
}
