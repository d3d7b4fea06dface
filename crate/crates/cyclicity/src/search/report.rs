//! Persisted census reports.

use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::error::{Error, Result};

/// Deterministic record of a census run. Identical across repeated runs and
/// across worker counts, except for `timings_ms`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub version: String,
    pub params: ReportParams,
    pub config: Config,
    pub pool: ReportPool,
    pub counts: ReportCounts,
    /// Empty survivors in enumeration (lexicographic) order.
    pub survivors: Vec<Survivor>,
    /// Equivalence classes of the survivors, present when deduplication was
    /// requested; ordered by first appearance.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<EquivalenceClass>>,
    pub timings_ms: Timings,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportParams {
    pub p: u64,
    pub dim: usize,
    pub rank: usize,
    pub prune: bool,
    pub dedupe: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportPool {
    pub p: u64,
    pub k: usize,
    pub size: usize,
    pub columns: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportCounts {
    pub candidates_enumerated: u64,
    pub pruned: u64,
    pub oracle_checked: u64,
    pub empty_found: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Survivor {
    /// The block `B`, row by row.
    pub b: Vec<Vec<u64>>,
    /// Indices of all-zero rows of `B` (post-hoc annotation; never a prune).
    pub zero_rows: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceClass {
    /// Canonical lattice basis, rows of decimal strings.
    pub canonical: Vec<Vec<String>>,
    /// Index into `survivors` of the first member.
    pub representative: usize,
    pub size: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub pool: u64,
    pub enumeration: u64,
    pub dedupe: u64,
    pub total: u64,
}

impl SearchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn from_json(input: &str) -> Result<Self> {
        serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))
    }

    /// The report with timings zeroed, for determinism comparisons.
    pub fn without_timings(&self) -> SearchReport {
        let mut clone = self.clone();
        clone.timings_ms = Timings::default();
        clone
    }
}
