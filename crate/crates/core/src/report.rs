//! JSON artifacts emitted by the command-line interface.
//!
//! Everything except the `timings` block is deterministic for a given
//! configuration; `deterministic_json` zeroes the timings so outputs
//! from runs with different parallelism can be compared byte-for-byte.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::classify::CheckResult;
use crate::maximality::MaximalityVerdict;
use crate::search::SearchReport;

pub const ARTIFACT_VERSION: u32 = 1;

pub type Timings = BTreeMap<String, u128>;

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    s.push('\n');
    s
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchArtifact {
    pub artifact_version: u32,
    pub report: SearchReport,
    /// Wall-clock milliseconds per phase; excluded from deterministic
    /// comparison.
    pub timings: Timings,
}

impl SearchArtifact {
    pub fn new(report: SearchReport, timings: Timings) -> Self {
        SearchArtifact { artifact_version: ARTIFACT_VERSION, report, timings }
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }

    pub fn deterministic_json(&self) -> String {
        let mut copy = self.clone();
        copy.timings = Timings::new();
        to_json(&copy)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InputAssessment {
    pub name: String,
    pub vertices: Vec<[String; 3]>,
    pub lattice_free: bool,
    pub verdict: Option<MaximalityVerdict>,
    pub volume6: Option<String>,
    pub size_bounds_ok: Option<bool>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyArtifact {
    pub artifact_version: u32,
    pub catalog_checks: Vec<CheckResult>,
    pub slice_checks: Vec<CheckResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<InputAssessment>,
    pub all_passed: bool,
    pub timings: Timings,
}

impl VerifyArtifact {
    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassSummary2D {
    pub label: Option<String>,
    pub vertices: Vec<[String; 2]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Classify2dArtifact {
    pub artifact_version: u32,
    pub window: [i64; 2],
    pub margin: i64,
    pub states_visited: usize,
    pub maximal_count: usize,
    pub classes: Vec<ClassSummary2D>,
    pub anomaly_count: usize,
    pub timings: Timings,
}

impl Classify2dArtifact {
    pub fn to_json(&self) -> String {
        to_json(self)
    }
}
