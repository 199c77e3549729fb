//! Machine-readable verification reports.
//!
//! Every verification entry point returns a [`VerificationReport`] with a
//! stable JSON shape: `{task, config, universe_count, extremal_value,
//! extremal_graphs, violations, elapsed_ms, seed}` plus the additive keys
//! `exhibits` (findings that are expected outside a theorem's hypothesis,
//! never failures) and `per_n` (one breakdown entry per order scanned).
//!
//! Reports with the same task, ranges, and seed are byte-identical except
//! for `elapsed_ms`, regardless of worker count.

use serde::{Deserialize, Serialize};

/// Echo of the parameters a run was invoked with, embedded in the report so
/// the artifact is self-describing. Only the fields meaningful for the task
/// are present. Worker count is deliberately not echoed: it must not affect
/// results, so it is not part of the run's identity.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ReportConfig {
    pub version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_min: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub universe: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub direction: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight_class: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zero_budget: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eigen_tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tie_tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rayleigh_tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distinctness_tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl ReportConfig {
    pub fn new() -> Self {
        ReportConfig { version: env!("CARGO_PKG_VERSION").to_string(), ..Default::default() }
    }
}

/// One recorded check outcome, with enough data to replay it in isolation:
/// the graph (graph6), what was expected, what was observed, and a numeric
/// gap. Used both for violations (failures) and exhibits (expected
/// non-path ties outside a hypothesis).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Finding {
    pub graph6: String,
    pub expected: String,
    pub actual: String,
    pub gap: f64,
}

/// Per-order breakdown of a sweep.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PerN {
    pub n: usize,
    pub universe_count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extremal_value: Option<f64>,
    pub extremal_graphs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub task: String,
    pub config: ReportConfig,
    /// Distinct graphs (or orders, for per-order tasks) examined once;
    /// randomized tasks rescan this universe per trial.
    pub universe_count: u64,
    /// Extremal value at the largest order scanned (last trial for
    /// randomized tasks); per-order values live in `per_n`.
    pub extremal_value: Option<f64>,
    pub extremal_graphs: Vec<String>,
    pub violations: Vec<Finding>,
    pub elapsed_ms: u64,
    /// Generator seed for randomized tasks, absent otherwise.
    pub seed: Option<u64>,
    pub exhibits: Vec<Finding>,
    pub per_n: Vec<PerN>,
}

impl VerificationReport {
    pub fn new(task: &str, config: ReportConfig) -> Self {
        VerificationReport {
            task: task.to_string(),
            config,
            universe_count: 0,
            extremal_value: None,
            extremal_graphs: vec![],
            violations: vec![],
            elapsed_ms: 0,
            seed: None,
            exhibits: vec![],
            per_n: vec![],
        }
    }

    /// A report passes when nothing was flagged and the scan was non-empty.
    /// Exhibits do not fail a report.
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.universe_count > 0
    }

    /// Canonical JSON rendering (pretty, stable field order).
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
