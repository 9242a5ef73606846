//! Machine-readable check reports.
//!
//! Reports are byte-deterministic for a fixed seed apart from `elapsed_ms`:
//! details live in a `serde_json::Map` (BTree-backed, sorted keys) and every
//! check emits its assertions in a fixed order.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub status: CheckStatus,
    pub details: Map<String, Value>,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    /// The report with timing zeroed, for byte-determinism comparisons.
    pub fn without_timing(&self) -> CheckReport {
        CheckReport {
            elapsed_ms: 0,
            ..self.clone()
        }
    }
}

/// Collects assertions and details for one check.
pub struct ReportBuilder {
    check_id: String,
    seed: Option<u64>,
    details: Map<String, Value>,
    failures: Vec<String>,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(check_id: &str, seed: Option<u64>) -> ReportBuilder {
        ReportBuilder {
            check_id: check_id.into(),
            seed,
            details: Map::new(),
            failures: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn detail(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.into(), value.into());
    }

    /// Record an assertion outcome: the detail key gets the observed value,
    /// and a failed assertion flips the final status.
    pub fn assert_true(&mut self, key: &str, ok: bool) {
        self.details.insert(key.into(), json!(ok));
        if !ok {
            self.failures.push(key.into());
        }
    }

    pub fn assert_eq<T: PartialEq + std::fmt::Debug + Into<Value> + Clone>(
        &mut self,
        key: &str,
        got: T,
        expected: T,
    ) {
        let ok = got == expected;
        self.details.insert(key.into(), got.clone().into());
        if !ok {
            self.failures
                .push(format!("{key}: got {got:?}, expected {expected:?}"));
        }
    }

    pub fn finish(mut self) -> CheckReport {
        let status = if self.failures.is_empty() {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        if !self.failures.is_empty() {
            self.details
                .insert("failed_assertions".into(), json!(self.failures));
        }
        CheckReport {
            check_id: self.check_id,
            status,
            details: self.details,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
            seed: self.seed,
        }
    }

    /// Convert an operational error into an error-status report.
    pub fn finish_error(mut self, err: &crate::Error) -> CheckReport {
        self.details.insert("error".into(), json!(err.to_string()));
        CheckReport {
            check_id: self.check_id,
            status: CheckStatus::Error,
            details: self.details,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
            seed: self.seed,
        }
    }
}

/// Wrap a negative control: the meta-report passes exactly when the inner
/// corrupted variant does not pass.
pub fn negative_control(check_id: &str, inner: CheckReport) -> CheckReport {
    let mut details = Map::new();
    details.insert("inner_check".into(), json!(inner.check_id));
    details.insert(
        "inner_status".into(),
        serde_json::to_value(inner.status).expect("status serializes"),
    );
    if let Some(list) = inner.details.get("failed_assertions") {
        details.insert("inner_failed_assertions".into(), list.clone());
    }
    if let Some(err) = inner.details.get("error") {
        details.insert("inner_error".into(), err.clone());
    }
    let status = if inner.passed() {
        CheckStatus::Fail
    } else {
        CheckStatus::Pass
    };
    CheckReport {
        check_id: check_id.into(),
        status,
        details,
        elapsed_ms: inner.elapsed_ms,
        seed: inner.seed,
    }
}
