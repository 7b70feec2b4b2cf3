use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One verified statement: what was expected, what was computed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub anchor: String,
    pub params: Value,
    pub expected: Value,
    pub computed: Value,
    pub status: Status,
    pub millis: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckReport {
    /// Passes iff `expected == computed`.
    pub fn compare(check: &str, anchor: &str, params: Value, expected: Value, computed: Value) -> Self {
        let status = if expected == computed { Status::Pass } else { Status::Fail };
        CheckReport {
            check: check.to_string(),
            anchor: anchor.to_string(),
            params,
            expected,
            computed,
            status,
            millis: 0,
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.passed())
}

/// Deliberate corruption of a differential, used to check that the
/// verifiers actually fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    SignFlip,
}
