//! Structured pass/fail records produced by the verification suites.
//!
//! A report names the claim it checked, the parameters of the sweep, how
//! many instances ran, and a witness for every failing instance. Reports
//! are deterministic functions of their parameters (including the seed),
//! and each witness carries enough to replay the instance by hand.

use std::collections::BTreeMap;

use serde::Serialize;

/// One failing instance: the inputs plus both side values.
#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub inputs: BTreeMap<String, String>,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one verification sweep. `status` is `pass` exactly when
/// `failures` is empty; `total` counts all checked instances.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub params: BTreeMap<String, String>,
    pub total: u64,
    pub failures: Vec<Failure>,
    pub status: Status,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }

    /// Multi-line human rendering: a summary line plus one line per witness.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        out.push_str(&format!(
            "{}: {} ({} checked, {} failed{}{})",
            self.claim,
            if self.passed() { "pass" } else { "FAIL" },
            self.total,
            self.failures.len(),
            if params.is_empty() { "" } else { "; " },
            params.join(", "),
        ));
        for failure in &self.failures {
            let inputs: Vec<String> = failure
                .inputs
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            out.push_str(&format!(
                "\n  witness: {} | expected {} | actual {}",
                inputs.join(", "),
                failure.expected,
                failure.actual
            ));
        }
        out
    }
}

/// Incremental construction of a [`VerificationReport`].
#[derive(Clone, Debug)]
pub struct ReportBuilder {
    claim: String,
    params: BTreeMap<String, String>,
    total: u64,
    failures: Vec<Failure>,
}

impl ReportBuilder {
    pub fn new(claim: impl Into<String>) -> Self {
        ReportBuilder {
            claim: claim.into(),
            params: BTreeMap::new(),
            total: 0,
            failures: Vec::new(),
        }
    }

    pub fn param(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.params.insert(key.into(), value.to_string());
        self
    }

    pub fn set_param(&mut self, key: impl Into<String>, value: impl ToString) {
        self.params.insert(key.into(), value.to_string());
    }

    /// Record one checked instance that passed.
    pub fn pass(&mut self) {
        self.total += 1;
    }

    /// Record one checked instance that failed, with its witness.
    pub fn fail(
        &mut self,
        inputs: impl IntoIterator<Item = (String, String)>,
        expected: impl ToString,
        actual: impl ToString,
    ) {
        self.total += 1;
        self.failures.push(Failure {
            inputs: inputs.into_iter().collect(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    /// Record one instance, choosing pass/fail from an equality check.
    pub fn check(
        &mut self,
        ok: bool,
        inputs: impl IntoIterator<Item = (String, String)>,
        expected: impl ToString,
        actual: impl ToString,
    ) {
        if ok {
            self.pass();
        } else {
            self.fail(inputs, expected, actual);
        }
    }

    pub fn finish(self) -> VerificationReport {
        let status = if self.failures.is_empty() { Status::Pass } else { Status::Fail };
        VerificationReport {
            claim: self.claim,
            params: self.params,
            total: self.total,
            failures: self.failures,
            status,
        }
    }
}

/// Convenience for building witness input maps.
pub fn inputs<const N: usize>(pairs: [(&str, String); N]) -> Vec<(String, String)> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}
