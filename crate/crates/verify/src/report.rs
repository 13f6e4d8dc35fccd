//! Machine-readable verification records.

use dqspec_core::{to_graph6, Graph};
use serde::Serialize;
use serde_json::{Map, Value};
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Partial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub graph6: String,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl Witness {
    pub fn new(g: &Graph, note: impl Into<String>) -> Self {
        Witness {
            graph6: to_graph6(g),
            note: note.into(),
        }
    }
}

/// One claim, its parameter range, the verdict and any witnesses.
///
/// A failing report always carries at least one witness.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub params: Value,
    pub verdict: Verdict,
    pub checked: u64,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub not_desk_verifiable: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Map::is_empty")]
    pub details: Map<String, Value>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    /// The report as JSON with the timing field removed, for reproducibility checks.
    pub fn untimed_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if let Value::Object(map) = &mut v {
            map.remove("elapsed_ms");
        }
        v
    }
}

pub struct ReportBuilder {
    report: VerificationReport,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(claim: impl Into<String>, params: Value) -> Self {
        ReportBuilder {
            report: VerificationReport {
                claim: claim.into(),
                params,
                verdict: Verdict::Pass,
                checked: 0,
                witnesses: Vec::new(),
                not_desk_verifiable: false,
                notes: Vec::new(),
                details: Map::new(),
                elapsed_ms: 0,
            },
            started: Instant::now(),
        }
    }

    pub fn checked(&mut self, k: u64) -> &mut Self {
        self.report.checked += k;
        self
    }

    /// Records a counterexample.
    pub fn fail(&mut self, w: Witness) -> &mut Self {
        self.report.verdict = Verdict::Fail;
        self.report.witnesses.push(w);
        self
    }

    /// Requires `cond`, recording `w` as a counterexample otherwise.
    pub fn require(&mut self, cond: bool, w: impl FnOnce() -> Witness) -> &mut Self {
        self.report.checked += 1;
        if !cond {
            self.fail(w());
        }
        self
    }

    /// A non-failing witness, e.g. a mate that the claim predicts.
    pub fn witness(&mut self, w: Witness) -> &mut Self {
        self.report.witnesses.push(w);
        self
    }

    pub fn partial(&mut self, note: impl Into<String>) -> &mut Self {
        if self.report.verdict == Verdict::Pass {
            self.report.verdict = Verdict::Partial;
        }
        self.report.notes.push(note.into());
        self
    }

    pub fn note(&mut self, note: impl Into<String>) -> &mut Self {
        self.report.notes.push(note.into());
        self
    }

    pub fn not_desk_verifiable(&mut self) -> &mut Self {
        self.report.not_desk_verifiable = true;
        self
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        let v = serde_json::to_value(value).expect("detail serializes");
        self.report.details.insert(key.to_string(), v);
        self
    }

    pub fn verdict(&self) -> Verdict {
        self.report.verdict
    }

    /// Folds a sub-report in: its witnesses, its count and a failing verdict.
    pub fn absorb(&mut self, sub: &VerificationReport) -> &mut Self {
        self.report.checked += sub.checked;
        if sub.failed() {
            self.report.verdict = Verdict::Fail;
            self.report.witnesses.extend(sub.witnesses.iter().cloned());
        } else if sub.verdict == Verdict::Partial {
            self.partial(format!("{} partial", sub.claim));
        }
        self
    }

    pub fn finish(mut self) -> VerificationReport {
        debug_assert!(self.report.verdict != Verdict::Fail || !self.report.witnesses.is_empty());
        self.report.elapsed_ms = self.started.elapsed().as_millis() as u64;
        self.report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn failing_report_has_witness_and_untimed_json_drops_timing() {
        let k2 = Graph::complete(2).unwrap();
        let mut b = ReportBuilder::new("demo", json!({"n": 2}));
        b.require(true, || unreachable!());
        b.require(false, || Witness::new(&k2, "edge"));
        let r = b.finish();
        assert!(r.failed());
        assert_eq!(r.checked, 2);
        assert_eq!(r.witnesses[0].graph6, "A_");
        let v = r.untimed_json();
        assert!(v.get("elapsed_ms").is_none());
        assert_eq!(v["verdict"], "fail");
    }
}
