use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::VerifyError;

pub const SCHEMA: &str = "minorkit-verify/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
    Skipped,
}

/// One comparison inside a suite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub observed: Value,
    pub ok: bool,
}

/// A validated minor model. Branch sets are 0-based vertex positions in
/// `graph6`, indexed by the vertices of `pattern_graph6`, so a witness can be
/// rechecked from this record alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub subject: String,
    pub graph6: String,
    pub pattern: String,
    pub pattern_graph6: String,
    pub branch_sets: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub id: String,
    pub title: String,
    /// The claim being recomputed, stated without labels that depend on a
    /// drawing.
    pub claim: String,
    pub checks: Vec<Check>,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
    /// One-line result for terminal output, when the suite has a natural one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub headline: Option<String>,
    pub verdict: Verdict,
    pub reduced_depth: bool,
    /// Excluded from reproducibility comparisons.
    pub runtime_ms: u64,
}

impl SuiteResult {
    pub fn new(id: &str, title: &str, claim: &str) -> Self {
        SuiteResult {
            id: id.into(),
            title: title.into(),
            claim: claim.into(),
            checks: Vec::new(),
            witnesses: Vec::new(),
            notes: Vec::new(),
            headline: None,
            verdict: Verdict::Pass,
            reduced_depth: false,
            runtime_ms: 0,
        }
    }

    /// Records an exact comparison and returns whether it matched.
    pub fn check<E: Serialize, O: Serialize>(&mut self, name: &str, expected: E, observed: O) -> bool {
        let expected = serde_json::to_value(expected).expect("serializable");
        let observed = serde_json::to_value(observed).expect("serializable");
        let ok = expected == observed;
        self.checks.push(Check { name: name.into(), expected, observed, ok });
        ok
    }

    /// Records a property that must hold, with `detail` as the observation.
    pub fn require<O: Serialize>(&mut self, name: &str, ok: bool, detail: O) -> bool {
        let observed = serde_json::to_value(detail).expect("serializable");
        self.checks.push(Check { name: name.into(), expected: Value::Bool(true), observed, ok });
        ok
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub(crate) fn finish(&mut self) {
        if self.verdict == Verdict::Pass && self.checks.iter().any(|c| !c.ok) {
            self.verdict = Verdict::Fail;
        }
    }

    /// The result with its timing removed, for reproducibility comparisons.
    pub fn untimed(&self) -> SuiteResult {
        SuiteResult { runtime_ms: 0, ..self.clone() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Overall {
    Pass,
    PassWithSkips,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub config: Value,
    pub suites: Vec<SuiteResult>,
    pub verdict: Overall,
    pub environment: Value,
}

impl Report {
    pub fn overall(suites: &[SuiteResult]) -> Overall {
        let has = |v: Verdict| suites.iter().any(|s| s.verdict == v);
        if has(Verdict::Fail) {
            Overall::Fail
        } else if has(Verdict::Inconclusive) {
            Overall::Inconclusive
        } else if has(Verdict::Skipped) {
            Overall::PassWithSkips
        } else {
            Overall::Pass
        }
    }

    /// 0 for pass (with or without skips), 1 for a failure, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Overall::Pass | Overall::PassWithSkips => 0,
            Overall::Fail => 1,
            Overall::Inconclusive => 2,
        }
    }

    pub fn summary(&self) -> String {
        let mut s = String::new();
        for r in &self.suites {
            let failed = r.checks.iter().filter(|c| !c.ok).count();
            s.push_str(&format!(
                "{:<4} {:<13} {:>3}/{:<3} checks  {}{}\n",
                r.id,
                format!("{:?}", r.verdict).to_uppercase(),
                r.checks.len() - failed,
                r.checks.len(),
                r.title,
                if r.reduced_depth { " (reduced depth)" } else { "" }
            ));
            for c in r.checks.iter().filter(|c| !c.ok) {
                s.push_str(&format!("       failed: {}\n", c.name));
            }
        }
        s.push_str(&format!("overall: {}\n", serde_json::to_value(self.verdict).expect("enum")));
        s
    }

    /// Writes `report.json`, `witnesses.g6` and `witnesses.json` into `dir`.
    pub fn write(&self, dir: &Path) -> Result<(), VerifyError> {
        let io = |e: std::io::Error| VerifyError::Io(format!("{}: {e}", dir.display()));
        std::fs::create_dir_all(dir).map_err(io)?;
        let json = serde_json::to_string_pretty(self).expect("report serializes") + "\n";
        std::fs::write(dir.join("report.json"), json).map_err(io)?;
        let ledger: Vec<(&str, &Witness)> =
            self.suites.iter().flat_map(|s| s.witnesses.iter().map(move |w| (s.id.as_str(), w))).collect();
        let g6: String = ledger.iter().map(|(_, w)| format!("{}\n", w.graph6)).collect();
        std::fs::write(dir.join("witnesses.g6"), g6).map_err(io)?;
        let side: Vec<Value> = ledger
            .iter()
            .map(|(id, w)| serde_json::json!({ "suite": id, "witness": w }))
            .collect();
        let side = serde_json::to_string_pretty(&side).expect("ledger serializes") + "\n";
        std::fs::write(dir.join("witnesses.json"), side).map_err(io)
    }
}
