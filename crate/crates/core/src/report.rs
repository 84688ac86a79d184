//! Uniform check records and the report envelope shared by every lab.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The stated form disagrees with the derivation, and the derived form
    /// passes every downstream check.
    Resolved,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn ok(self) -> bool {
        self != Status::Fail
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Resolved => "resolved",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    #[serde(rename = "paperRef")]
    pub topic: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, topic: impl Into<String>, ok: bool) -> Check {
        Check { name: name.into(), topic: topic.into(), status: Status::from_bool(ok), witness: None }
    }

    pub fn with_status(name: impl Into<String>, topic: impl Into<String>, status: Status) -> Check {
        Check { name: name.into(), topic: topic.into(), status, witness: None }
    }

    pub fn witness(mut self, w: impl Into<String>) -> Check {
        self.witness = Some(w.into());
        self
    }

    /// Attaches the witness only when the check did not pass.
    pub fn witness_if_failed(self, w: impl FnOnce() -> String) -> Check {
        if self.status == Status::Pass {
            self
        } else {
            self.witness(w())
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub summary: Summary,
    /// Structured lab output backing the checks.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<serde_json::Value>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Report {
        Report { command: command.into(), params: BTreeMap::new(), checks: Vec::new(), summary: Summary::default(), details: Vec::new() }
    }

    pub fn param(mut self, k: &str, v: impl fmt::Display) -> Report {
        self.params.insert(k.to_string(), v.to_string());
        self
    }

    pub fn push(&mut self, c: Check) {
        if c.status.ok() {
            self.summary.passed += 1;
        } else {
            self.summary.failed += 1;
        }
        self.checks.push(c);
    }

    pub fn extend(&mut self, cs: impl IntoIterator<Item = Check>) {
        for c in cs {
            self.push(c);
        }
    }

    pub fn detail(&mut self, d: &impl Serialize) {
        self.details.push(serde_json::to_value(d).expect("detail serializes"));
    }

    pub fn ok(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = self.command.to_string();
        for (k, v) in &self.params {
            s.push_str(&format!(" {k}={v}"));
        }
        s.push('\n');
        for c in &self.checks {
            s.push_str(&format!("[{}] {} ({})\n", c.status, c.name, c.topic));
            if let Some(w) = &c.witness {
                for line in w.lines() {
                    s.push_str(&format!("    {line}\n"));
                }
            }
        }
        s.push_str(&format!("passed {} failed {}\n", self.summary.passed, self.summary.failed));
        s
    }
}
