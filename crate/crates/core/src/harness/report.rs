//! Trial reports and their JSON form.

use std::fmt;

use serde_json::Value;

use crate::json;

/// JSON Schema of one report.
pub const REPORT_SCHEMA: &str = include_str!("../../schema/report.schema.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Numeric,
    Symbolic,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Numeric => "numeric",
            Mode::Symbolic => "symbolic",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrialReport {
    pub law: String,
    pub mode: Mode,
    /// Echo of the configuration the law ran on.
    pub config: Value,
    pub seed: u64,
    pub trials: usize,
    pub status: Status,
    /// Why the law failed or was skipped.
    pub reason: Option<String>,
    /// First failing trial: its shape, inputs and both sides.
    pub counterexample: Option<Value>,
    /// Wall time in milliseconds.
    pub ms: u64,
}

impl TrialReport {
    pub fn to_json(&self) -> Value {
        let mut v = self.to_json_without_time();
        v["ms"] = Value::from(self.ms);
        v
    }

    /// The deterministic part of the report.
    pub fn to_json_without_time(&self) -> Value {
        json::object(vec![
            ("law", Value::from(self.law.clone())),
            ("mode", Value::from(self.mode.to_string())),
            ("config", self.config.clone()),
            ("seed", Value::from(self.seed)),
            ("trials", Value::from(self.trials)),
            ("status", Value::from(self.status.to_string())),
            ("reason", self.reason.clone().map_or(Value::Null, Value::from)),
            ("counterexample", self.counterexample.clone().unwrap_or(Value::Null)),
        ])
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(reports: &[TrialReport]) -> Summary {
        let mut s = Summary::default();
        for r in reports {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s
    }

    pub fn to_json(&self) -> Value {
        json::object(vec![
            ("pass", Value::from(self.pass)),
            ("fail", Value::from(self.fail)),
            ("skipped", Value::from(self.skipped)),
        ])
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} passed, {} failed, {} skipped", self.pass, self.fail, self.skipped)
    }
}

/// Reports as a JSON array.
pub fn reports_to_json(reports: &[TrialReport]) -> Value {
    Value::Array(reports.iter().map(TrialReport::to_json).collect())
}
