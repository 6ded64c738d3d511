use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

/// Bumped whenever the JSON layout changes.
pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// A documented misprint in a reference table: the computed value is kept.
    Discrepancy,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Discrepancy => "discrepancy",
        }
    }
}

/// Where the expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// A fixture table.
    Fixture,
    /// Holds by construction or by a short identity.
    Identity,
    /// Recomputed by a second, independent route.
    Independent,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::Fixture => "fixture",
            Source::Identity => "identity",
            Source::Independent => "independent",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub computed: Value,
    pub expected: Value,
    pub source: Source,
    pub note: String,
}

impl CheckResult {
    /// Pass iff the two values serialize identically.
    pub fn compare(
        id: impl Into<String>,
        computed: impl Serialize,
        expected: impl Serialize,
        source: Source,
    ) -> Self {
        let computed = serde_json::to_value(computed).expect("serializable");
        let expected = serde_json::to_value(expected).expect("serializable");
        let status = if computed == expected {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            id: id.into(),
            status,
            computed,
            expected,
            source,
            note: String::new(),
        }
    }

    pub fn flag(id: impl Into<String>, ok: bool, source: Source, note: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            computed: Value::Bool(ok),
            expected: Value::Bool(true),
            source,
            note: note.into(),
        }
    }

    pub fn error(id: impl Into<String>, err: impl std::fmt::Display) -> Self {
        Self {
            id: id.into(),
            status: Status::Fail,
            computed: Value::Null,
            expected: Value::Null,
            source: Source::Identity,
            note: err.to_string(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    pub fn with_status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: u32,
    pub chamber: [i64; 2],
    pub fixtures: String,
    pub results: Vec<CheckResult>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub discrepancy: usize,
}

impl Report {
    pub fn counts(&self) -> Counts {
        let mut c = Counts::default();
        for r in &self.results {
            match r.status {
                Status::Pass => c.pass += 1,
                Status::Fail => c.fail += 1,
                Status::Discrepancy => c.discrepancy += 1,
            }
        }
        c
    }

    /// 0 without failures, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.counts().fail > 0)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.results {
            let _ = write!(s, "{:<12} {}", r.status.as_str(), r.id);
            if r.status != Status::Pass || r.computed != r.expected {
                let _ = write!(
                    s,
                    "  computed={} expected={}",
                    compact(&r.computed),
                    compact(&r.expected)
                );
            }
            if !r.note.is_empty() {
                let _ = write!(s, "  ({})", r.note);
            }
            s.push('\n');
        }
        let c = self.counts();
        let _ = writeln!(
            s,
            "{} pass, {} fail, {} discrepancy",
            c.pass, c.fail, c.discrepancy
        );
        s
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["id", "status", "computed", "expected", "source", "note"])
            .expect("in memory");
        for r in &self.results {
            w.write_record([
                r.id.as_str(),
                r.status.as_str(),
                &compact(&r.computed),
                &compact(&r.expected),
                r.source.as_str(),
                r.note.as_str(),
            ])
            .expect("in memory");
        }
        String::from_utf8(w.into_inner().expect("in memory")).expect("utf-8")
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
