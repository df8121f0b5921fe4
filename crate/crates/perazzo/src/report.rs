//! Report plumbing shared by the command-line front end: a versioned JSON
//! envelope, one record per check, and deterministic serialization (all
//! maps are ordered, no timestamps).

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "perazzo-report/1";

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub description: String,
    pub pass: bool,
    pub details: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn new(command: &str, seed: u64) -> Self {
        Report {
            schema: SCHEMA,
            command: command.to_string(),
            seed,
            passed: true,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, id: &str, description: &str, pass: bool, details: Value) {
        self.passed &= pass;
        self.checks.push(CheckRecord {
            id: id.to_string(),
            description: description.to_string(),
            pass,
            details,
        });
    }

    pub fn push_serializable<T: Serialize>(
        &mut self,
        id: &str,
        description: &str,
        pass: bool,
        details: &T,
    ) {
        self.push(
            id,
            description,
            pass,
            serde_json::to_value(details).expect("report details serialize"),
        );
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One human line per check.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{} {:<28} {}\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.id,
                c.description
            ));
        }
        out.push_str(&format!(
            "{}: {} of {} checks passed\n",
            if self.passed { "ok" } else { "FAILED" },
            self.checks.iter().filter(|c| c.pass).count(),
            self.checks.len()
        ));
        out
    }
}
