use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

/// Version tag of the JSON layout.
pub const FORMAT: &str = "logflc-report/1";

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Everything a subcommand prints. Wall time is reported on stderr only, so
/// identical inputs give byte-identical stdout.
#[derive(Debug)]
pub struct Report {
    pub command: String,
    pub parameters: Value,
    pub checks: Vec<Check>,
    pub result: Value,
    /// `(label, value)` rows for table output.
    pub rows: Vec<(String, String)>,
}

impl Report {
    pub fn new(command: &str, parameters: Value) -> Self {
        Report { command: command.into(), parameters, checks: Vec::new(), result: Value::Null, rows: Vec::new() }
    }

    pub fn row(&mut self, label: impl Into<String>, value: impl ToString) -> &mut Self {
        self.rows.push((label.into(), value.to_string()));
        self
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) -> &mut Self {
        self.checks.push(Check { name: name.into(), pass, detail: detail.into() });
        self
    }

    pub fn result(&mut self, v: impl Serialize) -> &mut Self {
        self.result = serde_json::to_value(v).expect("results serialize");
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        let v = json!({
            "format": FORMAT,
            "command": self.command,
            "parameters": self.parameters,
            "pass": self.passed(),
            "checks": self.checks,
            "result": self.result,
        });
        serde_json::to_string_pretty(&v).expect("json") + "\n"
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let width = self.rows.iter().map(|(l, _)| l.chars().count()).max().unwrap_or(0);
        for (label, value) in &self.rows {
            let pad = width - label.chars().count();
            let mut lines = value.lines();
            let first = lines.next().unwrap_or("");
            let _ = writeln!(out, "{label}{}  {first}", " ".repeat(pad));
            for line in lines {
                let _ = writeln!(out, "{}  {line}", " ".repeat(width));
            }
        }
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                let _ = writeln!(out, "[{tag}] {}", c.name);
            } else {
                let _ = writeln!(out, "[{tag}] {}: {}", c.name, c.detail);
            }
        }
        out
    }
}
