//! Command output: pretty text or a JSON document, with exit status derived
//! from the checks (0 all pass, 1 any failure, 2 parse/usage errors).

use covext_core::report::{Check, Report};
use serde::Serialize;

#[derive(Serialize)]
pub struct JsonCheck {
    pub name: String,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Serialize)]
pub struct JsonOutput {
    pub command: String,
    pub file: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub checks: Vec<JsonCheck>,
    pub data: serde_json::Value,
    pub ok: bool,
}

/// Accumulates the echo line, informational lines, and checks for one
/// command invocation.
pub struct Outcome {
    pub command: String,
    pub file: String,
    pub seed: Option<u64>,
    pub info: Vec<String>,
    pub checks: Vec<Check>,
    pub data: serde_json::Value,
}

impl Outcome {
    pub fn new(command: impl Into<String>, file: impl Into<String>) -> Self {
        Outcome {
            command: command.into(),
            file: file.into(),
            seed: None,
            info: Vec::new(),
            checks: Vec::new(),
            data: serde_json::Value::Null,
        }
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.info.push(line.into());
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, witness: Option<String>) {
        self.checks.push(Check { name: name.into(), passed, witness });
    }

    pub fn absorb(&mut self, report: Report) {
        for check in report.checks {
            self.checks.push(Check {
                name: format!("{}/{}", report.title, check.name),
                passed: check.passed,
                witness: check.witness,
            });
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let doc = JsonOutput {
                command: self.command.clone(),
                file: self.file.clone(),
                seed: self.seed,
                checks: self
                    .checks
                    .iter()
                    .map(|c| JsonCheck {
                        name: c.name.clone(),
                        status: if c.passed { "pass" } else { "fail" },
                        witness: c.witness.clone(),
                    })
                    .collect(),
                data: self.data.clone(),
                ok: self.all_passed(),
            };
            serde_json::to_string_pretty(&doc).expect("report serializes")
        } else {
            let mut out = String::new();
            out.push_str(&format!("command: {} {}\n", self.command, self.file));
            if let Some(seed) = self.seed {
                out.push_str(&format!("seed: {seed}\n"));
            }
            for line in &self.info {
                out.push_str(line);
                out.push('\n');
            }
            for c in &self.checks {
                let status = if c.passed { "pass" } else { "FAIL" };
                match &c.witness {
                    Some(w) => out.push_str(&format!("[{status}] {}: {w}\n", c.name)),
                    None => out.push_str(&format!("[{status}] {}\n", c.name)),
                }
            }
            let verdict = if self.all_passed() { "ok" } else { "FAILED" };
            out.push_str(&format!(
                "result: {verdict} ({}/{} checks passed)\n",
                self.checks.iter().filter(|c| c.passed).count(),
                self.checks.len()
            ));
            out
        }
    }
}
