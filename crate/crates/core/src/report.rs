//! Machine-readable command output.

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "totring.report/1";

#[derive(Clone, Debug, Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Config {
    pub max_order: usize,
    pub slow: bool,
    pub parallel: bool,
    pub solve_guard: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub tool: Tool,
    pub command: String,
    /// `None` for corpus-wide commands.
    pub ring: Option<String>,
    pub config: Config,
    pub results: Value,
    pub errors: Vec<String>,
    /// Wall-clock figures; the only nondeterministic part of a report.
    pub timing: Value,
}

impl Report {
    pub fn new(command: &str, ring: Option<String>, config: Config) -> Self {
        Report {
            schema: SCHEMA,
            tool: Tool { name: "totring", version: env!("CARGO_PKG_VERSION") },
            command: command.to_string(),
            ring,
            config,
            results: Value::Object(Default::default()),
            errors: Vec::new(),
            timing: Value::Object(Default::default()),
        }
    }

    /// JSON with the `timing` field removed, for byte-level comparison.
    pub fn to_json_untimed(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().unwrap().remove("timing");
        serde_json::to_string_pretty(&v).unwrap()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
