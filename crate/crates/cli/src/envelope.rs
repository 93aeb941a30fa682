//! The JSON output envelope shared by every subcommand.

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: &str = "1";

/// Wrapper around every structured result: which command ran, the parsed
/// inputs it ran on, the result payload, and plain-language notes stating
/// the formula behind each result field. All numbers inside `result` are
/// exact integers or `{num, den}` rational pairs — never floating point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputEnvelope {
    pub schema_version: String,
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub derivation_notes: Vec<String>,
}

impl OutputEnvelope {
    pub fn new(command: &str, inputs: Value, result: Value, notes: &[&str]) -> Self {
        OutputEnvelope {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            inputs,
            result,
            derivation_notes: notes.iter().map(|s| s.to_string()).collect(),
        }
    }

    /// Single-line JSON; keys inside maps serialize in sorted order, so the
    /// same envelope always produces identical bytes.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("envelope serialization cannot fail")
    }
}
