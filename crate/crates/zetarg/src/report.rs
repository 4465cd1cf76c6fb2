//! Machine-readable report envelopes emitted by the command-line layer.

use serde::Serialize;
use std::collections::BTreeMap;

/// A self-describing report: the command that ran, its inputs, a
/// structured payload, and the citation strings behind any embedded
/// reference values. Serialization is deterministic: struct fields keep
/// their declaration order and the input map is sorted.
#[derive(Debug, Clone, Serialize)]
pub struct ReportEnvelope {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub results: serde_json::Value,
    pub references: Vec<String>,
    pub tool_version: String,
}

impl ReportEnvelope {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            inputs: BTreeMap::new(),
            results: serde_json::Value::Null,
            references: Vec::new(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn input(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.inputs.insert(key.into(), value.to_string());
        self
    }

    pub fn results(mut self, results: serde_json::Value) -> Self {
        self.results = results;
        self
    }

    pub fn reference(mut self, citation: impl Into<String>) -> Self {
        self.references.push(citation.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("envelope serializes")
    }
}

/// Format with six significant digits for text reports; full round-trip
/// precision belongs to the JSON path.
pub fn sig6(x: f64) -> String {
    format_sig(x, 6)
}

pub fn format_sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = digits as i32 - 1 - magnitude;
    if !(-12..=12).contains(&decimals) {
        format!("{:.*e}", digits - 1, x)
    } else if decimals >= 0 {
        format!("{:.*}", decimals as usize, x)
    } else {
        let scale = 10f64.powi(-decimals);
        format!("{:.0}", (x / scale).round() * scale)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn envelope_serialization_is_stable() {
        let env = ReportEnvelope::new("bound")
            .input("t0", 1e10)
            .input("mode", "convexity")
            .results(serde_json::json!({"a": 1.0}));
        assert_eq!(env.to_json(), env.clone().to_json());
        let json = env.to_json();
        let cmd_pos = json.find("\"command\"").unwrap();
        let inputs_pos = json.find("\"inputs\"").unwrap();
        let results_pos = json.find("\"results\"").unwrap();
        assert!(cmd_pos < inputs_pos && inputs_pos < results_pos);
    }

    #[test]
    fn six_significant_digits() {
        assert_eq!(sig6(6.132063146), "6.13206");
        assert_eq!(sig6(0.19734615), "0.197346");
        assert_eq!(sig6(-0.00240990227), "-0.00240990");
        assert_eq!(sig6(1e10), "10000000000");
        assert_eq!(sig6(1.23456789e-9), "1.23457e-9");
    }
}
