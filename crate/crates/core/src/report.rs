//! Check records shared by the verification suites and the CLI.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CheckReport {
    pub check: String,
    pub inputs: String,
    pub lhs: Value,
    pub rhs: Value,
    pub abs_err: f64,
    pub rel_err: f64,
    #[serde(rename = "L", skip_serializing_if = "Option::is_none")]
    pub l: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q0: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trusted_fraction: Option<f64>,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckReport {
    /// Exact comparison; both sides are rendered as strings.
    pub fn exact<T: std::fmt::Display + PartialEq>(check: &str, inputs: &str, lhs: &T, rhs: &T) -> Self {
        let pass = lhs == rhs;
        Self {
            check: check.to_string(),
            inputs: inputs.to_string(),
            lhs: Value::String(lhs.to_string()),
            rhs: Value::String(rhs.to_string()),
            abs_err: if pass { 0.0 } else { f64::NAN },
            rel_err: if pass { 0.0 } else { f64::NAN },
            l: None,
            q0: None,
            seed: None,
            trusted_fraction: None,
            tolerance: 0.0,
            pass,
            detail: None,
        }
    }

    /// Boolean property check with a free-form description of what failed.
    pub fn property(check: &str, inputs: &str, pass: bool, detail: Option<String>) -> Self {
        Self {
            check: check.to_string(),
            inputs: inputs.to_string(),
            lhs: Value::Bool(pass),
            rhs: Value::Bool(true),
            abs_err: if pass { 0.0 } else { 1.0 },
            rel_err: if pass { 0.0 } else { 1.0 },
            l: None,
            q0: None,
            seed: None,
            trusted_fraction: None,
            tolerance: 0.0,
            pass,
            detail,
        }
    }

    /// Numeric comparison; the relative error falls back to the absolute one when `rhs` is zero.
    pub fn numeric(check: &str, inputs: &str, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        let abs_err = (lhs - rhs).abs();
        let rel_err = if rhs.abs() > f64::MIN_POSITIVE { abs_err / rhs.abs() } else { abs_err };
        Self::from_errors(check, inputs, lhs, rhs, abs_err, rel_err, tolerance)
    }

    pub fn from_errors(check: &str, inputs: &str, lhs: f64, rhs: f64, abs_err: f64, rel_err: f64, tolerance: f64) -> Self {
        Self {
            check: check.to_string(),
            inputs: inputs.to_string(),
            lhs: num_value(lhs),
            rhs: num_value(rhs),
            abs_err,
            rel_err,
            l: None,
            q0: None,
            seed: None,
            trusted_fraction: None,
            tolerance,
            pass: rel_err <= tolerance,
            detail: None,
        }
    }

    pub fn with_truncation(mut self, l: u32, q0: f64, trusted_fraction: f64) -> Self {
        self.l = Some(l);
        self.q0 = Some(q0);
        self.trusted_fraction = Some(trusted_fraction);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        let side = |v: &Value| match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        let head = if self.inputs.is_empty() { self.check.clone() } else { format!("{} [{}]", self.check, self.inputs) };
        let mut s = match &self.lhs {
            Value::Bool(_) => head,
            Value::String(l) if self.pass => format!("{head} = {l}"),
            Value::String(l) => format!("{head} = {l}, expected {}", side(&self.rhs)),
            l => format!(
                "{head}: lhs = {}, rhs = {}, rel_err = {:.3e} (tol {:.0e})",
                side(l),
                side(&self.rhs),
                self.rel_err,
                self.tolerance
            ),
        };
        s.push(' ');
        s.push_str(status);
        if let (false, Some(d)) = (self.pass, &self.detail) {
            s.push_str(": ");
            s.push_str(d);
        }
        s
    }
}

fn num_value(x: f64) -> Value {
    serde_json::Number::from_f64(x).map(Value::Number).unwrap_or(Value::Null)
}
