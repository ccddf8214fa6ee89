//! Run reports, JSON/text rendering and the mapping from errors to exit codes.
//!
//! Integers are always emitted as decimal strings and exact rationals as
//! `"p/q"` strings, so no consumer loses precision. Object keys are sorted
//! (serde_json's default map), which makes reports byte-identical across runs
//! apart from the `timings` field.

use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Map, Value};

use crate::Format;

#[derive(Debug)]
pub enum Failure {
    Domain(domination::Error),
    Usage(String),
}

impl Failure {
    pub fn usage(msg: impl Into<String>) -> Self {
        Failure::Usage(msg.into())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Domain(domination::Error::Capacity { .. }) => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Domain(e) => write!(f, "{e}"),
            Failure::Usage(msg) => write!(f, "input error: {msg}"),
        }
    }
}

impl From<domination::Error> for Failure {
    fn from(e: domination::Error) -> Self {
        Failure::Domain(e)
    }
}

/// A report under construction; [`RunReport::finish`] stamps the wall time.
pub struct RunReport {
    command: &'static str,
    input: Value,
    parameters: Value,
    started: Instant,
}

impl RunReport {
    pub fn start(command: &'static str, input: Value, parameters: Value) -> Self {
        RunReport { command, input, parameters, started: Instant::now() }
    }

    pub fn finish(self, results: Value, success: bool) -> Outcome {
        let wall_ms = self.started.elapsed().as_millis();
        let report = json!({
            "command": self.command,
            "input": self.input,
            "parameters": self.parameters,
            "results": results,
            "timings": { "wall_ms": int(wall_ms) },
            "engine_version": domination::VERSION,
        });
        Outcome { report, success, csv: None, forced_exit: None }
    }
}

pub struct Outcome {
    pub report: Value,
    /// Whether every checked assertion or inequality held.
    pub success: bool,
    /// When set, replaces the report on stdout.
    pub csv: Option<String>,
    /// Exit code overriding the one implied by `success`.
    pub forced_exit: Option<u8>,
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        self.forced_exit.unwrap_or(if self.success { 0 } else { 1 })
    }

    pub fn render(&self, format: Format) -> String {
        if let Some(csv) = &self.csv {
            return csv.clone();
        }
        match format {
            Format::Json => {
                let mut out = serde_json::to_string_pretty(&self.report).expect("reports serialize");
                out.push('\n');
                out
            }
            Format::Text => {
                let mut out = String::new();
                render_text(&self.report, 0, &mut out);
                out
            }
        }
    }
}

fn render_text(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (key, v) in map {
                if is_scalar_or_flat(v) {
                    out.push_str(&format!("{pad}{key}: {}\n", inline(v)));
                } else {
                    out.push_str(&format!("{pad}{key}:\n"));
                    render_text(v, indent + 1, out);
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_scalar_or_flat(item) {
                    out.push_str(&format!("{pad}- {}\n", inline(item)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render_text(item, indent + 1, out);
                }
            }
        }
        scalar => out.push_str(&format!("{pad}{}\n", inline(scalar))),
    }
}

fn is_scalar_or_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|i| !i.is_array() && !i.is_object()),
        Value::Object(map) => map.is_empty(),
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) => format!("[{}]", items.iter().map(inline).collect::<Vec<_>>().join(", ")),
        Value::Object(_) => "{}".into(),
        other => other.to_string(),
    }
}

/// An integer as a decimal string.
pub fn int(x: impl fmt::Display) -> Value {
    Value::String(x.to_string())
}

pub fn ints<T: fmt::Display>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(xs.into_iter().map(int).collect())
}

/// An exact rational as `"p/q"` together with display approximations.
pub fn rational(r: &BigRational) -> Value {
    let approx = domination::checks::approx(r);
    json!({
        "exact": format!("{}/{}", r.numer(), r.denom()),
        "approx": if approx.is_finite() { json!(approx) } else { Value::Null },
        "log10": log10_abs(r).map_or(Value::Null, |x| json!(x)),
    })
}

/// `log10 |r|` from the leading bits of numerator and denominator; `None` for 0.
pub fn log10_abs(r: &BigRational) -> Option<f64> {
    if r.is_zero() {
        return None;
    }
    Some(log10_int(&r.numer().abs()) - log10_int(r.denom()))
}

fn log10_int(x: &BigInt) -> f64 {
    let bits = x.bits();
    let shift = bits.saturating_sub(60);
    let top: BigInt = x >> shift;
    let lead: f64 = top.to_string().parse().expect("decimal digits parse as f64");
    lead.log10() + shift as f64 * std::f64::consts::LOG10_2
}

pub fn object(pairs: impl IntoIterator<Item = (&'static str, Value)>) -> Value {
    Value::Object(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect::<Map<_, _>>())
}
