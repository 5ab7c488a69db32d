//! Deterministic JSON helpers: sorted keys (serde_json's default map) and
//! floats rounded to 12 significant digits.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use knotstate::bounds::VolumeBounds;
use knotstate::polyhedra::GutsInterval;

use crate::error::CliError;

pub fn float(x: f64) -> Value {
    if x.is_finite() {
        let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
        json!(rounded)
    } else if x > 0.0 {
        json!("inf")
    } else {
        json!("-inf")
    }
}

/// Integers that fit in i64 stay numbers; bigger ones become strings.
pub fn bigint(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn error_value(e: &CliError) -> Value {
    json!({ "error": { "kind": e.kind(), "message": e.to_string() } })
}

pub fn core_error(e: &knotstate::Error) -> Value {
    error_value(&CliError::Core(e.clone()))
}

pub fn or_error<T>(r: knotstate::Result<T>, f: impl FnOnce(T) -> Value) -> Value {
    match r {
        Ok(v) => f(v),
        Err(e) => core_error(&e),
    }
}

pub fn guts(g: &GutsInterval) -> Value {
    json!({
        "lo": g.lo,
        "hi": g.hi,
        "exact": g.exact,
        "justification": g.justification.name(),
    })
}

pub fn bounds(b: &VolumeBounds<f64>) -> Value {
    let checks: Vec<Value> = b.checks.iter().map(|(name, holds)| json!({"name": name, "holds": holds})).collect();
    json!({
        "lower": float(b.lower),
        "upper": float(b.upper),
        "lower_strict": b.lower_strict,
        "upper_strict": b.upper_strict,
        "lower_method": b.lower_method.name(),
        "upper_method": b.upper_method.name(),
        "assumptions": b.assumptions,
        "warnings": b.warnings,
        "checks": checks,
        "jones_form": b.jones_form.map(|j| json!({"lower": float(j.lower), "upper": float(j.upper)})),
    })
}

/// Indented `key: value` rendering for `--text`.
pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    out
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => render_map(map, depth, out),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push_str(&format!("{pad}{}\n", parts.join(", ")));
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                out.push_str(&format!("{pad}[{i}]\n"));
                render(item, depth + 1, out);
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

fn render_map(map: &Map<String, Value>, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    for (k, v) in map {
        match v {
            Value::Object(_) | Value::Array(_) if !is_flat(v) => {
                out.push_str(&format!("{pad}{k}:\n"));
                render(v, depth + 1, out);
            }
            Value::Array(items) => {
                let parts: Vec<String> = items.iter().map(scalar).collect();
                out.push_str(&format!("{pad}{k}: [{}]\n", parts.join(", ")));
            }
            _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(v))),
        }
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|i| !i.is_object() && !i.is_array()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_round_to_twelve_digits() {
        assert_eq!(float(10.991587130126628).to_string(), "10.9915871301");
        assert_eq!(float(f64::INFINITY), json!("inf"));
        assert_eq!(float(0.0).to_string(), "0.0");
    }

    #[test]
    fn big_integers_become_strings() {
        assert_eq!(bigint(&BigInt::from(-3)), json!(-3));
        let huge = BigInt::from(u64::MAX) * 4;
        assert_eq!(bigint(&huge), json!(huge.to_string()));
    }
}
