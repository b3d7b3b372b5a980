use std::fmt::Write;

use serde_json::Value;

/// One `path = value` line per scalar leaf, e.g. `result.gaps[0].x = 5/8`.
pub fn plain(value: &Value) -> String {
    let mut out = String::new();
    walk(value, String::new(), &mut out);
    out
}

fn walk(value: &Value, path: String, out: &mut String) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let p = if path.is_empty() {
                    k.clone()
                } else {
                    format!("{path}.{k}")
                };
                walk(v, p, out);
            }
        }
        Value::Array(items) if !items.is_empty() => {
            for (i, v) in items.iter().enumerate() {
                walk(v, format!("{path}[{i}]"), out);
            }
        }
        Value::String(s) => {
            let _ = writeln!(out, "{path} = {s}");
        }
        other => {
            let _ = writeln!(out, "{path} = {other}");
        }
    }
}
