//! Plain-text rendering of the JSON reports, for `--human`.

use std::fmt::Write;

use serde_json::Value;

fn as_matrix(v: &Value) -> Option<Vec<Vec<&str>>> {
    let obj = v.as_object()?;
    if obj.len() != 2 || !obj.contains_key("ring") {
        return None;
    }
    obj.get("rows")?
        .as_array()?
        .iter()
        .map(|row| row.as_array()?.iter().map(Value::as_str).collect())
        .collect()
}

fn grid(rows: &[Vec<&str>], indent: usize, out: &mut String) {
    let cols = rows.first().map_or(0, Vec::len);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0)).collect();
    for row in rows {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
        let _ = writeln!(out, "{:indent$}[ {} ]", "", cells.join("  "));
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn walk(v: &Value, indent: usize, out: &mut String) {
    if let Some(rows) = as_matrix(v) {
        grid(&rows, indent, out);
        return;
    }
    match v {
        Value::Object(map) => {
            for (key, value) in map {
                match value {
                    Value::Object(_) | Value::Array(_) if !is_flat(value) => {
                        let _ = writeln!(out, "{:indent$}{key}:", "");
                        walk(value, indent + 2, out);
                    }
                    _ => {
                        let _ = writeln!(out, "{:indent$}{key}: {}", "", flat(value));
                    }
                }
            }
        }
        Value::Array(items) => {
            for (k, item) in items.iter().enumerate() {
                let _ = writeln!(out, "{:indent$}#{}", "", k + 1);
                walk(item, indent + 2, out);
            }
        }
        other => {
            let _ = writeln!(out, "{:indent$}{}", "", scalar(other));
        }
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|i| !i.is_object() && !i.is_array()),
        Value::Object(map) => map.is_empty() || (as_matrix(v).is_none() && map.values().all(|i| !i.is_object() && !i.is_array())),
        _ => true,
    }
}

fn flat(v: &Value) -> String {
    match v {
        Value::Array(items) => format!("[{}]", items.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        Value::Object(map) => {
            let parts: Vec<String> = map.iter().map(|(k, v)| format!("{k}={}", scalar(v))).collect();
            format!("{{{}}}", parts.join(", "))
        }
        other => scalar(other),
    }
}

/// Renders any report; objects with exactly `ring` and `rows` are drawn as
/// aligned matrices.
pub fn render(v: &Value) -> String {
    let mut out = String::new();
    walk(v, 0, &mut out);
    out
}
