//! Report rendering: pretty JSON (the primary format) or a flat aligned
//! table derived from the same record.

use serde_json::Value;

/// Pretty JSON with a trailing newline. Key order comes from the
/// underlying map and is deterministic.
pub fn to_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}

fn scalar_text(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, value: &Value, rows: &mut Vec<(String, String)>) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, v, rows);
            }
        }
        Value::Array(items) if items.iter().any(|v| v.is_object() || v.is_array()) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), v, rows);
            }
        }
        Value::Array(items) => {
            let joined = items.iter().map(scalar_text).collect::<Vec<_>>().join(", ");
            rows.push((prefix.to_string(), format!("[{joined}]")));
        }
        scalar => rows.push((prefix.to_string(), scalar_text(scalar))),
    }
}

/// Aligned `key  value` lines for the same record the JSON form carries.
pub fn to_table(value: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", value, &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        out.push_str(&format!("{k:<width$}  {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn table_flattens_nested_records() {
        let v = json!({
            "config": {"l": 3, "m": 1},
            "equal": true,
            "alpha": ["2", "1/3"],
        });
        let table = to_table(&v);
        assert!(table.contains("config.l"));
        assert!(table.contains("alpha     [2, 1/3]"), "{table}");
        assert!(table.contains("equal"));
    }
}
