//! Plain-text rendering of the structured output documents.

use std::fmt::Write;

use serde_json::Value;

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn table(rows: &[Value]) -> Option<Vec<String>> {
    let first = rows.first()?.as_object()?;
    let keys: Vec<&String> = first.keys().collect();
    let mut cells = vec![keys.iter().map(|k| k.to_string()).collect::<Vec<_>>()];
    for row in rows {
        let obj = row.as_object()?;
        if obj.len() != keys.len() {
            return None;
        }
        cells.push(keys.iter().map(|k| obj.get(*k).and_then(scalar)).collect::<Option<Vec<_>>>()?);
    }
    let widths: Vec<usize> =
        (0..keys.len()).map(|i| cells.iter().map(|r| r[i].chars().count()).max().unwrap_or(0)).collect();
    Some(
        cells
            .iter()
            .map(|r| {
                let line: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                line.join("  ").trim_end().to_string()
            })
            .collect(),
    )
}

fn write_value(out: &mut String, indent: usize, key: &str, v: &Value) {
    let pad = " ".repeat(indent);
    if let Some(s) = scalar(v) {
        let _ = writeln!(out, "{pad}{key}: {s}");
        return;
    }
    match v {
        Value::Object(map) => {
            let _ = writeln!(out, "{pad}{key}:");
            for (k, v) in map {
                write_value(out, indent + 2, k, v);
            }
        }
        Value::Array(items) => {
            if let Some(items) = items.iter().map(scalar).collect::<Option<Vec<_>>>() {
                let _ = writeln!(out, "{pad}{key}: [{}]", items.join(", "));
            } else if let Some(lines) = table(items) {
                let _ = writeln!(out, "{pad}{key}:");
                for l in lines {
                    let _ = writeln!(out, "{pad}  {l}");
                }
            } else {
                let _ = writeln!(out, "{pad}{key}:");
                for (i, item) in items.iter().enumerate() {
                    write_value(out, indent + 2, &format!("[{i}]"), item);
                }
            }
        }
        _ => unreachable!(),
    }
}

pub fn to_text(doc: &Value) -> String {
    let mut out = String::new();
    match doc {
        Value::Object(map) => {
            for (k, v) in map {
                write_value(&mut out, 0, k, v);
            }
        }
        other => write_value(&mut out, 0, "value", other),
    }
    out
}
