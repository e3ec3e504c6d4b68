use std::io::Write;

use clap::ValueEnum;
use serde_json::{Map, Number, Value};

use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Graph6,
}

/// Rounds to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if x.is_finite() {
        format!("{x:.11e}").parse().unwrap_or(x)
    } else {
        x
    }
}

/// Rounds every float in a JSON tree; integers are left alone.
pub fn rounded(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => n
            .as_f64()
            .and_then(|x| Number::from_f64(round12(x)))
            .map_or(Value::Null, Value::Number),
        Value::Array(items) => Value::Array(items.into_iter().map(rounded).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, rounded(v))).collect()),
        other => other,
    }
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|i| !i.is_array() && !i.is_object()) => {
            items.iter().map(csv_cell).collect::<Vec<_>>().join(";")
        }
        other => other.to_string(),
    }
}

/// Writes records as JSON lines or as CSV with a header from the first
/// record's keys.
pub fn emit(records: Vec<Map<String, Value>>, format: Format) -> Result<(), Failure> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let io = |e: std::io::Error| Failure::Runtime(format!("write failed: {e}"));
    match format {
        Format::Json => {
            for r in records {
                writeln!(out, "{}", rounded(Value::Object(r))).map_err(io)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            if let Some(first) = records.first() {
                w.write_record(first.keys()).map_err(|e| Failure::Runtime(e.to_string()))?;
            }
            for r in records {
                let Value::Object(r) = rounded(Value::Object(r)) else { unreachable!() };
                w.write_record(r.values().map(csv_cell))
                    .map_err(|e| Failure::Runtime(e.to_string()))?;
            }
            w.flush().map_err(io)?;
        }
        Format::Graph6 => {
            return Err(Failure::Usage("graph6 output is only available for family".into()));
        }
    }
    Ok(())
}

/// Pretty-printed single JSON document.
pub fn emit_report(report: Value) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(&rounded(report)).map_err(|e| Failure::Runtime(e.to_string()))?;
    println!("{text}");
    Ok(())
}
