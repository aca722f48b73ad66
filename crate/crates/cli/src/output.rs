//! Output helpers: resolved-config echo, summary printing, 9-significant-
//! digit rounding for report floats.

use std::path::Path;

use serde::Serialize;

use crate::OutputFormat;

/// Round to 9 significant decimal digits so report numbers are stable,
/// compact and identical across runs.
pub fn sig9(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.8e}").parse().expect("formatted float parses")
}

/// Echo the fully-resolved config (after flag overrides) next to the outputs.
pub fn echo_resolved_config<C: Serialize>(out_dir: &Path, config: &C) -> anyhow::Result<()> {
    let path = out_dir.join("resolved_config.json");
    std::fs::write(&path, serde_json::to_string_pretty(config)?)?;
    Ok(())
}

/// Print the report to stdout as JSON or as flat `key,value` CSV lines.
pub fn print_summary(report: &serde_json::Value, format: OutputFormat) {
    match format {
        OutputFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(report).expect("report serializes")
        ),
        OutputFormat::Csv => {
            println!("key,value");
            let mut rows = Vec::new();
            flatten("", report, &mut rows);
            for (k, v) in rows {
                println!("{k},{v}");
            }
        }
    }
}

fn flatten(prefix: &str, value: &serde_json::Value, rows: &mut Vec<(String, String)>) {
    match value {
        serde_json::Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, v, rows);
            }
        }
        serde_json::Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), v, rows);
            }
        }
        other => rows.push((prefix.to_string(), other.to_string())),
    }
}

pub fn write_report(out_dir: &Path, name: &str, report: &serde_json::Value) -> anyhow::Result<()> {
    let path = out_dir.join(name);
    std::fs::write(
        &path,
        serde_json::to_string_pretty(report).expect("report serializes"),
    )?;
    Ok(())
}
