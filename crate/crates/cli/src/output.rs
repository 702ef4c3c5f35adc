//! CSV and JSON emission.
//!
//! CSV is locale-independent: period decimal separator, scientific notation
//! with 17 significant digits, LF-terminated rows, header first. Identical
//! configurations produce byte-identical output.

use std::io::Write;
use std::path::Path;

use crate::CliError;

/// 17-significant-digit scientific form; -0.0 normalized to 0.0 so output
/// bytes never depend on the sign of an underflowed zero.
pub fn fmt_f64(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.16e}")
}

/// Optional cell: empty when absent.
pub fn fmt_opt(v: Option<f64>) -> String {
    v.map(fmt_f64).unwrap_or_default()
}

pub struct CsvTable {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl CsvTable {
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            debug_assert_eq!(row.len(), self.header.len());
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// Writes rendered output to the path or stdout.
pub fn write_output(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::Config(format!("cannot write {}: {e}", path.display()))),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(content.as_bytes())
                .and_then(|_| lock.flush())
                .map_err(|e| CliError::Numeric(format!("stdout write failed: {e}")))
        }
    }
}

pub fn render_json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Numeric(format!("JSON serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}
