use std::str::FromStr;

use crate::error::{Error, Result};
use crate::process::{validate_workload, Process, Workload};

const HEADER: [&str; 4] = ["pid", "arrival", "burst", "priority"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WorkloadFormat {
    /// Header `pid,arrival,burst,priority`, one row per process.
    Csv,
    /// Array of `{pid, arrival, burst, priority}` objects.
    Json,
}

impl WorkloadFormat {
    /// `.json` files are JSON, everything else is CSV.
    pub fn from_path(path: &std::path::Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => WorkloadFormat::Json,
            _ => WorkloadFormat::Csv,
        }
    }
}

impl FromStr for WorkloadFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(WorkloadFormat::Csv),
            "json" => Ok(WorkloadFormat::Json),
            other => Err(format!("unknown workload format `{other}`")),
        }
    }
}

pub fn parse_workload(text: &[u8], format: WorkloadFormat) -> Result<Workload> {
    let text = std::str::from_utf8(text).map_err(|e| Error::Parse {
        line: 1 + text[..e.valid_up_to()]
            .iter()
            .filter(|&&b| b == b'\n')
            .count() as u64,
        message: format!("invalid UTF-8: {e}"),
    })?;
    let raw = match format {
        WorkloadFormat::Csv => parse_csv(text)?,
        WorkloadFormat::Json => {
            serde_json::from_str::<Vec<Process>>(text).map_err(|e| Error::Parse {
                line: e.line() as u64,
                message: e.to_string(),
            })?
        }
    };
    validate_workload(raw)
}

fn parse_csv(text: &str) -> Result<Vec<Process>> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let headers = reader.headers().map_err(|e| csv_error(e, 1))?;
    if headers.iter().ne(HEADER) {
        return Err(Error::Parse {
            line: 1,
            message: format!("expected header `{}`", HEADER.join(",")),
        });
    }
    reader
        .deserialize::<Process>()
        .enumerate()
        .map(|(i, row)| row.map_err(|e| csv_error(e, i as u64 + 2)))
        .collect()
}

fn csv_error(e: csv::Error, fallback_line: u64) -> Error {
    let line = e.position().map_or(fallback_line, |p| p.line());
    let message = match e.kind() {
        csv::ErrorKind::Deserialize { err, .. } => err.to_string(),
        _ => e.to_string(),
    };
    Error::Parse { line, message }
}

/// Inverse of [`parse_workload`].
pub fn emit_workload(workload: &Workload, format: WorkloadFormat) -> String {
    match format {
        WorkloadFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(Vec::new());
            w.write_record(HEADER).expect("write to Vec");
            for p in workload {
                w.write_record([
                    p.pid.as_str(),
                    &p.arrival.to_string(),
                    &p.burst.to_string(),
                    &p.user_priority.to_string(),
                ])
                .expect("write to Vec");
            }
            String::from_utf8(w.into_inner().expect("flush to Vec")).expect("utf-8 input")
        }
        WorkloadFormat::Json => {
            let mut s = serde_json::to_string_pretty(workload.processes()).expect("serializable");
            s.push('\n');
            s
        }
    }
}
