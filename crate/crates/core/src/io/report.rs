use std::fmt::Write as _;
use std::str::FromStr;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::fraction::Fraction;
use crate::metrics::Metrics;
use crate::process::{Pid, Tick};
use crate::schedule::{Schedule, Segment};

/// Decimal places used when rendering averages.
const PLACES: u32 = 2;

/// Exact rational with its rendered decimal form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactValue {
    pub num: i64,
    pub den: i64,
    pub rendered: String,
}

impl ExactValue {
    pub fn fraction(&self) -> Fraction {
        Fraction::new(self.num, self.den)
    }
}

impl From<Fraction> for ExactValue {
    fn from(f: Fraction) -> Self {
        ExactValue {
            num: f.numer(),
            den: f.denom(),
            rendered: f.to_decimal(PLACES),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProcessRow {
    pub completion: Tick,
    pub tat: Tick,
    pub wt: Tick,
}

/// One algorithm run over one workload, ready to serialize.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub algorithm: String,
    pub workload: String,
    pub quantum_history: Vec<Tick>,
    pub segments: Vec<Segment>,
    pub per_process: IndexMap<Pid, ProcessRow>,
    pub avg_tat: ExactValue,
    pub avg_wt: ExactValue,
    pub context_switches: usize,
}

impl Report {
    pub fn new(workload: impl Into<String>, schedule: &Schedule, metrics: &Metrics) -> Self {
        Report {
            algorithm: schedule.algorithm.clone(),
            workload: workload.into(),
            quantum_history: schedule.quantum_history.clone(),
            segments: schedule.segments.clone(),
            per_process: metrics
                .per_process
                .iter()
                .map(|m| {
                    let row = ProcessRow {
                        completion: m.completion,
                        tat: m.turnaround,
                        wt: m.waiting,
                    };
                    (m.pid.clone(), row)
                })
                .collect(),
            avg_tat: metrics.avg_turnaround.into(),
            avg_wt: metrics.avg_waiting.into(),
            context_switches: metrics.context_switches,
        }
    }

    /// `ALGO,avg_tat,avg_wt,cs` without a trailing newline.
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{}",
            self.algorithm, self.avg_tat.rendered, self.avg_wt.rendered, self.context_switches
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ReportFormat {
    Json,
    Csv,
    #[default]
    Table,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "table" => Ok(ReportFormat::Table),
            other => Err(format!(
                "unknown report format `{other}` (expected json, csv or table)"
            )),
        }
    }
}

pub fn emit_report(report: &Report, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report is serializable");
            s.push('\n');
            s
        }
        ReportFormat::Csv => format!("{}\n", report.csv_row()),
        ReportFormat::Table => table(report),
    }
}

fn table(r: &Report) -> String {
    let mut out = String::new();
    let quantum = if r.quantum_history.is_empty() {
        "-".to_owned()
    } else {
        r.quantum_history
            .iter()
            .map(Tick::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    };
    let _ = writeln!(out, "{} on {}", r.algorithm, r.workload);
    let _ = writeln!(out, "  time quantum      {quantum}");
    let _ = writeln!(out, "  avg turnaround    {}", with_exact(&r.avg_tat));
    let _ = writeln!(out, "  avg waiting       {}", with_exact(&r.avg_wt));
    let _ = writeln!(out, "  context switches  {}", r.context_switches);

    let pid_w = r
        .per_process
        .keys()
        .map(|p| p.as_str().len())
        .max()
        .unwrap_or(3)
        .max(3);
    let _ = writeln!(
        out,
        "  {:<pid_w$}  {:>10}  {:>8}  {:>8}",
        "pid", "completion", "tat", "wt"
    );
    for (pid, row) in &r.per_process {
        let _ = writeln!(
            out,
            "  {:<pid_w$}  {:>10}  {:>8}  {:>8}",
            pid.as_str(),
            row.completion,
            row.tat,
            row.wt
        );
    }
    out
}

fn with_exact(v: &ExactValue) -> String {
    if v.den == 1 {
        v.rendered.clone()
    } else {
        format!("{} ({}/{})", v.rendered, v.num, v.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{fcfs, fjfdrr, pbsrr};
    use crate::fitfactor::Weights;
    use crate::io::builtin_case;
    use crate::metrics::compute_metrics;

    fn report(case: u32, algo: &str) -> Report {
        let w = builtin_case(case).unwrap();
        let s = match algo {
            "fjfdrr" => fjfdrr(&w, Weights::default()).unwrap(),
            "pbsrr" => pbsrr(&w, 15).unwrap(),
            _ => fcfs(&w),
        };
        Report::new(format!("case{case}"), &s, &compute_metrics(&s, &w).unwrap())
    }

    #[test]
    fn csv_rows() {
        assert_eq!(
            emit_report(&report(3, "fjfdrr"), ReportFormat::Csv),
            "FJFDRR,144.4,86,7\n"
        );
        assert_eq!(
            emit_report(&report(5, "pbsrr"), ReportFormat::Csv),
            "PBSRR,183,142.13,25\n"
        );
    }

    #[test]
    fn json_shape() {
        let text = emit_report(&report(4, "fjfdrr"), ReportFormat::Json);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["algorithm"], "FJFDRR");
        assert_eq!(v["workload"], "case4");
        assert_eq!(v["quantum_history"], serde_json::json!([12, 54, 32]));
        assert_eq!(
            v["segments"][0],
            serde_json::json!({"pid": "P5", "start": 0, "end": 12})
        );
        assert_eq!(
            v["per_process"]["P1"],
            serde_json::json!({"completion": 34, "tat": 34, "wt": 33})
        );
        assert_eq!(
            v["avg_tat"],
            serde_json::json!({"num": 379, "den": 5, "rendered": "75.8"})
        );
        assert_eq!(v["avg_wt"]["rendered"], "44.8");
        assert_eq!(v["context_switches"], 7);
        let keys: Vec<&String> = v["per_process"].as_object().unwrap().keys().collect();
        assert_eq!(keys.len(), 5);
    }

    #[test]
    fn json_is_lossless() {
        let r = report(2, "fjfdrr");
        let back: Report = serde_json::from_str(&emit_report(&r, ReportFormat::Json)).unwrap();
        assert_eq!(back.avg_wt.fraction(), Fraction::new(1795, 8));
        assert_eq!(back, r);
    }

    #[test]
    fn empty_history_is_an_empty_list() {
        let v: serde_json::Value =
            serde_json::from_str(&emit_report(&report(1, "fcfs"), ReportFormat::Json)).unwrap();
        assert_eq!(v["quantum_history"], serde_json::json!([]));
    }

    #[test]
    fn table_lists_every_process() {
        let t = emit_report(&report(1, "pbsrr"), ReportFormat::Table);
        assert!(t.starts_with("PBSRR on case1\n"));
        assert!(t.contains("avg waiting       66.8 (334/5)"));
        for i in 1..=5 {
            assert!(t.contains(&format!("  P{i} ")));
        }
    }
}
