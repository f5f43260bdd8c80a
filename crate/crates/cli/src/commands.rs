use std::fmt::{self, Write as _};
use std::path::Path;
use std::thread;

use serde::Serialize;

use fitsched_core::io::{
    builtin_case, emit_report, parse_workload, reference_results, render_gantt, ExactValue,
    ReferenceRow, Report, ReportFormat, WorkloadFormat, CASE_COUNT, REFERENCE_QUANTUM,
};
use fitsched_core::oracle;
use fitsched_core::{compute_metrics, Algorithm, Error, Fraction, Schedule, Weights, Workload};

use crate::args::{AlgoOptions, CompareArgs, PaperArgs, RunArgs};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Input(String),
    /// Carries whatever was already rendered so it still reaches stdout.
    Verification {
        message: String,
        output: String,
    },
}

impl CliError {
    pub const USAGE: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const VERIFY: u8 = 3;

    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => Self::USAGE,
            CliError::Input(_) => Self::INPUT,
            CliError::Verification { .. } => Self::VERIFY,
        }
    }

    pub fn stdout(&self) -> Option<&str> {
        match self {
            CliError::Verification { output, .. } => Some(output),
            _ => None,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Input(m) => f.write_str(m),
            CliError::Verification { message, .. } => f.write_str(message),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownCase(_) | Error::InvalidWeights(_) | Error::NonPositiveQuantum => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

pub type CmdResult = Result<String, CliError>;

fn load_workload(path: &Path) -> Result<(String, Workload), CliError> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let workload = parse_workload(&bytes, WorkloadFormat::from_path(path))
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let name = path
        .file_stem()
        .map_or_else(|| "workload".into(), |s| s.to_string_lossy().into_owned());
    Ok((name, workload))
}

struct Run {
    schedule: Schedule,
    report: Report,
    mismatch: Option<String>,
}

fn execute(
    algo: Algorithm,
    name: &str,
    workload: &Workload,
    opts: &AlgoOptions,
) -> Result<Run, CliError> {
    let schedule = algo.run(workload, opts.quantum, opts.weights)?;
    let metrics = compute_metrics(&schedule, workload)?;
    let mismatch = if opts.verify {
        let reference = oracle::simulate(algo, workload, opts.quantum, opts.weights)?;
        first_difference(&schedule, &reference)
    } else {
        None
    };
    let report = Report::new(name, &schedule, &metrics);
    Ok(Run {
        schedule,
        report,
        mismatch,
    })
}

fn first_difference(engine: &Schedule, reference: &Schedule) -> Option<String> {
    if engine == reference {
        return None;
    }
    if engine.quantum_history != reference.quantum_history {
        return Some(format!(
            "{}: quantum history {:?} but oracle has {:?}",
            engine.algorithm, engine.quantum_history, reference.quantum_history
        ));
    }
    let at = engine
        .segments
        .iter()
        .zip(&reference.segments)
        .position(|(a, b)| a != b)
        .unwrap_or(engine.segments.len().min(reference.segments.len()));
    Some(format!(
        "{}: segment {at} is {:?} but oracle has {:?}",
        engine.algorithm,
        engine.segments.get(at),
        reference.segments.get(at)
    ))
}

pub fn run(args: &RunArgs) -> CmdResult {
    let (name, workload) = load_workload(&args.workload)?;
    let run = execute(args.algo, &name, &workload, &args.opts)?;
    let mut out = emit_report(&run.report, args.opts.format);
    if args.opts.gantt {
        out.push_str(&render_gantt(&run.schedule, args.opts.width));
        out.push('\n');
    }
    match run.mismatch {
        Some(message) => Err(CliError::Verification {
            message,
            output: out,
        }),
        None => Ok(out),
    }
}

/// Difference `reference - other` for the three headline metrics.
#[derive(Debug, Serialize)]
struct Delta {
    reference: String,
    baseline: String,
    avg_tat: ExactValue,
    avg_wt: ExactValue,
    context_switches: i64,
}

fn delta(reference: &Report, other: &Report) -> Delta {
    Delta {
        reference: reference.algorithm.clone(),
        baseline: other.algorithm.clone(),
        avg_tat: (reference.avg_tat.fraction() - other.avg_tat.fraction()).into(),
        avg_wt: (reference.avg_wt.fraction() - other.avg_wt.fraction()).into(),
        context_switches: reference.context_switches as i64 - other.context_switches as i64,
    }
}

pub fn compare(args: &CompareArgs) -> CmdResult {
    let (name, workload) = load_workload(&args.workload)?;

    let runs: Vec<Result<Run, CliError>> = thread::scope(|s| {
        let handles: Vec<_> = args
            .algos
            .iter()
            .map(|&algo| {
                let (name, workload, opts) = (&name, &workload, &args.opts);
                s.spawn(move || execute(algo, name, workload, opts))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("simulation thread panicked"))
            .collect()
    });
    let runs = runs.into_iter().collect::<Result<Vec<_>, _>>()?;

    let reference = args
        .algos
        .iter()
        .position(|&a| a == Algorithm::Fjfdrr)
        .unwrap_or(0);
    let deltas: Vec<Delta> = runs
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != reference)
        .map(|(_, r)| delta(&runs[reference].report, &r.report))
        .collect();

    let mut out = String::new();
    match args.opts.format {
        ReportFormat::Csv => {
            out.push_str("algorithm,avg_tat,avg_wt,cs\n");
            for r in &runs {
                let _ = writeln!(out, "{}", r.report.csv_row());
            }
            for d in &deltas {
                let _ = writeln!(
                    out,
                    "{}-{},{},{},{}",
                    d.reference,
                    d.baseline,
                    d.avg_tat.rendered,
                    d.avg_wt.rendered,
                    d.context_switches
                );
            }
        }
        ReportFormat::Json => {
            #[derive(Serialize)]
            struct Comparison<'a> {
                reports: Vec<&'a Report>,
                deltas: &'a [Delta],
            }
            let doc = Comparison {
                reports: runs.iter().map(|r| &r.report).collect(),
                deltas: &deltas,
            };
            out = serde_json::to_string_pretty(&doc).expect("serializable");
            out.push('\n');
        }
        ReportFormat::Table => {
            let _ = writeln!(out, "workload {name}");
            let _ = writeln!(
                out,
                "{:<10} {:<20} {:>10} {:>10} {:>5}",
                "algorithm", "time quantum", "avg TAT", "avg WT", "CS"
            );
            for r in &runs {
                let _ = writeln!(
                    out,
                    "{:<10} {:<20} {:>10} {:>10} {:>5}",
                    r.report.algorithm,
                    quantum_summary(&r.report.quantum_history),
                    r.report.avg_tat.rendered,
                    r.report.avg_wt.rendered,
                    r.report.context_switches
                );
            }
            for d in &deltas {
                let _ = writeln!(
                    out,
                    "delta {} - {}: avg TAT {}, avg WT {}, CS {}",
                    d.reference,
                    d.baseline,
                    d.avg_tat.rendered,
                    d.avg_wt.rendered,
                    d.context_switches
                );
            }
        }
    }
    if args.opts.gantt {
        for r in &runs {
            let _ = writeln!(
                out,
                "{}\n{}",
                r.report.algorithm,
                render_gantt(&r.schedule, args.opts.width)
            );
        }
    }

    match runs.iter().find_map(|r| r.mismatch.clone()) {
        Some(message) => Err(CliError::Verification {
            message,
            output: out,
        }),
        None => Ok(out),
    }
}

fn quantum_summary(history: &[u64]) -> String {
    match history {
        [] => "-".into(),
        [first, rest @ ..] if rest.iter().all(|q| q == first) => first.to_string(),
        _ => history
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(","),
    }
}

/// Outcome of checking one run against its reference row.
struct Check {
    report: Report,
    failures: Vec<String>,
}

fn check_reference(row: &ReferenceRow, workload: &Workload) -> Result<Check, CliError> {
    let opts_q = REFERENCE_QUANTUM;
    let weights = Weights::default();
    let schedule = row.algorithm.run(workload, opts_q, weights)?;
    let metrics = compute_metrics(&schedule, workload)?;
    let reference = oracle::simulate(row.algorithm, workload, opts_q, weights)?;

    let mut failures = Vec::new();
    let mut expect = |what: &str, got: String, want: String| {
        if got != want {
            failures.push(format!("{what} {got} (expected {want})"));
        }
    };
    let show = |f: Fraction| format!("{f} = {}", f.to_decimal(2));
    expect("avg TAT", show(metrics.avg_turnaround), show(row.avg_tat));
    expect("avg WT", show(metrics.avg_waiting), show(row.avg_wt));
    expect(
        "CS",
        metrics.context_switches.to_string(),
        row.context_switches.to_string(),
    );
    if let Some(history) = row.quantum_history {
        expect(
            "quantum history",
            format!("{:?}", schedule.quantum_history),
            format!("{history:?}"),
        );
    }
    if let Some(diff) = first_difference(&schedule, &reference) {
        failures.push(diff);
    }

    Ok(Check {
        report: Report::new(format!("case{}", row.case), &schedule, &metrics),
        failures,
    })
}

pub fn paper(args: &PaperArgs) -> CmdResult {
    let cases: Vec<u32> = match args.case {
        Some(k) if (1..=CASE_COUNT).contains(&k) => vec![k],
        Some(k) => return Err(Error::UnknownCase(k).into()),
        None => (1..=CASE_COUNT).collect(),
    };
    let rows: Vec<ReferenceRow> = reference_results()
        .into_iter()
        .filter(|r| cases.contains(&r.case))
        .collect();

    let checks: Vec<Result<Check, CliError>> = thread::scope(|s| {
        let handles: Vec<_> = rows
            .iter()
            .map(|row| s.spawn(move || check_reference(row, &builtin_case(row.case)?)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("simulation thread panicked"))
            .collect()
    });

    let mut out = String::new();
    let mut failed = 0;
    if args.format == ReportFormat::Csv {
        out.push_str("case,algorithm,avg_tat,avg_wt,cs,status\n");
    }
    for (row, check) in rows.iter().zip(checks) {
        let check = check?;
        let pass = check.failures.is_empty();
        failed += usize::from(!pass);
        let status = if pass { "PASS" } else { "FAIL" };
        match args.format {
            ReportFormat::Csv => {
                let _ = writeln!(out, "{},{},{status}", row.case, check.report.csv_row());
            }
            ReportFormat::Json => {
                out.push_str(&emit_report(&check.report, ReportFormat::Json));
            }
            ReportFormat::Table => {
                out.push_str(&emit_report(&check.report, ReportFormat::Table));
            }
        }
        if args.format != ReportFormat::Csv {
            let _ = write!(
                out,
                "{status} case {} {}: avg TAT {} avg WT {} CS {}",
                row.case,
                row.algorithm,
                check.report.avg_tat.fraction().to_decimal(6),
                check.report.avg_wt.fraction().to_decimal(6),
                check.report.context_switches
            );
            if let Some(note) = row.note {
                let (tat, wt, _) = row.published;
                let _ = write!(out, " [published {tat} / {wt}: {note}]");
            }
            out.push('\n');
            for f in &check.failures {
                let _ = writeln!(out, "  mismatch: {f}");
            }
            out.push('\n');
        }
    }

    if failed > 0 {
        Err(CliError::Verification {
            message: format!("{failed} reference run(s) did not match"),
            output: out,
        })
    } else {
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantum_summary_collapses_static() {
        assert_eq!(quantum_summary(&[15, 15, 15]), "15");
        assert_eq!(quantum_summary(&[27, 35, 20]), "27,35,20");
        assert_eq!(quantum_summary(&[]), "-");
    }

    #[test]
    fn every_reference_row_passes() {
        for row in reference_results() {
            let check = check_reference(&row, &builtin_case(row.case).unwrap()).unwrap();
            assert!(
                check.failures.is_empty(),
                "case {} {}: {:?}",
                row.case,
                row.algorithm,
                check.failures
            );
        }
    }

    #[test]
    fn unknown_case_is_usage_error() {
        let err = paper(&PaperArgs {
            case: Some(6),
            format: ReportFormat::Table,
        })
        .unwrap_err();
        assert_eq!(err.code(), CliError::USAGE);
    }
}
