use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use fitsched_core::io::{builtin_case, emit_workload, WorkloadFormat};

fn fitsched(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fitsched"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_case(dir: &Path, k: u32, format: WorkloadFormat) -> PathBuf {
    let ext = if format == WorkloadFormat::Json {
        "json"
    } else {
        "csv"
    };
    let path = dir.join(format!("case{k}.{ext}"));
    std::fs::write(&path, emit_workload(&builtin_case(k).unwrap(), format)).unwrap();
    path
}

#[test]
fn run_csv_rows() {
    let dir = tempfile::tempdir().unwrap();
    let case4 = write_case(dir.path(), 4, WorkloadFormat::Csv);
    let p = case4.to_str().unwrap();

    let o = fitsched(&[
        "run",
        "--algo",
        "fjfdrr",
        "--workload",
        p,
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "FJFDRR,75.8,44.8,7\n");

    let o = fitsched(&["run", "--algo", "pbsrr", "--workload", p, "--format", "csv"]);
    assert_eq!(stdout(&o), "PBSRR,79.8,48.8,12\n");
}

#[test]
fn run_json_workload_with_verify_and_gantt() {
    let dir = tempfile::tempdir().unwrap();
    let case3 = write_case(dir.path(), 3, WorkloadFormat::Json);
    let o = fitsched(&[
        "run",
        "--algo",
        "fjfdrr",
        "--workload",
        case3.to_str().unwrap(),
        "--verify",
        "--gantt",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let out = stdout(&o);
    assert!(out.starts_with("FJFDRR on case3\n"));
    assert!(out.contains("64, 30, 6"));
    assert!(out.lines().any(|l| l.starts_with("|P|P3 ")));
    assert!(out.trim_end().ends_with("292"));
}

#[test]
fn every_algorithm_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let case5 = write_case(dir.path(), 5, WorkloadFormat::Csv);
    for algo in ["fjfdrr", "pbsrr", "rr", "fcfs", "sjf", "priority"] {
        let o = fitsched(&[
            "run",
            "--algo",
            algo,
            "--workload",
            case5.to_str().unwrap(),
            "--verify",
            "--quantum",
            "7",
        ]);
        assert_eq!(o.status.code(), Some(0), "{algo}");
    }
}

#[test]
fn usage_errors_exit_1() {
    let o = fitsched(&["run", "--algo", "rr"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));

    assert_eq!(
        fitsched(&["run", "--algo", "srtn", "--workload", "x.csv"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        fitsched(&["gen", "--n", "0", "--order", "random"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(fitsched(&["paper", "--case", "6"]).status.code(), Some(1));
    assert_eq!(fitsched(&["bogus"]).status.code(), Some(1));
    assert_eq!(fitsched(&["--help"]).status.code(), Some(0));
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.csv");
    std::fs::write(&bad, "pid,arrival,burst,priority\nP1,0,abc,1\n").unwrap();
    let o = fitsched(&["run", "--algo", "fcfs", "--workload", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let o = fitsched(&["run", "--algo", "fcfs", "--workload", "/nonexistent/w.csv"]);
    assert_eq!(o.status.code(), Some(2));

    let late = dir.path().join("late.csv");
    std::fs::write(&late, "pid,arrival,burst,priority\nA,0,4,1\nB,3,2,1\n").unwrap();
    let o = fitsched(&[
        "run",
        "--algo",
        "fjfdrr",
        "--workload",
        late.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = fitsched(&[
        "run",
        "--algo",
        "fcfs",
        "--workload",
        late.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(stdout(&o), "FCFS,3.5,0.5,1\n");
}

#[test]
fn compare_deltas() {
    let dir = tempfile::tempdir().unwrap();
    let case1 = write_case(dir.path(), 1, WorkloadFormat::Csv);
    let o = fitsched(&[
        "compare",
        "--algos",
        "fjfdrr,pbsrr",
        "--workload",
        case1.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "algorithm,avg_tat,avg_wt,cs\nFJFDRR,88.2,53,7\nPBSRR,102,66.8,12\nFJFDRR-PBSRR,-13.8,-13.8,-5\n"
    );

    let case5 = write_case(dir.path(), 5, WorkloadFormat::Csv);
    let o = fitsched(&[
        "compare",
        "--algos",
        "pbsrr,fjfdrr",
        "--workload",
        case5.to_str().unwrap(),
    ]);
    let out = stdout(&o);
    assert!(out.contains("delta FJFDRR - PBSRR:"), "{out}");
    assert!(out.trim_end().ends_with("CS -11"), "{out}");
}

#[test]
fn compare_same_algorithm_twice() {
    let dir = tempfile::tempdir().unwrap();
    let case2 = write_case(dir.path(), 2, WorkloadFormat::Csv);
    let o = fitsched(&[
        "compare",
        "--algos",
        "sjf,sjf",
        "--workload",
        case2.to_str().unwrap(),
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["reports"][0], v["reports"][1]);
    assert_eq!(v["deltas"][0]["avg_tat"]["num"], 0);
    assert_eq!(v["deltas"][0]["avg_wt"]["rendered"], "0");
    assert_eq!(v["deltas"][0]["context_switches"], 0);
}

#[test]
fn paper_case3() {
    let o = fitsched(&["paper", "--case", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(
        out.contains("PASS case 3 FJFDRR: avg TAT 144.4 avg WT 86 CS 7"),
        "{out}"
    );
    assert!(
        out.contains("PASS case 3 PBSRR: avg TAT 192.2 avg WT 133.8 CS 21"),
        "{out}"
    );
}

#[test]
fn paper_case2_errata() {
    let out = stdout(&fitsched(&["paper", "--case", "2"]));
    let line = out.lines().find(|l| l.contains("case 2 FJFDRR")).unwrap();
    assert!(line.starts_with("PASS"));
    assert!(line.contains("avg TAT 282 avg WT 224.375"));
    assert!(line.contains("189.5"));
}

#[test]
fn gen_contracts() {
    let a = fitsched(&["gen", "--n", "5", "--order", "increasing", "--seed", "7"]);
    let b = fitsched(&["gen", "--n", "5", "--order", "increasing", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);

    let rows = |o: &Output| -> Vec<(u64, u32)> {
        stdout(o)
            .lines()
            .skip(1)
            .map(|l| {
                let f: Vec<&str> = l.split(',').collect();
                assert_eq!(f[1], "0");
                (f[2].parse().unwrap(), f[3].parse().unwrap())
            })
            .collect()
    };

    let dec = rows(&fitsched(&[
        "gen",
        "--n",
        "8",
        "--order",
        "decreasing",
        "--seed",
        "3",
        "--max-burst",
        "50",
    ]));
    assert_eq!(dec.len(), 8);
    assert!(dec.windows(2).all(|w| w[0].0 >= w[1].0));
    assert!(dec.iter().all(|r| (1..=50).contains(&r.0)));

    let mut prios: Vec<u32> = rows(&fitsched(&[
        "gen", "--n", "5", "--order", "random", "--seed", "1",
    ]))
    .into_iter()
    .map(|r| r.1)
    .collect();
    prios.sort_unstable();
    assert_eq!(prios, [1, 2, 3, 4, 5]);
}

#[test]
fn paper_all_cases_is_fast() {
    let start = std::time::Instant::now();
    let o = fitsched(&["paper"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o)
            .lines()
            .filter(|l| l.starts_with("PASS case"))
            .count(),
        10
    );
    assert!(
        start.elapsed() < std::time::Duration::from_secs(1),
        "{:?}",
        start.elapsed()
    );
}
