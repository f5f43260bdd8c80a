use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fitsched_core::io::ReportFormat;
use fitsched_core::{Algorithm, Weights};

#[derive(Debug, Parser)]
#[command(
    name = "fitsched",
    version,
    about = "Round-robin scheduling simulator with fit-factor ordering"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one algorithm on a workload file.
    Run(RunArgs),
    /// Run several algorithms on the same workload and print deltas.
    Compare(CompareArgs),
    /// Reproduce the five published reference cases (FJFDRR vs PBSRR).
    Paper(PaperArgs),
    /// Generate a random CSV workload.
    Gen(GenArgs),
}

#[derive(Debug, Clone, Args)]
pub struct AlgoOptions {
    /// Static quantum for pbsrr and rr.
    #[arg(long, default_value_t = 15, value_parser = clap::value_parser!(u64).range(1..))]
    pub quantum: u64,
    /// Fit-factor weights as UP:BT.
    #[arg(long, default_value = "3:2", value_parser = parse_weights)]
    pub weights: Weights,
    #[arg(long, default_value = "table", value_parser = parse_format)]
    pub format: ReportFormat,
    /// Append a text Gantt chart.
    #[arg(long)]
    pub gantt: bool,
    /// Gantt chart width in columns.
    #[arg(long, default_value_t = 80)]
    pub width: usize,
    /// Cross-check every schedule against the tick-level oracle.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long, value_parser = parse_algorithm)]
    pub algo: Algorithm,
    /// CSV or JSON (by extension) workload file.
    #[arg(long)]
    pub workload: PathBuf,
    #[command(flatten)]
    pub opts: AlgoOptions,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Comma-separated algorithm list, e.g. fjfdrr,pbsrr.
    #[arg(long, value_delimiter = ',', required = true, value_parser = parse_algorithm)]
    pub algos: Vec<Algorithm>,
    #[arg(long)]
    pub workload: PathBuf,
    #[command(flatten)]
    pub opts: AlgoOptions,
}

#[derive(Debug, Args)]
pub struct PaperArgs {
    /// Single case to reproduce (default: all five).
    #[arg(long)]
    pub case: Option<u32>,
    #[arg(long, default_value = "table", value_parser = parse_format)]
    pub format: ReportFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BurstOrder {
    Increasing,
    Decreasing,
    Random,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum)]
    pub order: BurstOrder,
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_burst: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse()
}

fn parse_format(s: &str) -> Result<ReportFormat, String> {
    s.parse()
}

fn parse_weights(s: &str) -> Result<Weights, String> {
    let (up, bt) = s
        .split_once(':')
        .ok_or_else(|| format!("expected UP:BT, got `{s}`"))?;
    let up: u32 = up
        .trim()
        .parse()
        .map_err(|e| format!("bad UP weight `{up}`: {e}"))?;
    let bt: u32 = bt
        .trim()
        .parse()
        .map_err(|e| format!("bad BT weight `{bt}`: {e}"))?;
    Weights::from_ratio(up, bt).map_err(|e| e.to_string())
}
