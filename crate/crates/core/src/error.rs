use thiserror::Error;

use crate::process::Pid;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("workload contains no processes")]
    EmptyWorkload,
    #[error("duplicate process id `{0}`")]
    DuplicateId(Pid),
    #[error("process `{0}` has a burst of zero ticks")]
    NonPositiveBurst(Pid),
    #[error("process `{0}` has user priority zero (priorities start at 1)")]
    NonPositivePriority(Pid),
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("static time quantum must be at least one tick")]
    NonPositiveQuantum,
    #[error("median of an empty set of remaining bursts")]
    EmptyRemaining,
    #[error(
        "process `{0}` arrives at a nonzero tick; round-based algorithms need simultaneous arrival"
    )]
    NonzeroArrival(Pid),
    #[error("schedule does not match workload: {0}")]
    ScheduleWorkloadMismatch(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: u64, message: String },
    #[error("unknown built-in case {0} (cases 1 to 5 are available)")]
    UnknownCase(u32),
}
