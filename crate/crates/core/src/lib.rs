//! Deterministic uniprocessor scheduling simulator.
//!
//! The centerpiece is FJFDRR: processes are sorted once by a fit factor that
//! blends user priority with a shortest-burst rank, then served round robin
//! with a time quantum recomputed every round as the median of the remaining
//! bursts. A priority-sorted static-quantum round robin (PBSRR) and the
//! classic FCFS / SJF / priority / RR baselines run on the same engine.
//!
//! Every run can be cross-checked against [`oracle`], a tick-by-tick
//! simulator that shares no code with the engine's round loop.

mod error;
mod fraction;
mod process;
mod schedule;

pub mod engine;
pub mod fitfactor;
pub mod io;
pub mod metrics;
pub mod oracle;
pub mod quantum;

pub use engine::{
    fcfs, fjfdrr, pbsrr, priority_np, rr, run_round_based, sjf, Algorithm, OrderingPolicy,
};
pub use error::{Error, Result};
pub use fitfactor::{assign_sp_ranks, fit_factor, fjfdrr_order, FitRanking, Weights};
pub use fraction::Fraction;
pub use metrics::{compute_metrics, Metrics, ProcessMetrics};
pub use process::{validate_workload, Pid, Process, Tick, Workload};
pub use quantum::{median_quantum, next_quantum, QuantumPolicy};
pub use schedule::{Schedule, Segment};
