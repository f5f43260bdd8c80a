//! Scheduler executor.
//!
//! Round-based algorithms fix a process order once at t = 0 and then run
//! rounds: each round takes one quantum from the [`QuantumPolicy`] and gives
//! every unfinished process `min(quantum, remaining)` ticks, in that order.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fitfactor::{fjfdrr_order, Weights};
use crate::process::{Process, Tick, Workload};
use crate::quantum::{next_quantum, QuantumPolicy};
use crate::schedule::{Schedule, Segment};

/// Fixed process order used by the round-based executor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderingPolicy {
    FitFactor(Weights),
    UserPriority,
    InputOrder,
    ShortestBurst,
}

impl OrderingPolicy {
    /// Workload indices in run order. Every policy falls back to input order
    /// for ties.
    pub fn order(&self, workload: &Workload) -> Vec<usize> {
        let procs = workload.processes();
        let mut idx: Vec<usize> = (0..procs.len()).collect();
        match self {
            OrderingPolicy::FitFactor(w) => {
                return fjfdrr_order(workload, *w).order_indices().to_vec()
            }
            OrderingPolicy::UserPriority => idx.sort_by_key(|&i| procs[i].user_priority),
            OrderingPolicy::InputOrder => {}
            OrderingPolicy::ShortestBurst => idx.sort_by_key(|&i| procs[i].burst),
        }
        idx
    }
}

/// Label for a round-based configuration: the named algorithms get their
/// own names, anything else is `ROUND-ROBIN`.
pub fn round_based_label(order: OrderingPolicy, quantum: QuantumPolicy) -> &'static str {
    match (order, quantum) {
        (OrderingPolicy::FitFactor(_), QuantumPolicy::MedianDynamic) => Algorithm::Fjfdrr.label(),
        (OrderingPolicy::UserPriority, QuantumPolicy::Static(_)) => Algorithm::Pbsrr.label(),
        (OrderingPolicy::InputOrder, QuantumPolicy::Static(_)) => Algorithm::Rr.label(),
        _ => "ROUND-ROBIN",
    }
}

pub fn run_round_based(
    workload: &Workload,
    order: OrderingPolicy,
    quantum: QuantumPolicy,
) -> Result<Schedule> {
    workload.require_zero_arrivals()?;
    if quantum == QuantumPolicy::Static(0) {
        return Err(Error::NonPositiveQuantum);
    }
    let label = round_based_label(order, quantum);
    let procs = workload.processes();
    let order = order.order(workload);
    let mut remaining: Vec<Tick> = procs.iter().map(|p| p.burst).collect();
    let mut segments = Vec::new();
    let mut history = Vec::new();
    let mut now: Tick = 0;

    loop {
        let unfinished: Vec<Tick> = remaining.iter().copied().filter(|&r| r > 0).collect();
        if unfinished.is_empty() {
            break;
        }
        let tq = next_quantum(quantum, &unfinished)?;
        history.push(tq);
        for &i in &order {
            if remaining[i] == 0 {
                continue;
            }
            let slice = tq.min(remaining[i]);
            segments.push(Segment::new(procs[i].pid.clone(), now, now + slice));
            now += slice;
            remaining[i] -= slice;
        }
    }

    Ok(Schedule {
        algorithm: label.to_owned(),
        segments,
        quantum_history: history,
    })
}

/// Fit-factor order with the per-round median quantum.
pub fn fjfdrr(workload: &Workload, weights: Weights) -> Result<Schedule> {
    run_round_based(
        workload,
        OrderingPolicy::FitFactor(weights),
        QuantumPolicy::MedianDynamic,
    )
}

/// Priority-sorted round robin with a static quantum.
pub fn pbsrr(workload: &Workload, q: Tick) -> Result<Schedule> {
    run_round_based(
        workload,
        OrderingPolicy::UserPriority,
        QuantumPolicy::fixed(q)?,
    )
}

/// Plain round robin in input order.
pub fn rr(workload: &Workload, q: Tick) -> Result<Schedule> {
    run_round_based(
        workload,
        OrderingPolicy::InputOrder,
        QuantumPolicy::fixed(q)?,
    )
}

pub fn fcfs(workload: &Workload) -> Schedule {
    run_nonpreemptive(workload, Algorithm::Fcfs.label(), |p| p.arrival)
}

pub fn sjf(workload: &Workload) -> Schedule {
    run_nonpreemptive(workload, Algorithm::Sjf.label(), |p| p.burst)
}

pub fn priority_np(workload: &Workload) -> Schedule {
    run_nonpreemptive(workload, Algorithm::Priority.label(), |p| {
        u64::from(p.user_priority)
    })
}

/// Whenever the CPU frees up, runs the arrived process with the smallest
/// key to completion. Idles until the next arrival if nothing is ready.
fn run_nonpreemptive<F>(workload: &Workload, label: &str, key: F) -> Schedule
where
    F: Fn(&Process) -> u64,
{
    let procs = workload.processes();
    let mut done = vec![false; procs.len()];
    let mut segments = Vec::with_capacity(procs.len());
    let mut now: Tick = 0;

    for _ in 0..procs.len() {
        let pending = || (0..procs.len()).filter(|&i| !done[i]);
        let earliest = pending()
            .map(|i| procs[i].arrival)
            .min()
            .expect("pending process");
        now = now.max(earliest);
        let next = pending()
            .filter(|&i| procs[i].arrival <= now)
            .min_by_key(|&i| (key(&procs[i]), i))
            .expect("a process has arrived");
        let p = &procs[next];
        segments.push(Segment::new(p.pid.clone(), now, now + p.burst));
        now += p.burst;
        done[next] = true;
    }

    Schedule {
        algorithm: label.to_owned(),
        segments,
        quantum_history: Vec::new(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Fjfdrr,
    Pbsrr,
    Rr,
    Fcfs,
    Sjf,
    Priority,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Fjfdrr,
        Algorithm::Pbsrr,
        Algorithm::Rr,
        Algorithm::Fcfs,
        Algorithm::Sjf,
        Algorithm::Priority,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Algorithm::Fjfdrr => "FJFDRR",
            Algorithm::Pbsrr => "PBSRR",
            Algorithm::Rr => "RR",
            Algorithm::Fcfs => "FCFS",
            Algorithm::Sjf => "SJF",
            Algorithm::Priority => "PRIORITY",
        }
    }

    pub fn is_round_based(self) -> bool {
        matches!(self, Algorithm::Fjfdrr | Algorithm::Pbsrr | Algorithm::Rr)
    }

    /// `quantum` is ignored by FJFDRR and the non-preemptive baselines;
    /// `weights` only matters for FJFDRR.
    pub fn run(self, workload: &Workload, quantum: Tick, weights: Weights) -> Result<Schedule> {
        match self {
            Algorithm::Fjfdrr => fjfdrr(workload, weights),
            Algorithm::Pbsrr => pbsrr(workload, quantum),
            Algorithm::Rr => rr(workload, quantum),
            Algorithm::Fcfs => Ok(fcfs(workload)),
            Algorithm::Sjf => Ok(sjf(workload)),
            Algorithm::Priority => Ok(priority_np(workload)),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "fjfdrr" => Ok(Algorithm::Fjfdrr),
            "pbsrr" => Ok(Algorithm::Pbsrr),
            "rr" => Ok(Algorithm::Rr),
            "fcfs" => Ok(Algorithm::Fcfs),
            "sjf" => Ok(Algorithm::Sjf),
            "priority" | "priority_np" => Ok(Algorithm::Priority),
            other => Err(format!(
                "unknown algorithm `{other}` (expected fjfdrr, pbsrr, rr, fcfs, sjf or priority)"
            )),
        }
    }
}
