//! Unit-tick reference simulator.
//!
//! Advances time one tick at a time with an explicit round cursor, slice
//! counter and per-process remaining counters. It derives process order and
//! medians on its own (integer keys, counting selection) and shares nothing
//! with [`crate::engine`] beyond the public types, so agreement between the
//! two is meaningful.

use crate::engine::{round_based_label, Algorithm, OrderingPolicy};
use crate::error::{Error, Result};
use crate::fitfactor::Weights;
use crate::process::{Process, Tick, Workload};
use crate::quantum::QuantumPolicy;
use crate::schedule::{Schedule, Segment};

/// Reference counterpart of [`crate::engine::run_round_based`].
pub fn tick_simulate(
    workload: &Workload,
    order: OrderingPolicy,
    quantum: QuantumPolicy,
) -> Result<Schedule> {
    let procs = workload.processes();
    if let Some(p) = procs.iter().find(|p| p.arrival > 0) {
        return Err(Error::NonzeroArrival(p.pid.clone()));
    }
    if let QuantumPolicy::Static(0) = quantum {
        return Err(Error::NonPositiveQuantum);
    }
    let queue = reference_order(procs, order);
    let n = queue.len();

    let mut remaining: Vec<Tick> = procs.iter().map(|p| p.burst).collect();
    let mut left: Tick = remaining.iter().sum();
    let mut history = Vec::new();
    let mut segments = Vec::new();

    let mut now: Tick = 0;
    let mut cursor = n; // forces a fresh round on the first tick
    let mut tq: Tick = 0;
    let mut running: Option<usize> = None;
    let mut slice_used: Tick = 0;
    let mut slice_start: Tick = 0;

    while left > 0 {
        if running.is_none() {
            while cursor < n && remaining[queue[cursor]] == 0 {
                cursor += 1;
            }
            if cursor == n {
                let live: Vec<Tick> = remaining.iter().copied().filter(|&r| r > 0).collect();
                tq = match quantum {
                    QuantumPolicy::Static(q) => q,
                    QuantumPolicy::MedianDynamic => counting_median(&live),
                };
                history.push(tq);
                cursor = 0;
                continue;
            }
            running = Some(queue[cursor]);
            slice_used = 0;
            slice_start = now;
        }

        let cur = running.expect("a process is running");
        remaining[cur] -= 1;
        left -= 1;
        slice_used += 1;
        now += 1;

        if remaining[cur] == 0 || slice_used == tq {
            segments.push(Segment {
                pid: procs[cur].pid.clone(),
                start: slice_start,
                end: now,
            });
            running = None;
            cursor += 1;
        }
    }

    Ok(Schedule {
        algorithm: round_based_label(order, quantum).to_owned(),
        segments,
        quantum_history: history,
    })
}

/// Reference counterpart of the non-preemptive baselines. `algorithm` must
/// be one of FCFS, SJF or PRIORITY.
pub fn tick_simulate_nonpreemptive(workload: &Workload, algorithm: Algorithm) -> Schedule {
    let procs = workload.processes();
    let key = |p: &Process| -> u64 {
        match algorithm {
            Algorithm::Fcfs => p.arrival,
            Algorithm::Sjf => p.burst,
            Algorithm::Priority => u64::from(p.user_priority),
            other => panic!("{other} is not a non-preemptive baseline"),
        }
    };

    let mut remaining: Vec<Tick> = procs.iter().map(|p| p.burst).collect();
    let mut finished = 0;
    let mut segments = Vec::new();
    let mut now: Tick = 0;
    let mut running: Option<(usize, Tick)> = None;

    while finished < procs.len() {
        if running.is_none() {
            let mut pick: Option<usize> = None;
            for (i, p) in procs.iter().enumerate() {
                if remaining[i] == 0 || p.arrival > now {
                    continue;
                }
                if pick.is_none_or(|j| key(p) < key(&procs[j])) {
                    pick = Some(i);
                }
            }
            match pick {
                Some(i) => running = Some((i, now)),
                None => {
                    now += 1;
                    continue;
                }
            }
        }
        let (cur, start) = running.expect("a process is running");
        remaining[cur] -= 1;
        now += 1;
        if remaining[cur] == 0 {
            segments.push(Segment {
                pid: procs[cur].pid.clone(),
                start,
                end: now,
            });
            running = None;
            finished += 1;
        }
    }

    Schedule {
        algorithm: algorithm.label().to_owned(),
        segments,
        quantum_history: Vec::new(),
    }
}

/// Reference run of any [`Algorithm`] with the same arguments as
/// [`Algorithm::run`].
pub fn simulate(
    algorithm: Algorithm,
    workload: &Workload,
    quantum: Tick,
    weights: Weights,
) -> Result<Schedule> {
    match algorithm {
        Algorithm::Fjfdrr => tick_simulate(
            workload,
            OrderingPolicy::FitFactor(weights),
            QuantumPolicy::MedianDynamic,
        ),
        Algorithm::Pbsrr => tick_simulate(
            workload,
            OrderingPolicy::UserPriority,
            QuantumPolicy::Static(quantum),
        ),
        Algorithm::Rr => tick_simulate(
            workload,
            OrderingPolicy::InputOrder,
            QuantumPolicy::Static(quantum),
        ),
        Algorithm::Fcfs | Algorithm::Sjf | Algorithm::Priority => {
            Ok(tick_simulate_nonpreemptive(workload, algorithm))
        }
    }
}

/// Selection-sorts workload indices by an integer key, earliest index first
/// among equals.
fn reference_order(procs: &[Process], policy: OrderingPolicy) -> Vec<usize> {
    let n = procs.len();
    let keys: Vec<(i128, i128)> = match policy {
        OrderingPolicy::FitFactor(w) => {
            // f = up*(a/b) + sp*(c/d); scaling by b*d keeps it integral
            let (a, b) = (w.up_weight().numer() as i128, w.up_weight().denom() as i128);
            let (c, d) = (w.bt_weight().numer() as i128, w.bt_weight().denom() as i128);
            procs
                .iter()
                .enumerate()
                .map(|(i, p)| {
                    let sp = 1 + procs
                        .iter()
                        .enumerate()
                        .filter(|&(j, q)| q.burst < p.burst || (q.burst == p.burst && j < i))
                        .count() as i128;
                    let up = p.user_priority as i128;
                    (up * a * d + sp * c * b, up)
                })
                .collect()
        }
        OrderingPolicy::UserPriority => {
            procs.iter().map(|p| (p.user_priority as i128, 0)).collect()
        }
        OrderingPolicy::InputOrder => vec![(0, 0); n],
        OrderingPolicy::ShortestBurst => procs.iter().map(|p| (p.burst as i128, 0)).collect(),
    };

    let mut placed = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<usize> = None;
        for i in 0..n {
            if !placed[i] && best.is_none_or(|b| keys[i] < keys[b]) {
                best = Some(i);
            }
        }
        let b = best.expect("unplaced process");
        placed[b] = true;
        out.push(b);
    }
    out
}

/// k-th order statistic by counting; even counts floor the middle pair's
/// mean.
fn counting_median(values: &[Tick]) -> Tick {
    let kth = |k: usize| -> Tick {
        *values
            .iter()
            .filter(|&&v| values.iter().filter(|&&x| x <= v).count() > k)
            .min()
            .expect("nonempty")
    };
    let n = values.len();
    if n % 2 == 1 {
        kth(n / 2)
    } else {
        ((kth(n / 2 - 1) as u128 + kth(n / 2) as u128) / 2) as Tick
    }
}
