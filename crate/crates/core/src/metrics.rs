//! Turnaround, waiting and context-switch accounting.
//!
//! A context switch is any boundary between consecutive segments, including
//! one where the same process resumes after its quantum expired, so
//! `context_switches = segments - 1`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::process::{Pid, Tick, Workload};
use crate::schedule::Schedule;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProcessMetrics {
    pub pid: Pid,
    pub completion: Tick,
    pub turnaround: Tick,
    pub waiting: Tick,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metrics {
    /// In workload order.
    pub per_process: Vec<ProcessMetrics>,
    pub avg_turnaround: Fraction,
    pub avg_waiting: Fraction,
    pub context_switches: usize,
}

impl Metrics {
    pub fn get(&self, pid: &Pid) -> Option<&ProcessMetrics> {
        self.per_process.iter().find(|m| &m.pid == pid)
    }
}

pub fn compute_metrics(schedule: &Schedule, workload: &Workload) -> Result<Metrics> {
    let mismatch = |msg: String| Err(Error::ScheduleWorkloadMismatch(msg));

    let mut executed: HashMap<&Pid, Tick> = HashMap::new();
    let mut completion: HashMap<&Pid, Tick> = HashMap::new();
    for seg in &schedule.segments {
        let Some(p) = workload.get(&seg.pid) else {
            return mismatch(format!("segment for unknown process `{}`", seg.pid));
        };
        if seg.start >= seg.end {
            return mismatch(format!("empty segment for `{}` at {}", seg.pid, seg.start));
        }
        if seg.start < p.arrival {
            return mismatch(format!(
                "`{}` runs at {} before arriving at {}",
                seg.pid, seg.start, p.arrival
            ));
        }
        *executed.entry(&seg.pid).or_default() += seg.len();
        let c = completion.entry(&seg.pid).or_default();
        *c = (*c).max(seg.end);
    }

    let mut per_process = Vec::with_capacity(workload.len());
    let (mut tat_sum, mut wt_sum) = (0i64, 0i64);
    for p in workload {
        let ran = executed.get(&p.pid).copied().unwrap_or(0);
        if ran != p.burst {
            return mismatch(format!(
                "`{}` executed {} ticks but its burst is {}",
                p.pid, ran, p.burst
            ));
        }
        let completion = completion[&p.pid];
        let turnaround = completion - p.arrival;
        let waiting = turnaround - p.burst;
        tat_sum += turnaround as i64;
        wt_sum += waiting as i64;
        per_process.push(ProcessMetrics {
            pid: p.pid.clone(),
            completion,
            turnaround,
            waiting,
        });
    }

    let n = workload.len() as i64;
    Ok(Metrics {
        per_process,
        avg_turnaround: Fraction::new(tat_sum, n),
        avg_waiting: Fraction::new(wt_sum, n),
        context_switches: schedule.segments.len().saturating_sub(1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{fcfs, fjfdrr, pbsrr};
    use crate::fitfactor::Weights;
    use crate::io::builtin_case;
    use crate::process::{validate_workload, Process};
    use crate::schedule::Segment;

    #[test]
    fn fjfdrr_case5_context_switches() {
        let w = builtin_case(5).unwrap();
        let m = compute_metrics(&fjfdrr(&w, Weights::default()).unwrap(), &w).unwrap();
        assert_eq!(m.context_switches, 14);
    }

    #[test]
    fn pbsrr_case3() {
        let w = builtin_case(3).unwrap();
        let m = compute_metrics(&pbsrr(&w, 15).unwrap(), &w).unwrap();
        assert_eq!(m.avg_turnaround, Fraction::new(961, 5));
        assert_eq!(m.avg_turnaround.to_decimal(2), "192.2");
        assert_eq!(m.avg_waiting.to_decimal(2), "133.8");
        assert_eq!(m.context_switches, 21);
    }

    #[test]
    fn fjfdrr_case2_waiting() {
        let w = builtin_case(2).unwrap();
        let m = compute_metrics(&fjfdrr(&w, Weights::default()).unwrap(), &w).unwrap();
        assert_eq!(m.avg_turnaround, Fraction::from_integer(282));
        assert_eq!(m.avg_waiting, Fraction::new(1795, 8));
    }

    #[test]
    fn single_segment() {
        let w = validate_workload(vec![Process::new("A", 0, 9, 1)]).unwrap();
        let m = compute_metrics(&fcfs(&w), &w).unwrap();
        assert_eq!(m.per_process[0].turnaround, 9);
        assert_eq!(m.per_process[0].waiting, 0);
        assert_eq!(m.context_switches, 0);
    }

    #[test]
    fn nonpreemptive_switches_are_n_minus_one() {
        let w = builtin_case(5).unwrap();
        assert_eq!(compute_metrics(&fcfs(&w), &w).unwrap().context_switches, 7);
    }

    #[test]
    fn fcfs_case1_waiting() {
        let w = builtin_case(1).unwrap();
        let m = compute_metrics(&fcfs(&w), &w).unwrap();
        assert_eq!(m.avg_waiting, Fraction::new(9 + 24 + 51 + 94, 5));
        assert_eq!(m.avg_waiting.to_decimal(2), "35.6");
    }

    #[test]
    fn arrival_offsets_turnaround() {
        let w = validate_workload(vec![Process::new("A", 0, 4, 1), Process::new("B", 2, 3, 1)])
            .unwrap();
        let m = compute_metrics(&fcfs(&w), &w).unwrap();
        assert_eq!(m.per_process[1].completion, 7);
        assert_eq!(m.per_process[1].turnaround, 5);
        assert_eq!(m.per_process[1].waiting, 2);
    }

    #[test]
    fn mismatches() {
        let w = builtin_case(4).unwrap();
        let mut s = fjfdrr(&w, Weights::default()).unwrap();
        s.segments.pop();
        assert!(matches!(
            compute_metrics(&s, &w),
            Err(Error::ScheduleWorkloadMismatch(_))
        ));

        let mut s = fjfdrr(&w, Weights::default()).unwrap();
        s.segments.push(Segment {
            pid: "Q9".into(),
            start: 155,
            end: 160,
        });
        assert!(matches!(
            compute_metrics(&s, &w),
            Err(Error::ScheduleWorkloadMismatch(_))
        ));

        let other = builtin_case(1).unwrap();
        assert!(compute_metrics(&fcfs(&other), &w).is_err());
    }
}
