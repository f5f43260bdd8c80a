use serde::{Deserialize, Serialize};

use crate::process::{Pid, Tick};

/// Contiguous execution of one process over `[start, end)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Segment {
    pub pid: Pid,
    pub start: Tick,
    pub end: Tick,
}

impl Segment {
    pub fn new(pid: Pid, start: Tick, end: Tick) -> Self {
        debug_assert!(start < end, "zero-length segment for {pid}");
        Segment { pid, start, end }
    }

    pub fn len(&self) -> Tick {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start >= self.end
    }
}

/// Gantt timeline produced by one algorithm run.
///
/// `quantum_history` holds one entry per round for round-based algorithms
/// and is empty for the non-preemptive baselines.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Schedule {
    pub algorithm: String,
    pub segments: Vec<Segment>,
    pub quantum_history: Vec<Tick>,
}

impl Schedule {
    pub fn makespan(&self) -> Tick {
        self.segments.last().map_or(0, |s| s.end)
    }

    /// Total executed ticks for `pid`.
    pub fn executed(&self, pid: &Pid) -> Tick {
        self.segments
            .iter()
            .filter(|s| &s.pid == pid)
            .map(Segment::len)
            .sum()
    }

    pub fn rounds(&self) -> usize {
        self.quantum_history.len()
    }

    /// True when each segment starts exactly where the previous one ended.
    pub fn is_contiguous(&self) -> bool {
        self.segments.windows(2).all(|w| w[0].end == w[1].start)
    }
}
