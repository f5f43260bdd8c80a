use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Time in integer scheduler ticks.
pub type Tick = u64;

/// Process label, unique within a workload.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Pid(String);

impl Pid {
    pub fn new(id: impl Into<String>) -> Self {
        Pid(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Pid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Pid {
    fn from(s: &str) -> Self {
        Pid(s.to_owned())
    }
}

impl PartialEq<str> for Pid {
    fn eq(&self, other: &str) -> bool {
        self.0 == other
    }
}

impl PartialEq<&str> for Pid {
    fn eq(&self, other: &&str) -> bool {
        self.0 == *other
    }
}

/// One CPU-bound job. `user_priority` 1 is the most important.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Process {
    pub pid: Pid,
    pub arrival: Tick,
    pub burst: Tick,
    #[serde(rename = "priority")]
    pub user_priority: u32,
}

impl Process {
    pub fn new(pid: impl Into<String>, arrival: Tick, burst: Tick, user_priority: u32) -> Self {
        Process {
            pid: Pid::new(pid),
            arrival,
            burst,
            user_priority,
        }
    }
}

/// A validated, nonempty set of processes. Input order is kept because it
/// is the final tie-break key everywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Workload {
    processes: Vec<Process>,
}

impl Workload {
    pub fn processes(&self) -> &[Process] {
        &self.processes
    }

    pub fn len(&self) -> usize {
        self.processes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.processes.is_empty()
    }

    pub fn get(&self, pid: &Pid) -> Option<&Process> {
        self.processes.iter().find(|p| &p.pid == pid)
    }

    pub fn index_of(&self, pid: &Pid) -> Option<usize> {
        self.processes.iter().position(|p| &p.pid == pid)
    }

    pub fn total_burst(&self) -> Tick {
        self.processes.iter().map(|p| p.burst).sum()
    }

    pub fn all_arrive_at_zero(&self) -> bool {
        self.processes.iter().all(|p| p.arrival == 0)
    }

    pub(crate) fn require_zero_arrivals(&self) -> Result<()> {
        match self.processes.iter().find(|p| p.arrival != 0) {
            Some(p) => Err(Error::NonzeroArrival(p.pid.clone())),
            None => Ok(()),
        }
    }
}

impl<'a> IntoIterator for &'a Workload {
    type Item = &'a Process;
    type IntoIter = std::slice::Iter<'a, Process>;

    fn into_iter(self) -> Self::IntoIter {
        self.processes.iter()
    }
}

impl TryFrom<Vec<Process>> for Workload {
    type Error = Error;

    fn try_from(raw: Vec<Process>) -> Result<Self> {
        validate_workload(raw)
    }
}

pub fn validate_workload(raw: Vec<Process>) -> Result<Workload> {
    if raw.is_empty() {
        return Err(Error::EmptyWorkload);
    }
    let mut seen = HashSet::with_capacity(raw.len());
    for p in &raw {
        if !seen.insert(&p.pid) {
            return Err(Error::DuplicateId(p.pid.clone()));
        }
        if p.burst == 0 {
            return Err(Error::NonPositiveBurst(p.pid.clone()));
        }
        if p.user_priority == 0 {
            return Err(Error::NonPositivePriority(p.pid.clone()));
        }
    }
    Ok(Workload { processes: raw })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn case1() -> Vec<Process> {
        [(9, 5), (15, 2), (27, 4), (43, 1), (82, 3)]
            .iter()
            .enumerate()
            .map(|(i, &(b, up))| Process::new(format!("P{}", i + 1), 0, b, up))
            .collect()
    }

    #[test]
    fn accepts_case1() {
        let w = validate_workload(case1()).unwrap();
        assert_eq!(w.len(), 5);
        assert_eq!(w.processes()[3].pid, "P4");
        assert_eq!(w.total_burst(), 176);
    }

    #[test]
    fn rejects_empty() {
        assert_eq!(validate_workload(vec![]), Err(Error::EmptyWorkload));
    }

    #[test]
    fn rejects_zero_burst() {
        let raw = vec![Process::new("P1", 0, 0, 1)];
        assert_eq!(
            validate_workload(raw),
            Err(Error::NonPositiveBurst("P1".into()))
        );
    }

    #[test]
    fn rejects_zero_priority() {
        let raw = vec![Process::new("A", 0, 3, 1), Process::new("B", 0, 3, 0)];
        assert_eq!(
            validate_workload(raw),
            Err(Error::NonPositivePriority("B".into()))
        );
    }

    #[test]
    fn rejects_duplicate_id() {
        let raw = vec![Process::new("A", 0, 3, 1), Process::new("A", 0, 4, 2)];
        assert_eq!(validate_workload(raw), Err(Error::DuplicateId("A".into())));
    }
}
