//! Synthetic workloads for the criterion benches.

use fitsched_core::{validate_workload, Process, Workload};

/// `n` processes arriving at 0 with bursts spread over `1..=max_burst` by a
/// fixed multiplicative step and priorities cycling through `1..=n`.
pub fn synthetic(n: usize, max_burst: u64) -> Workload {
    let procs = (0..n)
        .map(|i| {
            let burst = 1 + (i as u64 * 2_654_435_761) % max_burst;
            let priority = 1 + ((i * 7) % n) as u32;
            Process::new(format!("P{}", i + 1), 0, burst, priority)
        })
        .collect();
    validate_workload(procs).expect("synthetic workload is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn synthetic_is_valid_and_bounded() {
        let w = synthetic(64, 100);
        assert_eq!(w.len(), 64);
        assert!(w.processes().iter().all(|p| (1..=100).contains(&p.burst)));
    }
}
