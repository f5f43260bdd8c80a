//! Time-quantum policies.

use crate::error::{Error, Result};
use crate::process::Tick;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuantumPolicy {
    /// Recomputed each round as the median of unfinished remaining bursts.
    MedianDynamic,
    /// Fixed slice length.
    Static(Tick),
}

impl QuantumPolicy {
    pub fn fixed(q: Tick) -> Result<Self> {
        if q == 0 {
            return Err(Error::NonPositiveQuantum);
        }
        Ok(QuantumPolicy::Static(q))
    }
}

/// Median of the remaining bursts. An even count takes the floor of the mean
/// of the two middle values: `{23, 86}` gives 54.
pub fn median_quantum(remaining: &[Tick]) -> Result<Tick> {
    if remaining.is_empty() {
        return Err(Error::EmptyRemaining);
    }
    let mut sorted = remaining.to_vec();
    sorted.sort_unstable();
    let mid = sorted.len() / 2;
    Ok(if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        // no overflow: both halves fit
        sorted[mid - 1] / 2 + sorted[mid] / 2 + (sorted[mid - 1] % 2 + sorted[mid] % 2) / 2
    })
}

pub fn next_quantum(policy: QuantumPolicy, remaining: &[Tick]) -> Result<Tick> {
    if remaining.is_empty() {
        return Err(Error::EmptyRemaining);
    }
    match policy {
        QuantumPolicy::MedianDynamic => median_quantum(remaining),
        QuantumPolicy::Static(q) => Ok(q),
    }
}
