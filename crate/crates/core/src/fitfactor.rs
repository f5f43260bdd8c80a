//! Fit-factor ordering.
//!
//! Each process gets a shortest-burst rank `sp` (1 = shortest) and a fit
//! factor `f = up * up_weight + sp * bt_weight`. Lower `f` runs first; ties
//! go to the smaller user priority, then to workload input order.

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::process::{Pid, Workload};

/// Weights applied to user priority and burst rank. Both positive, summing
/// to one. Defaults to 60% priority / 40% burst.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Weights {
    up_weight: Fraction,
    bt_weight: Fraction,
}

impl Default for Weights {
    fn default() -> Self {
        Weights {
            up_weight: Fraction::new(3, 5),
            bt_weight: Fraction::new(2, 5),
        }
    }
}

impl Weights {
    pub fn new(up_weight: Fraction, bt_weight: Fraction) -> Result<Self> {
        if !up_weight.is_positive() || !bt_weight.is_positive() {
            return Err(Error::InvalidWeights(format!(
                "weights must be positive, got {up_weight} and {bt_weight}"
            )));
        }
        if up_weight + bt_weight != Fraction::from_integer(1) {
            return Err(Error::InvalidWeights(format!(
                "weights must sum to 1, got {up_weight} + {bt_weight}"
            )));
        }
        Ok(Weights {
            up_weight,
            bt_weight,
        })
    }

    /// Builds weights from an integer ratio `up:bt`, e.g. `3:2` for 60/40.
    pub fn from_ratio(up: u32, bt: u32) -> Result<Self> {
        if up == 0 || bt == 0 {
            return Err(Error::InvalidWeights(format!(
                "ratio {up}:{bt} has a zero part"
            )));
        }
        let total = i64::from(up) + i64::from(bt);
        Weights::new(
            Fraction::new(up.into(), total),
            Fraction::new(bt.into(), total),
        )
    }

    pub fn up_weight(&self) -> Fraction {
        self.up_weight
    }

    pub fn bt_weight(&self) -> Fraction {
        self.bt_weight
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankEntry {
    pub pid: Pid,
    pub sp: u32,
    pub f: Fraction,
}

/// Per-process ranks (in workload order) plus the resulting run order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FitRanking {
    pub per_process: Vec<RankEntry>,
    pub order: Vec<Pid>,
    indices: Vec<usize>,
}

impl FitRanking {
    pub fn get(&self, pid: &Pid) -> Option<&RankEntry> {
        self.per_process.iter().find(|e| &e.pid == pid)
    }

    /// Run order as workload indices.
    pub fn order_indices(&self) -> &[usize] {
        &self.indices
    }
}

/// Shortest-burst ranks, indexed like the workload. Equal bursts are ranked
/// by input order.
pub(crate) fn sp_ranks(workload: &Workload) -> Vec<u32> {
    let procs = workload.processes();
    let mut by_burst: Vec<usize> = (0..procs.len()).collect();
    by_burst.sort_by_key(|&i| procs[i].burst);
    let mut ranks = vec![0; procs.len()];
    for (rank, &i) in by_burst.iter().enumerate() {
        ranks[i] = rank as u32 + 1;
    }
    ranks
}

pub fn assign_sp_ranks(workload: &Workload) -> Vec<(Pid, u32)> {
    workload
        .processes()
        .iter()
        .zip(sp_ranks(workload))
        .map(|(p, sp)| (p.pid.clone(), sp))
        .collect()
}

pub fn fit_factor(up: u32, sp: u32, weights: Weights) -> Fraction {
    Fraction::from_integer(up.into()) * weights.up_weight
        + Fraction::from_integer(sp.into()) * weights.bt_weight
}

pub fn fjfdrr_order(workload: &Workload, weights: Weights) -> FitRanking {
    let procs = workload.processes();
    let ranks = sp_ranks(workload);
    let factors: Vec<Fraction> = procs
        .iter()
        .zip(&ranks)
        .map(|(p, &sp)| fit_factor(p.user_priority, sp, weights))
        .collect();

    let mut indices: Vec<usize> = (0..procs.len()).collect();
    // stable sort keeps input order as the last tie-break
    indices.sort_by(|&a, &b| {
        factors[a]
            .cmp(&factors[b])
            .then_with(|| procs[a].user_priority.cmp(&procs[b].user_priority))
    });

    FitRanking {
        per_process: procs
            .iter()
            .zip(ranks.iter().zip(&factors))
            .map(|(p, (&sp, &f))| RankEntry {
                pid: p.pid.clone(),
                sp,
                f,
            })
            .collect(),
        order: indices.iter().map(|&i| procs[i].pid.clone()).collect(),
        indices,
    }
}
