use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fitsched_core::io::{emit_workload, WorkloadFormat};
use fitsched_core::{validate_workload, Process};

use crate::args::{BurstOrder, GenArgs};
use crate::commands::{CliError, CmdResult};

/// Bursts uniform in `1..=max_burst`, arranged per `order`; priorities are a
/// shuffled `1..=n`; every arrival is 0.
pub fn gen(args: &GenArgs) -> CmdResult {
    if args.n < 1 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let n = u32::try_from(args.n).map_err(|_| CliError::Usage("--n is too large".into()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);

    let mut bursts: Vec<u64> = (0..n)
        .map(|_| rng.random_range(1..=args.max_burst))
        .collect();
    match args.order {
        BurstOrder::Increasing => bursts.sort_unstable(),
        BurstOrder::Decreasing => bursts.sort_unstable_by(|a, b| b.cmp(a)),
        BurstOrder::Random => {}
    }
    let mut priorities: Vec<u32> = (1..=n).collect();
    priorities.shuffle(&mut rng);

    let procs = bursts
        .into_iter()
        .zip(priorities)
        .enumerate()
        .map(|(i, (burst, up))| Process::new(format!("P{}", i + 1), 0, burst, up))
        .collect();
    let workload = validate_workload(procs)?;
    Ok(emit_workload(&workload, WorkloadFormat::Csv))
}
