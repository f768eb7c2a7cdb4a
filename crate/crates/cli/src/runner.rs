//! Parallel mean-SNR estimation. Work is split into the fixed trial blocks
//! defined by the core engine; blocks run on any number of rayon workers and
//! are folded in block order, so the result is bit-identical to the serial
//! fold no matter the worker count.

use rayon::prelude::*;
use wpdb_core::{block_count, block_stats, BlockStats, EhPolicy, McEstimate, SystemParams};

/// Configure the global worker pool. `None` keeps rayon's default. Call at
/// most once, before any parallel work; the cap changes throughput only,
/// never results.
pub fn init_worker_pool(workers: Option<usize>) -> Result<(), String> {
    if let Some(n) = workers {
        if n == 0 {
            return Err("--workers must be >= 1".into());
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    Ok(())
}

/// Mean-SNR estimate over `trials` substreams of `master_seed`, computed in
/// parallel. Returns the estimate and the singular-channel redraw count.
pub fn estimate_mean_snr_parallel(
    params: &SystemParams,
    policy: EhPolicy,
    trials: u64,
    master_seed: u64,
) -> wpdb_core::Result<(McEstimate, u64)> {
    if trials < 2 {
        return Err(wpdb_core::Error::InvalidParameter("need at least 2 trials"));
    }
    params.validate()?;
    policy.validate()?;

    let blocks: Vec<wpdb_core::Result<BlockStats>> = (0..block_count(trials))
        .into_par_iter()
        .map(|b| block_stats(params, policy, master_seed, b, trials))
        .collect();

    let mut acc = BlockStats::default();
    for block in blocks {
        acc = acc.merge(block?);
    }
    Ok((acc.finalize()?, acc.redraws()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use wpdb_core::estimate_mean_snr;

    #[test]
    fn parallel_equals_serial_bitwise() {
        let params = SystemParams::new(4, 1.0, 1.0, 0.3).unwrap();
        let policy = EhPolicy::time_switching(0.5).unwrap();
        for trials in [100u64, 5000, 20_000] {
            let serial = estimate_mean_snr(&params, policy, trials, 17).unwrap();
            let (parallel, redraws) =
                estimate_mean_snr_parallel(&params, policy, trials, 17).unwrap();
            assert_eq!(serial, parallel);
            assert_eq!(redraws, 0);
        }
    }

    #[test]
    fn rejects_degenerate_inputs() {
        let params = SystemParams::new(4, 1.0, 1.0, 0.3).unwrap();
        let policy = EhPolicy::time_switching(0.5).unwrap();
        assert!(estimate_mean_snr_parallel(&params, policy, 1, 0).is_err());
        let bad = EhPolicy::TimeSwitching { alpha: 0.0 };
        assert!(estimate_mean_snr_parallel(&params, bad, 100, 0).is_err());
    }
}
