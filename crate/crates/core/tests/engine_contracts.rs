//! Contracts of the trial engine: scheduling-independent aggregation,
//! sensible error-bar scaling, and independence of trials across substreams.

use wpdb_core::{
    accumulate_run, block_count, block_stats, estimate_mean_snr, run_trial_indexed, EhPolicy,
    SystemParams, TRIAL_BLOCK,
};

const SEED: u64 = 0x5eed_0005;

fn ts_half() -> EhPolicy {
    EhPolicy::time_switching(0.5).unwrap()
}

#[test]
fn out_of_order_blocks_fold_to_the_serial_result() {
    let params = SystemParams::new(4, 1.0, 1.0, 0.3).unwrap();
    let trials = 3 * TRIAL_BLOCK + 517; // deliberately not a multiple
    let serial = accumulate_run(&params, ts_half(), trials, SEED).unwrap();

    // Compute blocks in reverse order (as a worker pool might), fold in
    // block order.
    let nb = block_count(trials);
    let mut blocks: Vec<_> = (0..nb)
        .rev()
        .map(|b| (b, block_stats(&params, ts_half(), SEED, b, trials).unwrap()))
        .collect();
    blocks.sort_by_key(|&(b, _)| b);
    let folded = blocks
        .into_iter()
        .map(|(_, s)| s)
        .fold(Default::default(), |acc: wpdb_core::BlockStats, s| acc.merge(s));

    assert_eq!(serial, folded);
    assert_eq!(serial.trials(), trials);
    let a = serial.finalize().unwrap();
    let b = folded.finalize().unwrap();
    assert_eq!(a, b);
}

#[test]
fn quadrupling_trials_halves_the_std_error() {
    let params = SystemParams::new(5, 1.0, 1.0, 0.4).unwrap();
    let small = estimate_mean_snr(&params, ts_half(), 20_000, SEED).unwrap();
    let large = estimate_mean_snr(&params, ts_half(), 80_000, SEED).unwrap();
    let ratio = large.std_error / small.std_error;
    assert!(
        (ratio - 0.5).abs() < 0.1,
        "std_error ratio {ratio} not near 0.5"
    );
}

#[test]
fn trials_are_uncorrelated_across_substreams() {
    // Lag-1 autocorrelation of the SNR sequence over consecutive substream
    // indices stays below 0.01 at 10^5 trials.
    let params = SystemParams::new(5, 1.0, 1.0, 0.4).unwrap();
    let n = 100_000u64;
    let gammas: Vec<f64> = (0..n)
        .map(|t| {
            run_trial_indexed(&params, ts_half(), SEED, t)
                .unwrap()
                .0
                .gamma_d
        })
        .collect();
    let mean = gammas.iter().sum::<f64>() / n as f64;
    let var = gammas.iter().map(|g| (g - mean) * (g - mean)).sum::<f64>() / (n - 1) as f64;
    let cov = gammas
        .windows(2)
        .map(|w| (w[0] - mean) * (w[1] - mean))
        .sum::<f64>()
        / (n - 2) as f64;
    let rho = cov / var;
    assert!(rho.abs() < 0.01, "lag-1 autocorrelation {rho}");
}

#[test]
fn redraws_are_zero_in_practice() {
    let params = SystemParams::new(10, 1.0, 1.0, 0.5).unwrap();
    let stats = accumulate_run(&params, ts_half(), 50_000, SEED).unwrap();
    assert_eq!(stats.redraws(), 0);
}

#[test]
fn partial_final_block_counts_exactly() {
    let params = SystemParams::new(1, 1.0, 1.0, 0.0).unwrap();
    for trials in [2, TRIAL_BLOCK - 1, TRIAL_BLOCK, TRIAL_BLOCK + 1, 10_000] {
        let e = estimate_mean_snr(&params, ts_half(), trials, SEED).unwrap();
        assert_eq!(e.trials, trials);
    }
}
