//! Monte-Carlo trial engine.
//!
//! Trial `t` of a run draws everything it needs from
//! `RngStream::substream(master_seed, t)` in the fixed order
//! `(g_1, h_1, theta_1, g_2, h_2, theta_2, ..., w_D)`, so trials are
//! independent and any scheduling of them reproduces the same numbers.
//!
//! Aggregation is block-deterministic: trials are grouped into fixed blocks
//! of [`TRIAL_BLOCK`], each block is accumulated sequentially, and block
//! accumulators are folded in block order. Serial execution and any parallel
//! execution therefore produce bit-identical estimates. [`block_stats`] and
//! [`BlockStats::merge`] are public so external runners can distribute the
//! blocks while keeping that guarantee.
//!
//! In the probability-zero event that a relay-destination channel draw is
//! singular (|h| <= 1e-12), the whole trial is redrawn from a retry stream:
//! attempt `k` for trial `t` uses stream index `t + k * 2^56`. Trial counts
//! stay far below 2^56, so retry streams never collide with trial streams.
//! Redraws are counted and reported.

use alloc::vec::Vec;

use crate::math;
use crate::signal::{instantaneous_snr, RelayRealization, TrialRealization, SINGULAR_CHANNEL_EPS};
use crate::stats::Welford;
use crate::{EhPolicy, Error, Result, RngStream, SystemParams};

/// Number of trials accumulated per block. Fixed: changing it changes the
/// floating-point fold and breaks bit-compatibility with recorded outputs.
pub const TRIAL_BLOCK: u64 = 4096;

/// Stream-index stride separating successive redraw attempts of one trial
/// from the trial-index space.
const RETRY_STRIDE: u64 = 1 << 56;

/// Give up after this many redraws of a single trial; reaching it means the
/// parameters are pathological rather than unlucky.
const MAX_REDRAWS: u64 = 64;

/// A Monte-Carlo mean-SNR estimate with its sampling uncertainty.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct McEstimate {
    /// Sample mean of the instantaneous SNR, linear.
    pub mean: f64,
    /// Unbiased sample variance of the per-trial SNR.
    pub sample_var: f64,
    /// Standard error of the mean: sqrt(sample_var / trials).
    pub std_error: f64,
    pub trials: u64,
    /// Normal-approximation 95% interval: mean -/+ 1.96 std_error.
    pub ci95_lo: f64,
    pub ci95_hi: f64,
}

/// Accumulated statistics of one block of trials (plus redraw count), ready
/// to be merged in block order.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct BlockStats {
    welford: Welford,
    redraws: u64,
}

impl BlockStats {
    pub fn merge(self, other: Self) -> Self {
        Self {
            welford: self.welford.merge(other.welford),
            redraws: self.redraws + other.redraws,
        }
    }

    pub fn trials(&self) -> u64 {
        self.welford.count()
    }

    pub fn redraws(&self) -> u64 {
        self.redraws
    }

    /// Finish into an estimate. Needs at least two trials.
    pub fn finalize(&self) -> Result<McEstimate> {
        let n = self.welford.count();
        if n < 2 {
            return Err(Error::InvalidParameter("need at least 2 trials"));
        }
        let mean = self.welford.mean();
        let sample_var = self.welford.sample_variance();
        let std_error = math::sqrt(sample_var / n as f64);
        Ok(McEstimate {
            mean,
            sample_var,
            std_error,
            trials: n,
            ci95_lo: mean - 1.96 * std_error,
            ci95_hi: mean + 1.96 * std_error,
        })
    }
}

/// Draw one full system realization from `rng` and evaluate its SNR.
///
/// Per relay the draws are `g`, `h`, `theta` in that order; the destination
/// noise is drawn last. Returns a singular-channel error (without consuming
/// the rest of the trial) if any relay-destination channel is too small to
/// invert; the engine's retry policy then redraws the whole trial.
pub fn run_trial(
    params: &SystemParams,
    policy: EhPolicy,
    rng: &mut RngStream,
) -> Result<TrialRealization> {
    params.validate()?;
    policy.validate()?;

    let n = params.n_relays;
    let mut relays = Vec::with_capacity(n);
    let mut powers = Vec::with_capacity(n);
    let mut thetas = Vec::with_capacity(n);

    for _ in 0..n {
        let g = rng.draw_cn01();
        let h = rng.draw_cn01();
        let theta = rng.draw_phase_error(params.sigma_theta_sq)?;
        if h.magnitude() <= SINGULAR_CHANNEL_EPS {
            return Err(Error::SingularChannel);
        }
        let power = policy.relay_power(params.eta, params.source_power, g)?;
        relays.push(RelayRealization { g, h, theta, power });
        powers.push(power);
        thetas.push(theta);
    }
    let noise = rng.draw_cn01().scale(math::sqrt(params.noise_var));
    let gamma_d = instantaneous_snr(&powers, &thetas)? / params.noise_var;

    Ok(TrialRealization {
        relays,
        noise,
        gamma_d,
    })
}

/// [`run_trial`] on the substream for `trial_index`, applying the retry
/// policy on singular channels. Returns the realization and the number of
/// redraws it took (normally zero).
pub fn run_trial_indexed(
    params: &SystemParams,
    policy: EhPolicy,
    master_seed: u64,
    trial_index: u64,
) -> Result<(TrialRealization, u64)> {
    let mut redraws: u64 = 0;
    loop {
        let stream = trial_index.wrapping_add(redraws.wrapping_mul(RETRY_STRIDE));
        let mut rng = RngStream::substream(master_seed, stream);
        match run_trial(params, policy, &mut rng) {
            Ok(trial) => return Ok((trial, redraws)),
            Err(Error::SingularChannel) if redraws < MAX_REDRAWS => redraws += 1,
            Err(e) => return Err(e),
        }
    }
}

/// Number of fixed-size blocks covering `trials`.
pub fn block_count(trials: u64) -> u64 {
    trials.div_ceil(TRIAL_BLOCK)
}

/// Accumulate block `block_index` of a `trials`-long run: trial indices
/// `[block_index * TRIAL_BLOCK, min((block_index + 1) * TRIAL_BLOCK, trials))`
/// in increasing order.
pub fn block_stats(
    params: &SystemParams,
    policy: EhPolicy,
    master_seed: u64,
    block_index: u64,
    trials: u64,
) -> Result<BlockStats> {
    let first = block_index * TRIAL_BLOCK;
    let last = (first + TRIAL_BLOCK).min(trials);
    let mut stats = BlockStats::default();
    for t in first..last {
        let (trial, redraws) = run_trial_indexed(params, policy, master_seed, t)?;
        stats.welford.push(trial.gamma_d);
        stats.redraws += redraws;
    }
    Ok(stats)
}

/// Accumulate all blocks of a run serially, folding them in block order.
/// Any parallel runner that folds the same [`block_stats`] results in the
/// same order produces this exact value.
pub fn accumulate_run(
    params: &SystemParams,
    policy: EhPolicy,
    trials: u64,
    master_seed: u64,
) -> Result<BlockStats> {
    if trials < 2 {
        return Err(Error::InvalidParameter("need at least 2 trials"));
    }
    params.validate()?;
    policy.validate()?;
    let mut acc = BlockStats::default();
    for b in 0..block_count(trials) {
        acc = acc.merge(block_stats(params, policy, master_seed, b, trials)?);
    }
    Ok(acc)
}

/// Estimate the mean SNR over `trials` independent trials on substreams
/// `0..trials` of `master_seed`.
pub fn estimate_mean_snr(
    params: &SystemParams,
    policy: EhPolicy,
    trials: u64,
    master_seed: u64,
) -> Result<McEstimate> {
    accumulate_run(params, policy, trials, master_seed)?.finalize()
}
