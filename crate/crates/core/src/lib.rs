//! Simulation and analytics core for a two-hop network in which `N` relay
//! nodes harvest RF energy from a source transmission (time-switching or
//! power-splitting) and forward the source's message to a destination via
//! distributed transmit beamforming under Gaussian phase error.
//!
//! The crate has two halves that check each other:
//!
//! * a Monte-Carlo trial engine ([`run_trial`], [`estimate_mean_snr`]) that
//!   draws Rayleigh channels, relay powers and phase errors and evaluates the
//!   instantaneous destination SNR, and
//! * closed-form mean-SNR predictors ([`predict_mean_snr`],
//!   [`exact_mean_snr`]) built from the first and second moments of the
//!   in-phase / quadrature sums of the beamformed signal.
//!
//! All randomness flows through [`RngStream`] values derived from a single
//! master seed, so every estimate is reproducible bit-for-bit regardless of
//! how trials are scheduled across workers.
//!
//! The crate is `no_std`-compatible (`alloc` is required): disable the
//! default `std` feature and enable `libm` instead.

#![cfg_attr(not(feature = "std"), no_std)]
// Parameter checks negate comparisons on purpose: `!(x >= 0.0)` rejects NaN
// along with the out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::manual_range_contains)]

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("wpdb-core needs either the `std` or the `libm` feature");

extern crate alloc;

mod analytic;
mod complex;
mod error;
mod math;
mod mc;
mod params;
mod policy;
mod rng;
mod signal;
mod stats;

pub use analytic::{
    exact_mean_snr, mean_x, predict_mean_snr, snr_to_db, var_x, var_y, FormulaVariant,
    MeanSnrPrediction,
};
pub use complex::ComplexGain;
pub use error::Error;
pub use mc::{
    accumulate_run, block_count, block_stats, estimate_mean_snr, run_trial, run_trial_indexed,
    BlockStats, McEstimate, TRIAL_BLOCK,
};
pub use params::SystemParams;
pub use policy::{DerivedDist, EhPolicy};
pub use rng::RngStream;
pub use signal::{
    instantaneous_snr, precoding_weight, received_signal, received_signal_reduced,
    RelayRealization, TrialRealization, SINGULAR_CHANNEL_EPS,
};
pub use stats::Welford;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
