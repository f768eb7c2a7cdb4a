//! Front-end for the wirelessly powered distributed-beamforming simulator:
//! parallel Monte-Carlo runs, parameter sweeps, plot-ready CSV/JSON output
//! and a self-check battery. All heavy lifting lives in `wpdb-core`; this
//! crate only schedules it and moves bytes.

pub mod config;
pub mod output;
pub mod runner;
pub mod sweep;
pub mod validate;

pub use config::{resolve_seed, OutputFormat, RunConfig, VariantName, SEED_ENV_VAR};
pub use output::{format_sig10, write_csv, write_json, CSV_HEADER};
pub use runner::{estimate_mean_snr_parallel, init_worker_pool};
pub use sweep::{run_sweep, PolicyKind, SweepRow, SweepRun, SweepSpec};
