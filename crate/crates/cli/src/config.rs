//! Sweep configuration: a JSON document that validates into a
//! [`SweepSpec`] plus an output destination before any computation starts.
//!
//! ```json
//! {
//!   "policy_kind": "ts",
//!   "fractions": [0.5],
//!   "sigma_theta_sq_grid": [0.0, 0.1, 0.2],
//!   "n_relays_grid": [2, 15],
//!   "eta": 1.0,
//!   "source_power": 1.0,
//!   "trials": 100000,
//!   "master_seed": 42,
//!   "noise_var": 1.0,
//!   "variants": ["corrected", "literal"],
//!   "output_path": "sweep.csv",
//!   "output_format": "csv"
//! }
//! ```
//!
//! `noise_var` and `variants` are optional (defaults: 1.0 and both
//! variants). `output_path` of `-` writes to standard output. The
//! `WPDB_SEED` environment variable overrides `master_seed`; an explicit
//! `--seed` flag overrides both.

use clap::ValueEnum;
use serde::Deserialize;
use wpdb_core::FormulaVariant;

use crate::sweep::{PolicyKind, SweepSpec};

/// Environment variable that overrides the config's master seed.
pub const SEED_ENV_VAR: &str = "WPDB_SEED";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VariantName {
    Corrected,
    Literal,
}

impl VariantName {
    pub fn to_variant(self) -> FormulaVariant {
        match self {
            VariantName::Corrected => FormulaVariant::Corrected,
            VariantName::Literal => FormulaVariant::CorollaryLiteral,
        }
    }
}

fn default_noise_var() -> f64 {
    1.0
}

fn default_variants() -> Vec<VariantName> {
    vec![VariantName::Corrected, VariantName::Literal]
}

/// The on-disk sweep configuration. Unknown fields are rejected so typos
/// fail loudly instead of silently running defaults.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub policy_kind: PolicyKind,
    pub fractions: Vec<f64>,
    pub sigma_theta_sq_grid: Vec<f64>,
    pub n_relays_grid: Vec<usize>,
    pub eta: f64,
    pub source_power: f64,
    pub trials: u64,
    pub master_seed: u64,
    #[serde(default = "default_noise_var")]
    pub noise_var: f64,
    #[serde(default = "default_variants")]
    pub variants: Vec<VariantName>,
    pub output_path: String,
    pub output_format: OutputFormat,
}

impl RunConfig {
    /// Parse a config document; errors carry serde_json's line/column
    /// diagnostics.
    pub fn from_json(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| format!("config: {e}"))
    }

    /// Validate into a runnable spec, applying a seed override when one is
    /// in effect.
    pub fn into_spec(self, seed_override: Option<u64>) -> Result<SweepSpec, String> {
        let spec = SweepSpec {
            policy_kind: self.policy_kind,
            fractions: self.fractions,
            sigma_theta_sq_grid: self.sigma_theta_sq_grid,
            n_relays_grid: self.n_relays_grid,
            eta: self.eta,
            source_power: self.source_power,
            noise_var: self.noise_var,
            trials: self.trials,
            master_seed: seed_override.unwrap_or(self.master_seed),
            variants: self.variants.iter().map(|v| v.to_variant()).collect(),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Seed precedence: explicit flag, then the environment variable, then the
/// config value (represented here by `None`).
pub fn resolve_seed(
    flag: Option<u64>,
    env_value: Option<&str>,
) -> Result<Option<u64>, String> {
    if flag.is_some() {
        return Ok(flag);
    }
    match env_value {
        None => Ok(None),
        Some(raw) => raw
            .trim()
            .parse::<u64>()
            .map(Some)
            .map_err(|_| format!("{SEED_ENV_VAR}={raw:?} is not a valid unsigned 64-bit seed")),
    }
}
