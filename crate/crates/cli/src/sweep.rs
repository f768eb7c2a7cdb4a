//! Parameter-grid sweeps: the Cartesian product of harvesting fractions,
//! phase-error variances and relay counts, with one Monte-Carlo estimate and
//! both closed-form predictions per point.

// `!(x >= 0.0)` in grid validation rejects NaN along with negative values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use wpdb_core::{
    exact_mean_snr, predict_mean_snr, snr_to_db, EhPolicy, FormulaVariant, McEstimate,
    SystemParams,
};

use crate::runner::estimate_mean_snr_parallel;

/// Which energy-harvesting family the sweep runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolicyKind {
    /// Time-switching: the fraction is the harvesting time share alpha.
    Ts,
    /// Power-splitting: the fraction is the diverted power share rho.
    Ps,
}

impl PolicyKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            PolicyKind::Ts => "ts",
            PolicyKind::Ps => "ps",
        }
    }

    pub fn policy(&self, fraction: f64) -> wpdb_core::Result<EhPolicy> {
        match self {
            PolicyKind::Ts => EhPolicy::time_switching(fraction),
            PolicyKind::Ps => EhPolicy::power_splitting(fraction),
        }
    }
}

impl core::fmt::Display for PolicyKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A full sweep description. Grid order is fixed: fractions outermost, then
/// phase-error variances, then relay counts.
#[derive(Clone, Debug)]
pub struct SweepSpec {
    pub policy_kind: PolicyKind,
    pub fractions: Vec<f64>,
    pub sigma_theta_sq_grid: Vec<f64>,
    pub n_relays_grid: Vec<usize>,
    pub eta: f64,
    pub source_power: f64,
    pub noise_var: f64,
    pub trials: u64,
    pub master_seed: u64,
    /// Which prediction variants the caller asked for. Both are always
    /// computed for the output columns; this records the request.
    pub variants: Vec<FormulaVariant>,
}

/// One grid point's results.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub policy: PolicyKind,
    pub fraction: f64,
    pub sigma_theta_sq: f64,
    pub n_relays: usize,
    pub mc: McEstimate,
    pub redraws: u64,
    pub pred_corrected: f64,
    pub pred_literal: f64,
    pub mc_mean_db: f64,
    pub pred_corrected_db: f64,
    pub pred_literal_db: f64,
}

/// All rows of a sweep, in grid order, plus run-level counters.
#[derive(Clone, Debug)]
pub struct SweepRun {
    pub rows: Vec<SweepRow>,
    pub total_redraws: u64,
}

impl SweepSpec {
    /// Check every grid point before any computation; the error names the
    /// offending entry.
    pub fn validate(&self) -> Result<(), String> {
        if self.fractions.is_empty() {
            return Err("fractions grid is empty".into());
        }
        if self.sigma_theta_sq_grid.is_empty() {
            return Err("sigma_theta_sq_grid is empty".into());
        }
        if self.n_relays_grid.is_empty() {
            return Err("n_relays_grid is empty".into());
        }
        if self.trials < 2 {
            return Err(format!("trials = {} (need at least 2)", self.trials));
        }
        if self.variants.is_empty() {
            return Err("variants list is empty".into());
        }
        for (i, &f) in self.fractions.iter().enumerate() {
            self.policy_kind
                .policy(f)
                .map_err(|e| format!("fractions[{i}] = {f}: {e}"))?;
        }
        for (i, &s) in self.sigma_theta_sq_grid.iter().enumerate() {
            if !(s >= 0.0) {
                return Err(format!("sigma_theta_sq_grid[{i}] = {s}: must be >= 0"));
            }
        }
        for (i, &n) in self.n_relays_grid.iter().enumerate() {
            if n < 1 {
                return Err(format!("n_relays_grid[{i}] = {n}: must be >= 1"));
            }
        }
        // Any parameter problem shared by the whole grid surfaces here.
        let probe = SystemParams {
            n_relays: self.n_relays_grid[0],
            source_power: self.source_power,
            eta: self.eta,
            sigma_theta_sq: self.sigma_theta_sq_grid[0],
            noise_var: self.noise_var,
        };
        probe.validate().map_err(|e| e.to_string())?;
        self.policy_kind
            .policy(self.fractions[0])
            .and_then(|p| p.derived_dist(self.eta, self.source_power))
            .map_err(|e| e.to_string())?;
        Ok(())
    }

    fn params_at(&self, sigma_theta_sq: f64, n_relays: usize) -> SystemParams {
        SystemParams {
            n_relays,
            source_power: self.source_power,
            eta: self.eta,
            sigma_theta_sq,
            noise_var: self.noise_var,
        }
    }
}

/// Run the whole grid. Rows come back in grid order; every row carries the
/// Monte-Carlo estimate (all rows share `master_seed`, so curves over the
/// grid are positively coupled and plot smoothly) and both predictions.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepRun, String> {
    spec.validate()?;
    let mut rows = Vec::new();
    let mut total_redraws = 0;
    for &fraction in &spec.fractions {
        let policy = spec.policy_kind.policy(fraction).map_err(|e| e.to_string())?;
        for &sigma_theta_sq in &spec.sigma_theta_sq_grid {
            for &n_relays in &spec.n_relays_grid {
                let params = spec.params_at(sigma_theta_sq, n_relays);
                let (mc, redraws) =
                    estimate_mean_snr_parallel(&params, policy, spec.trials, spec.master_seed)
                        .map_err(|e| {
                            format!(
                                "point (fraction={fraction}, sigma_theta_sq={sigma_theta_sq}, \
                                 n_relays={n_relays}): {e}"
                            )
                        })?;
                let pred_corrected = exact_mean_snr(&params, policy).map_err(|e| e.to_string())?;
                let pred_literal =
                    predict_mean_snr(&params, policy, FormulaVariant::CorollaryLiteral)
                        .map_err(|e| e.to_string())?
                        .mean_snr;
                let row = SweepRow {
                    policy: spec.policy_kind,
                    fraction,
                    sigma_theta_sq,
                    n_relays,
                    mc,
                    redraws,
                    pred_corrected,
                    pred_literal,
                    mc_mean_db: snr_to_db(mc.mean).map_err(|e| e.to_string())?,
                    pred_corrected_db: snr_to_db(pred_corrected).map_err(|e| e.to_string())?,
                    pred_literal_db: snr_to_db(pred_literal).map_err(|e| e.to_string())?,
                };
                total_redraws += redraws;
                rows.push(row);
            }
        }
    }
    Ok(SweepRun { rows, total_redraws })
}
