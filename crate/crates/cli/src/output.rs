//! Plot-ready emission of sweep results. CSV is the primary figure format
//! (fixed column order, 10 significant digits); JSON mirrors the same fields
//! at full float precision plus a metadata object, so a round trip through
//! serde reconstructs every numeric field exactly.

use std::io::{self, Write};

use serde::Serialize;

use crate::sweep::{SweepRow, SweepRun};

/// CSV column order; fixed, never reordered.
pub const CSV_HEADER: &str = "policy,fraction,sigma_theta_sq,n_relays,trials,mc_mean,\
mc_std_error,mc_ci95_lo,mc_ci95_hi,pred_corrected,pred_literal,mc_mean_db,\
pred_corrected_db,pred_literal_db";

/// Fixed 10-significant-digit decimal formatting. Values whose decimal
/// exponent falls outside [-4, 9] switch to scientific notation, mirroring
/// printf's `%g` selection rule but keeping trailing zeros so every field
/// has the full 10 digits.
pub fn format_sig10(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.9e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponential form");
    let exp: i32 = exp.parse().expect("numeric exponent");
    if !(-4..10).contains(&exp) {
        format!("{mantissa}e{exp}")
    } else {
        let decimals = (9 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    }
}

fn csv_line(row: &SweepRow) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
        row.policy,
        format_sig10(row.fraction),
        format_sig10(row.sigma_theta_sq),
        row.n_relays,
        row.mc.trials,
        format_sig10(row.mc.mean),
        format_sig10(row.mc.std_error),
        format_sig10(row.mc.ci95_lo),
        format_sig10(row.mc.ci95_hi),
        format_sig10(row.pred_corrected),
        format_sig10(row.pred_literal),
        format_sig10(row.mc_mean_db),
        format_sig10(row.pred_corrected_db),
        format_sig10(row.pred_literal_db),
    )
}

/// Write the sweep as CSV: header row, then one row per grid point in grid
/// order.
pub fn write_csv<W: Write>(out: &mut W, run: &SweepRun) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in &run.rows {
        writeln!(out, "{}", csv_line(row))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct JsonPredicted {
    corrected: f64,
    literal: f64,
}

#[derive(Serialize)]
struct JsonRow {
    policy: &'static str,
    fraction: f64,
    sigma_theta_sq: f64,
    n_relays: usize,
    trials: u64,
    mc_mean: f64,
    mc_std_error: f64,
    mc_ci95_lo: f64,
    mc_ci95_hi: f64,
    predicted: JsonPredicted,
    mc_mean_db: f64,
    predicted_db: JsonPredicted,
}

#[derive(Serialize)]
struct JsonMeta {
    master_seed: u64,
    version: &'static str,
    trials: u64,
    redraws: u64,
}

#[derive(Serialize)]
struct JsonDoc {
    metadata: JsonMeta,
    rows: Vec<JsonRow>,
}

/// Write the sweep as a JSON document with a metadata object and full-
/// precision numeric fields.
pub fn write_json<W: Write>(
    out: &mut W,
    run: &SweepRun,
    master_seed: u64,
    trials: u64,
) -> io::Result<()> {
    let doc = JsonDoc {
        metadata: JsonMeta {
            master_seed,
            version: env!("CARGO_PKG_VERSION"),
            trials,
            redraws: run.total_redraws,
        },
        rows: run
            .rows
            .iter()
            .map(|r| JsonRow {
                policy: r.policy.as_str(),
                fraction: r.fraction,
                sigma_theta_sq: r.sigma_theta_sq,
                n_relays: r.n_relays,
                trials: r.mc.trials,
                mc_mean: r.mc.mean,
                mc_std_error: r.mc.std_error,
                mc_ci95_lo: r.mc.ci95_lo,
                mc_ci95_hi: r.mc.ci95_hi,
                predicted: JsonPredicted {
                    corrected: r.pred_corrected,
                    literal: r.pred_literal,
                },
                mc_mean_db: r.mc_mean_db,
                predicted_db: JsonPredicted {
                    corrected: r.pred_corrected_db,
                    literal: r.pred_literal_db,
                },
            })
            .collect(),
    };
    serde_json::to_writer_pretty(&mut *out, &doc)?;
    writeln!(out)
}
