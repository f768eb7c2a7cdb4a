//! Self-check battery behind `wpdb validate`: re-derives the headline
//! quantitative claims at runtime and prints one PASS/FAIL line per
//! property, with measured vs expected values.

use wpdb_core::{
    exact_mean_snr, instantaneous_snr, mean_x, predict_mean_snr, received_signal,
    received_signal_reduced, run_trial, snr_to_db, var_x, var_y, ComplexGain, EhPolicy,
    FormulaVariant, RngStream, SystemParams,
};

use crate::runner::estimate_mean_snr_parallel;

/// Outcome of one property check. `informational` lines report a measurement
/// without affecting the overall verdict.
pub struct PropertyResult {
    pub name: &'static str,
    pub pass: bool,
    pub informational: bool,
    pub detail: String,
}

impl PropertyResult {
    fn check(name: &'static str, pass: bool, detail: String) -> Self {
        Self {
            name,
            pass,
            informational: false,
            detail,
        }
    }

    fn info(name: &'static str, detail: String) -> Self {
        Self {
            name,
            pass: true,
            informational: true,
            detail,
        }
    }

    pub fn line(&self) -> String {
        let tag = if self.informational {
            "INFO"
        } else if self.pass {
            "PASS"
        } else {
            "FAIL"
        };
        format!("{tag} {}: {}", self.name, self.detail)
    }
}

fn ts(alpha: f64) -> EhPolicy {
    EhPolicy::time_switching(alpha).unwrap()
}

fn ps(rho: f64) -> EhPolicy {
    EhPolicy::power_splitting(rho).unwrap()
}

/// Run every property with `trials` Monte-Carlo trials per grid point under
/// `seed`. Deterministic for a fixed (trials, seed) pair.
pub fn run_battery(trials: u64, seed: u64) -> Vec<PropertyResult> {
    let mut results = Vec::new();
    results.push(corrected_matches_monte_carlo(trials, seed));
    results.extend(sampled_moments(seed));
    results.push(ts_ps_gap());
    results.push(n_squared_gain());
    results.push(signal_reduction(seed));
    results.push(moment_closure());
    results
}

/// True when every non-informational property passed.
pub fn all_passed(results: &[PropertyResult]) -> bool {
    results.iter().all(|r| r.pass)
}

fn corrected_matches_monte_carlo(trials: u64, seed: u64) -> PropertyResult {
    let mut worst_z = 0.0f64;
    let mut worst_point = String::new();
    for &n in &[2usize, 15] {
        for &s in &[0.0, 0.5] {
            for policy in [ts(0.5), ps(0.5)] {
                let params = match SystemParams::new(n, 1.0, 1.0, s) {
                    Ok(p) => p,
                    Err(e) => return PropertyResult::check("closed_form_vs_mc", false, e.to_string()),
                };
                let exact = exact_mean_snr(&params, policy).unwrap();
                let (mc, _) = match estimate_mean_snr_parallel(&params, policy, trials, seed) {
                    Ok(v) => v,
                    Err(e) => return PropertyResult::check("closed_form_vs_mc", false, e.to_string()),
                };
                let z = (mc.mean - exact).abs() / mc.std_error;
                if z > worst_z {
                    worst_z = z;
                    worst_point = format!(
                        "N={n} sigma_theta_sq={s} {policy:?}: mc={:.6} exact={exact:.6}",
                        mc.mean
                    );
                }
            }
        }
    }
    PropertyResult::check(
        "closed_form_vs_mc",
        worst_z <= 3.0,
        format!("worst |mc-exact| = {worst_z:.2} std errors (limit 3.0) at {worst_point}"),
    )
}

fn sampled_moments(seed: u64) -> Vec<PropertyResult> {
    // Per-relay moments of X = sqrt(P) cos(theta), Y = sqrt(P) sin(theta)
    // at lambda_p = 0.5, sigma_theta_sq = 0.5, against both variance
    // variants. 10^6 draws puts the sampling error well under the 1% gate.
    let draws = 1_000_000u64;
    let (lambda, sigma, s) = (0.5, 1.0, 0.5);
    let policy = ts(0.5);
    let mut rng = RngStream::substream(seed, 0xACC);
    let (mut sx, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for _ in 0..draws {
        let p = policy.relay_power(1.0, 1.0, rng.draw_cn01()).unwrap();
        let t = rng.draw_phase_error(s).unwrap();
        let (sin_t, cos_t) = t.sin_cos();
        let x = p.sqrt() * cos_t;
        let y = p.sqrt() * sin_t;
        sx += x;
        sxx += x * x;
        syy += y * y;
    }
    let inv = 1.0 / draws as f64;
    let mx = sx * inv;
    let vx = sxx * inv - mx * mx;
    let vy = syy * inv; // E[Y] = 0

    let mx_pred = mean_x(sigma, s);
    let vx_corrected = var_x(lambda, s, FormulaVariant::Corrected);
    let vx_literal = var_x(lambda, s, FormulaVariant::CorollaryLiteral);
    let vy_pred = var_y(lambda, s);

    let rel = |a: f64, b: f64| (a - b).abs() / b;
    let worst = rel(mx, mx_pred).max(rel(vx, vx_corrected)).max(rel(vy, vy_pred));
    vec![
        PropertyResult::check(
            "per_relay_moments",
            worst < 0.01,
            format!(
                "worst relative gap {worst:.5} (limit 0.01); mean {mx:.5}/{mx_pred:.5}, \
                 var_i {vx:.5}/{vx_corrected:.5}, var_q {vy:.5}/{vy_pred:.5}"
            ),
        ),
        PropertyResult::info(
            "literal_variant_gap",
            format!(
                "sampled Var[X] {vx:.5} vs literal formula {vx_literal:.5}: \
                 relative gap {:.1}% (corrected formula gap {:.2}%)",
                100.0 * rel(vx, vx_literal),
                100.0 * rel(vx, vx_corrected),
            ),
        ),
    ]
}

fn ts_ps_gap() -> PropertyResult {
    let params = SystemParams::new(15, 1.0, 1.0, 0.5).unwrap();
    let mut detail = String::new();
    let mut ok = true;
    for f in [0.5, 0.6, 0.8] {
        let t = exact_mean_snr(&params, ts(f)).unwrap();
        let p = exact_mean_snr(&params, ps(f)).unwrap();
        let ratio = t / p;
        let expect = 1.0 / (1.0 - f);
        let gap_db = snr_to_db(ratio).unwrap();
        ok &= (ratio - expect).abs() <= 1e-12 * expect && gap_db >= 3.0;
        detail.push_str(&format!("f={f}: ratio {ratio:.6} gap {gap_db:.4} dB; "));
    }
    PropertyResult::check(
        "ts_over_ps_gap",
        ok,
        format!("{detail}expected ratio 1/(1-f), gap at least 3.0103 dB"),
    )
}

fn n_squared_gain() -> PropertyResult {
    let at = |n: usize| {
        let params = SystemParams::new(n, 1.0, 1.0, 0.0).unwrap();
        exact_mean_snr(&params, ts(0.5)).unwrap()
    };
    let ratio = at(128) / at(64);
    let mut coherent_ok = true;
    for n in 1..=100usize {
        let snr = instantaneous_snr(&vec![1.0; n], &vec![0.0; n]).unwrap();
        coherent_ok &= snr == (n * n) as f64;
    }
    PropertyResult::check(
        "n_squared_gain",
        (3.95..=4.0).contains(&ratio) && coherent_ok,
        format!(
            "mean_snr(128)/mean_snr(64) = {ratio:.6} (expected in [3.95, 4.00]); \
             unit-power coherent SNR exact for N=1..100: {coherent_ok}"
        ),
    )
}

fn signal_reduction(seed: u64) -> PropertyResult {
    let policy = ts(0.5);
    let mut worst = 0.0f64;
    for &n in &[1usize, 5, 20] {
        let params = SystemParams::new(n, 1.0, 1.0, 0.7).unwrap();
        for i in 0..3_400u64 {
            let mut rng = RngStream::substream(seed, 0xE0_0000 + i);
            let trial = run_trial(&params, policy, &mut rng).unwrap();
            let full = received_signal(&trial.relays, ComplexGain::ONE, trial.noise).unwrap();
            let reduced = received_signal_reduced(&trial.relays, ComplexGain::ONE, trial.noise);
            let d = full - reduced;
            worst = worst.max(d.re.abs()).max(d.im.abs());
        }
    }
    PropertyResult::check(
        "signal_path_reduction",
        worst < 1e-12,
        format!("max per-component |full - reduced| = {worst:.3e} over 10200 draws (limit 1e-12)"),
    )
}

fn moment_closure() -> PropertyResult {
    let mut worst = 0.0f64;
    for &lambda in &[0.125f64, 0.5, 2.0] {
        let sigma = (1.0 / (2.0 * lambda)).sqrt();
        for &s in &[0.0, 0.5, 1.0, 2.0] {
            let lhs = var_x(lambda, s, FormulaVariant::Corrected) + mean_x(sigma, s).powi(2);
            let rhs = (1.0 / lambda) * (1.0 + (-2.0 * s).exp()) / 2.0;
            worst = worst.max((lhs - rhs).abs() / rhs);
        }
    }
    // The two variants must also coincide at zero phase error.
    let params = SystemParams::new(15, 1.0, 1.0, 0.0).unwrap();
    let c = predict_mean_snr(&params, ts(0.5), FormulaVariant::Corrected).unwrap();
    let l = predict_mean_snr(&params, ts(0.5), FormulaVariant::CorollaryLiteral).unwrap();
    let coincide = (c.mean_snr - l.mean_snr).abs() <= 1e-12 * c.mean_snr;
    PropertyResult::check(
        "moment_closure",
        worst <= 1e-12 && coincide,
        format!(
            "worst E[X^2] identity gap {worst:.3e} (limit 1e-12); \
             variants coincide at zero phase error: {coincide}"
        ),
    )
}
