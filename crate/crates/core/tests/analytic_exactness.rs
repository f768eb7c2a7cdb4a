//! The closed-form predictors against Monte-Carlo: the corrected moments
//! make the mean-SNR expression exact at every N, not just in the large-N
//! limit. Also the algebraic structure of the prediction: monotonicity,
//! the TS/PS ratio, moment closure, and the N^2 leading order.

mod common;

use common::{gaussian_expect, rayleigh_expect};
use wpdb_core::{
    estimate_mean_snr, exact_mean_snr, mean_x, predict_mean_snr, snr_to_db, var_x, var_y,
    EhPolicy, FormulaVariant, RngStream, SystemParams,
};

const SEED: u64 = 0x5eed_0004;

fn ts(alpha: f64) -> EhPolicy {
    EhPolicy::time_switching(alpha).unwrap()
}

fn ps(rho: f64) -> EhPolicy {
    EhPolicy::power_splitting(rho).unwrap()
}

#[test]
fn per_relay_moments_match_quadrature_oracle() {
    // mean_x and the corrected var_x/var_y against direct numeric
    // integration of E[sqrt(P)] E[cos t], E[P] E[cos^2 t], E[P] E[sin^2 t].
    for &(lambda, sigma) in &[(0.5f64, 1.0f64), (2.0, 0.5), (0.125, 2.0)] {
        for &s in &[0.0f64, 0.1, 0.5, 1.0] {
            let st = s.sqrt();
            let e_amp = rayleigh_expect(sigma, |x| x);
            let e_p = rayleigh_expect(sigma, |x| x * x);
            let e_cos = gaussian_expect(st, f64::cos);
            let e_cos2 = gaussian_expect(st, |t| t.cos() * t.cos());
            let e_sin2 = gaussian_expect(st, |t| t.sin() * t.sin());

            let mx_oracle = e_amp * e_cos;
            let vx_oracle = e_p * e_cos2 - mx_oracle * mx_oracle;
            let vy_oracle = e_p * e_sin2;

            let mx = mean_x(sigma, s);
            let vx = var_x(lambda, s, FormulaVariant::Corrected);
            let vy = var_y(lambda, s);
            assert!((mx - mx_oracle).abs() < 1e-8, "mean_x at ({lambda},{s})");
            assert!((vx - vx_oracle).abs() < 1e-8, "var_x at ({lambda},{s})");
            assert!((vy - vy_oracle).abs() < 1e-8, "var_y at ({lambda},{s})");
        }
    }
}

#[test]
fn per_relay_moments_match_sampled_moments() {
    // Monte-Carlo moments of X = sqrt(P) cos t and Y = sqrt(P) sin t.
    let n = 1_000_000;
    let policy = ts(0.5); // lambda_p = 0.5, sigma = 1
    let (lambda, sigma, s) = (0.5, 1.0, 0.5);
    let mut rng = RngStream::substream(SEED, 0);
    let (mut sx, mut sxx, mut sy, mut syy) = (0.0, 0.0, 0.0, 0.0);
    for _ in 0..n {
        let p = policy.relay_power(1.0, 1.0, rng.draw_cn01()).unwrap();
        let t = rng.draw_phase_error(s).unwrap();
        let (sin_t, cos_t) = t.sin_cos();
        let x = p.sqrt() * cos_t;
        let y = p.sqrt() * sin_t;
        sx += x;
        sxx += x * x;
        sy += y;
        syy += y * y;
    }
    let inv = 1.0 / n as f64;
    let mx = sx * inv;
    let vx = sxx * inv - mx * mx;
    let my = sy * inv;
    let vy = syy * inv - my * my;

    let mx_pred = mean_x(sigma, s);
    let vx_pred = var_x(lambda, s, FormulaVariant::Corrected);
    let vy_pred = var_y(lambda, s);
    assert!((mx - mx_pred).abs() < 0.01 * mx_pred, "mean {mx} vs {mx_pred}");
    assert!((vx - vx_pred).abs() < 0.01 * vx_pred, "var {vx} vs {vx_pred}");
    assert!((vy - vy_pred).abs() < 0.01 * vy_pred, "var {vy} vs {vy_pred}");
    // The literal variant misses the sampled variance by a wide margin here.
    let vx_lit = var_x(lambda, s, FormulaVariant::CorollaryLiteral);
    assert!((vx - vx_lit).abs() > 0.25);
}

#[test]
fn exact_mean_matches_monte_carlo_across_n() {
    // 10^5 trials per point keeps this quick; the heavier 10^6-trial grid
    // runs in the acceptance suite.
    let trials = 100_000;
    for &n in &[1usize, 2, 5, 15, 50] {
        for &s in &[0.0, 0.5] {
            for policy in [ts(0.5), ps(0.5)] {
                let params = SystemParams::new(n, 1.0, 1.0, s).unwrap();
                let exact = exact_mean_snr(&params, policy).unwrap();
                let mc = estimate_mean_snr(&params, policy, trials, SEED).unwrap();
                assert!(
                    (mc.mean - exact).abs() <= 4.0 * mc.std_error,
                    "N={n} s={s} {policy:?}: mc {} vs exact {exact} (se {})",
                    mc.mean,
                    mc.std_error
                );
            }
        }
    }
}

#[test]
fn exact_mean_closed_form_structure() {
    // E[snr] = (pi/2) sigma^2 e^{-s} N(N-1) + 2 N sigma^2: an independent
    // algebraic route to the same value.
    for &n in &[1usize, 2, 7, 33] {
        for &s in &[0.0, 0.3, 1.2] {
            for &(policy, sigma_sq) in &[(ts(0.5), 1.0), (ps(0.5), 0.5), (ts(0.25), 1.0 / 3.0)] {
                let params = SystemParams::new(n, 1.0, 1.0, s).unwrap();
                let exact = exact_mean_snr(&params, policy).unwrap();
                let nf = n as f64;
                let alt = (std::f64::consts::PI / 2.0) * sigma_sq * (-s).exp() * nf * (nf - 1.0)
                    + 2.0 * nf * sigma_sq;
                assert!(
                    (exact - alt).abs() <= 1e-11 * alt,
                    "N={n} s={s}: {exact} vs {alt}"
                );
            }
        }
    }
}

#[test]
fn variants_coincide_only_at_zero_phase_error() {
    let params = SystemParams::new(15, 1.0, 1.0, 0.0).unwrap();
    let c = predict_mean_snr(&params, ts(0.5), FormulaVariant::Corrected).unwrap();
    let l = predict_mean_snr(&params, ts(0.5), FormulaVariant::CorollaryLiteral).unwrap();
    assert!((c.mean_snr - l.mean_snr).abs() <= 1e-12 * c.mean_snr);

    let params = SystemParams::new(15, 1.0, 1.0, 0.5).unwrap();
    let c = predict_mean_snr(&params, ts(0.5), FormulaVariant::Corrected).unwrap();
    let l = predict_mean_snr(&params, ts(0.5), FormulaVariant::CorollaryLiteral).unwrap();
    assert!(l.mean_snr > c.mean_snr + 1.0);
}

#[test]
fn mean_snr_monotone_in_each_parameter() {
    let base = |n: usize, s: f64, f: f64, eta: f64, p: f64, time_sw: bool| {
        let params = SystemParams::new(n, p, eta, s).unwrap();
        let policy = if time_sw { ts(f) } else { ps(f) };
        exact_mean_snr(&params, policy).unwrap()
    };
    // Decreasing in phase-error variance (N >= 2; at N = 1 the phase drops
    // out entirely).
    let mut prev = f64::INFINITY;
    for s in [0.0, 0.2, 0.4, 0.8, 1.6] {
        let v = base(15, s, 0.5, 1.0, 1.0, true);
        assert!(v < prev);
        prev = v;
    }
    let flat_a = base(1, 0.0, 0.5, 1.0, 1.0, true);
    let flat_b = base(1, 2.0, 0.5, 1.0, 1.0, true);
    assert!((flat_a - flat_b).abs() <= 1e-12 * flat_a);
    // Increasing in the harvesting fraction, eta, and source power.
    assert!(base(15, 0.5, 0.6, 1.0, 1.0, true) > base(15, 0.5, 0.5, 1.0, 1.0, true));
    assert!(base(15, 0.5, 0.6, 1.0, 1.0, false) > base(15, 0.5, 0.5, 1.0, 1.0, false));
    assert!(base(15, 0.5, 0.5, 1.0, 1.0, true) > base(15, 0.5, 0.5, 0.7, 1.0, true));
    assert!(base(15, 0.5, 0.5, 1.0, 2.0, true) > base(15, 0.5, 0.5, 1.0, 1.0, true));
}

#[test]
fn ts_over_ps_ratio_is_inverse_one_minus_fraction() {
    for f in [0.2, 0.5, 0.6, 0.8] {
        for &(n, s) in &[(2usize, 0.0), (15, 0.5), (50, 1.0)] {
            let params = SystemParams::new(n, 1.0, 1.0, s).unwrap();
            let t = exact_mean_snr(&params, ts(f)).unwrap();
            let p = exact_mean_snr(&params, ps(f)).unwrap();
            let expect = 1.0 / (1.0 - f);
            assert!(((t / p) - expect).abs() <= 1e-12 * expect);
        }
    }
    // f = 0.5 is the 3 dB gap.
    let gap = snr_to_db(2.0).unwrap();
    assert!((gap - 3.010299956639812).abs() < 1e-12);
}

#[test]
fn corrected_moment_closure() {
    // var_x + mean_x^2 = E[P] (1 + e^{-2s}) / 2 exactly.
    for &lambda in &[0.125, 0.5, 1.0, 2.0] {
        let sigma = (1.0_f64 / (2.0 * lambda)).sqrt();
        for &s in &[0.0, 0.1, 0.5, 1.0, 2.0] {
            let lhs = var_x(lambda, s, FormulaVariant::Corrected) + mean_x(sigma, s).powi(2);
            let rhs = (1.0 / lambda) * (1.0 + (-2.0 * s).exp()) / 2.0;
            assert!((lhs - rhs).abs() <= 1e-12 * rhs, "lambda={lambda} s={s}");
        }
    }
}

#[test]
fn n_squared_leading_order() {
    // mean(2N)/mean(N) -> 4 as N grows, at zero phase error.
    let ratio = |n: usize| {
        let p1 = SystemParams::new(n, 1.0, 1.0, 0.0).unwrap();
        let p2 = SystemParams::new(2 * n, 1.0, 1.0, 0.0).unwrap();
        exact_mean_snr(&p2, ts(0.5)).unwrap() / exact_mean_snr(&p1, ts(0.5)).unwrap()
    };
    assert!((ratio(64) - 3.9914975642531605).abs() < 1e-9);
    let mut prev = ratio(2);
    for n in [4, 16, 64, 256, 1024] {
        let r = ratio(n);
        assert!(r > prev && r < 4.0);
        prev = r;
    }
    assert!(ratio(4096) > 3.9998);
}
