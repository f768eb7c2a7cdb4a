//! Shared oracles for the statistical test batteries: numeric quadrature of
//! expectations (independent of every closed form under test) and a
//! Kolmogorov-Smirnov one-sample test.
#![allow(dead_code)]

/// E[f(X)] for X ~ N(0, sigma^2), by composite Simpson over [-12, 12] sigma.
/// Accurate far beyond the statistical tolerances it backs.
pub fn gaussian_expect(sigma: f64, f: impl Fn(f64) -> f64) -> f64 {
    if sigma == 0.0 {
        return f(0.0);
    }
    let lo = -12.0 * sigma;
    let hi = 12.0 * sigma;
    let density = |x: f64| {
        let z = x / sigma;
        (-0.5 * z * z).exp() / (sigma * (2.0 * std::f64::consts::PI).sqrt())
    };
    simpson(lo, hi, 40_000, |x| f(x) * density(x))
}

/// E[f(R)] for R ~ Rayleigh(sigma), by composite Simpson over [0, 14 sigma].
pub fn rayleigh_expect(sigma: f64, f: impl Fn(f64) -> f64) -> f64 {
    let density = |x: f64| {
        let s2 = sigma * sigma;
        (x / s2) * (-x * x / (2.0 * s2)).exp()
    };
    simpson(0.0, 14.0 * sigma, 40_000, |x| f(x) * density(x))
}

fn simpson(lo: f64, hi: f64, intervals: usize, f: impl Fn(f64) -> f64) -> f64 {
    assert!(intervals.is_multiple_of(2));
    let h = (hi - lo) / intervals as f64;
    let mut acc = f(lo) + f(hi);
    for i in 1..intervals {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(lo + i as f64 * h);
    }
    acc * h / 3.0
}

/// One-sample Kolmogorov-Smirnov statistic of `samples` against the CDF.
pub fn ks_statistic(samples: &mut [f64], cdf: impl Fn(f64) -> f64) -> f64 {
    samples.sort_by(|a, b| a.total_cmp(b));
    let n = samples.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in samples.iter().enumerate() {
        let c = cdf(x);
        d = d.max(c - i as f64 / n).max((i + 1) as f64 / n - c);
    }
    d
}

/// Asymptotic KS critical value at the 1% level.
pub fn ks_critical_1pct(n: usize) -> f64 {
    1.62762 / (n as f64).sqrt()
}

#[test]
fn simpson_integrates_polynomials_exactly() {
    let v = simpson(0.0, 2.0, 100, |x| 3.0 * x * x);
    assert!((v - 8.0).abs() < 1e-10);
}

#[test]
fn gaussian_expect_matches_known_moments() {
    assert!((gaussian_expect(1.3, |x| x * x) - 1.69).abs() < 1e-9);
    assert!(gaussian_expect(0.7, |x| x).abs() < 1e-12);
}
