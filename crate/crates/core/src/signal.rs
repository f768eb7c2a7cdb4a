//! Second-hop physical signal model: channel-inverting precoding, the
//! received sum signal, and the instantaneous destination SNR.
//!
//! Each relay applies the weight `a_n = (1/|h_n|) e^{-j(phi_n - theta_n)}`,
//! so its contribution to the received signal collapses to
//! `sqrt(P_n) e^{j theta_n} x`: the channel drops out and only the residual
//! phase error `theta_n` remains. [`received_signal`] evaluates the full
//! chain, [`received_signal_reduced`] the collapsed form; they must agree to
//! within 1e-12 per component, which is the key correctness check on the
//! precoding.

use alloc::vec::Vec;

use crate::math;
use crate::{ComplexGain, Error, Result};

/// Channels with magnitude at or below this are rejected as singular rather
/// than inverted. The event has probability zero under the continuous
/// channel law.
pub const SINGULAR_CHANNEL_EPS: f64 = 1e-12;

/// Everything drawn for one relay in one trial.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RelayRealization {
    /// Source-to-relay channel g_n.
    pub g: ComplexGain,
    /// Relay-to-destination channel h_n.
    pub h: ComplexGain,
    /// Net phase error theta_n, radians.
    pub theta: f64,
    /// Relay transmit power P_n, watts.
    pub power: f64,
}

/// One full Monte-Carlo draw of the system.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialRealization {
    pub relays: Vec<RelayRealization>,
    /// Destination noise sample w_D (carried for signal-level tests; it does
    /// not enter `gamma_d`, whose numerator is noise-free).
    pub noise: ComplexGain,
    /// Instantaneous linear SNR at the destination.
    pub gamma_d: f64,
}

/// The distributed-beamforming weight `a_n` for channel `h` and residual
/// phase error `theta`: magnitude `1/|h|`, phase `theta - phase(h)`.
pub fn precoding_weight(h: ComplexGain, theta: f64) -> Result<ComplexGain> {
    let mag = h.magnitude();
    if mag <= SINGULAR_CHANNEL_EPS {
        return Err(Error::SingularChannel);
    }
    Ok(ComplexGain::from_polar(1.0 / mag, theta - h.phase()))
}

/// The received sum signal through the full chain: per relay
/// `sqrt(P_n) * h_n * a_n * x`, summed in relay order, plus noise.
pub fn received_signal(
    relays: &[RelayRealization],
    symbol: ComplexGain,
    noise: ComplexGain,
) -> Result<ComplexGain> {
    debug_assert!((symbol.magnitude() - 1.0).abs() < 1e-9, "unit-energy symbol");
    let mut acc = ComplexGain::ZERO;
    for r in relays {
        let weight = precoding_weight(r.h, r.theta)?;
        acc = acc + (r.h * weight * symbol).scale(math::sqrt(r.power));
    }
    Ok(acc + noise)
}

/// The collapsed form of the received signal,
/// `sum_n sqrt(P_n) e^{j theta_n} x + w_D`, with no reference to the
/// channels.
pub fn received_signal_reduced(
    relays: &[RelayRealization],
    symbol: ComplexGain,
    noise: ComplexGain,
) -> ComplexGain {
    let mut acc = ComplexGain::ZERO;
    for r in relays {
        acc = acc + ComplexGain::from_polar(math::sqrt(r.power), r.theta) * symbol;
    }
    acc + noise
}

/// Instantaneous SNR of the beamformed sum for unit noise variance:
/// `(sum sqrt(P_n) cos theta_n)^2 + (sum sqrt(P_n) sin theta_n)^2`.
///
/// Callers with a non-unit destination noise variance divide the result by
/// it.
pub fn instantaneous_snr(powers: &[f64], thetas: &[f64]) -> Result<f64> {
    if powers.len() != thetas.len() {
        return Err(Error::InvalidInput("powers/thetas length mismatch"));
    }
    if powers.is_empty() {
        return Err(Error::InvalidInput("need at least one relay"));
    }
    let mut in_phase = 0.0;
    let mut quadrature = 0.0;
    for (&p, &theta) in powers.iter().zip(thetas) {
        if !(p >= 0.0) {
            return Err(Error::InvalidInput("powers must be >= 0"));
        }
        let amp = math::sqrt(p);
        let (s, c) = math::sin_cos(theta);
        in_phase += amp * c;
        quadrature += amp * s;
    }
    Ok(in_phase * in_phase + quadrature * quadrature)
}
