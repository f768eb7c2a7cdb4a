//! Energy-harvesting policies and the per-relay power distributions they
//! induce.
//!
//! Under time-switching the relay harvests for a fraction `alpha` of the
//! block and transmits with power `2*eta*alpha*P_S*|g|^2 / (1 - alpha)`;
//! under power-splitting it diverts a fraction `rho` of the received power
//! and transmits with `2*eta*rho*P_S*|g|^2`. With `g ~ CN(0,1)` the relay
//! power is exponential with rate `lambda_p` and its square root is
//! Rayleigh with scale `sigma_rayleigh`.

use crate::math;
use crate::{ComplexGain, Error, Result};

/// Tagged energy-harvesting policy choice.
///
/// `alpha = 0` and `alpha = 1` are rejected (zero harvested energy / zero
/// transmit duration), as is `rho = 0`. `rho = 1` is admitted: it leaves no
/// first-hop signal power for information decoding, but decoding is assumed
/// perfect in this model, so the power law stays well defined.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EhPolicy {
    /// Harvest for a time fraction `alpha` of each block, 0 < alpha < 1.
    TimeSwitching { alpha: f64 },
    /// Divert a power fraction `rho` of the received signal, 0 < rho <= 1.
    PowerSplitting { rho: f64 },
}

/// Parameters of the induced per-relay power distribution: the relay power
/// is Exp(`lambda_p`) and its square root is Rayleigh(`sigma_rayleigh`),
/// with `lambda_p = 1 / (2 sigma_rayleigh^2)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DerivedDist {
    /// Rate of the exponential power law, 1/watts.
    pub lambda_p: f64,
    /// Rayleigh scale of sqrt(power), sqrt(watts).
    pub sigma_rayleigh: f64,
}

impl EhPolicy {
    /// Validated time-switching policy.
    pub fn time_switching(alpha: f64) -> Result<Self> {
        let p = Self::TimeSwitching { alpha };
        p.validate()?;
        Ok(p)
    }

    /// Validated power-splitting policy.
    pub fn power_splitting(rho: f64) -> Result<Self> {
        let p = Self::PowerSplitting { rho };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::TimeSwitching { alpha } => {
                if !(alpha > 0.0 && alpha < 1.0) {
                    return Err(Error::DegeneratePolicy(
                        "time-switching alpha must be in (0, 1)",
                    ));
                }
            }
            Self::PowerSplitting { rho } => {
                if !(0.0 < rho && rho <= 1.0) {
                    return Err(Error::DegeneratePolicy(
                        "power-splitting rho must be in (0, 1]",
                    ));
                }
            }
        }
        Ok(())
    }

    /// The harvesting fraction (`alpha` or `rho`).
    pub fn fraction(&self) -> f64 {
        match *self {
            Self::TimeSwitching { alpha } => alpha,
            Self::PowerSplitting { rho } => rho,
        }
    }

    /// Transmit power of a relay whose source-side channel is `g`, in watts.
    pub fn relay_power(&self, eta: f64, source_power: f64, g: ComplexGain) -> Result<f64> {
        self.validate()?;
        if !(eta >= 0.0 && eta <= 1.0) {
            return Err(Error::InvalidParameter("eta must be in [0, 1]"));
        }
        if !(source_power > 0.0) {
            return Err(Error::InvalidParameter("source_power must be > 0"));
        }
        let g2 = g.magnitude_sq();
        Ok(match *self {
            Self::TimeSwitching { alpha } => 2.0 * eta * alpha * source_power * g2 / (1.0 - alpha),
            Self::PowerSplitting { rho } => 2.0 * eta * rho * source_power * g2,
        })
    }

    /// The `(lambda_p, sigma_rayleigh)` pair induced by this policy for
    /// `g ~ CN(0,1)`. `eta = 0` is rejected here: the power distribution
    /// collapses to a point mass at zero and the rate diverges.
    pub fn derived_dist(&self, eta: f64, source_power: f64) -> Result<DerivedDist> {
        self.validate()?;
        if !(eta > 0.0 && eta <= 1.0) {
            return Err(Error::DegeneratePolicy("eta must be in (0, 1]"));
        }
        if !(source_power > 0.0) {
            return Err(Error::InvalidParameter("source_power must be > 0"));
        }
        // sigma^2 = eta*f*P_S/(1-f) for TS, eta*f*P_S for PS; both lambda_p
        // and sigma are derived from the same sigma^2 so the consistency
        // relation lambda_p = 1/(2 sigma^2) holds to rounding.
        let sigma_sq = match *self {
            Self::TimeSwitching { alpha } => eta * alpha * source_power / (1.0 - alpha),
            Self::PowerSplitting { rho } => eta * rho * source_power,
        };
        Ok(DerivedDist {
            lambda_p: 1.0 / (2.0 * sigma_sq),
            sigma_rayleigh: math::sqrt(sigma_sq),
        })
    }
}
