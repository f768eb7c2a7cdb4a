use crate::{Error, Result};

/// Global physical parameters of the two-hop system.
///
/// Powers are linear watts throughout; `sigma_theta_sq` is the variance of
/// the per-relay net phase error in rad^2. `noise_var` is the destination
/// noise variance and defaults to 1.0, the normalization used everywhere in
/// the analysis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SystemParams {
    /// Number of cooperating relays, N >= 1.
    pub n_relays: usize,
    /// Source transmit power P_S > 0.
    pub source_power: f64,
    /// RF-to-DC energy conversion efficiency, 0 <= eta <= 1.
    pub eta: f64,
    /// Variance of the net phase error theta_n, >= 0.
    pub sigma_theta_sq: f64,
    /// Destination noise variance, > 0.
    pub noise_var: f64,
}

impl SystemParams {
    /// Validated constructor with the standard unit noise variance.
    pub fn new(n_relays: usize, source_power: f64, eta: f64, sigma_theta_sq: f64) -> Result<Self> {
        let p = Self {
            n_relays,
            source_power,
            eta,
            sigma_theta_sq,
            noise_var: 1.0,
        };
        p.validate()?;
        Ok(p)
    }

    /// Replace the noise variance (must stay > 0).
    pub fn with_noise_var(mut self, noise_var: f64) -> Result<Self> {
        self.noise_var = noise_var;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_relays < 1 {
            return Err(Error::InvalidParameter("n_relays must be >= 1"));
        }
        if !(self.source_power > 0.0) {
            return Err(Error::InvalidParameter("source_power must be > 0"));
        }
        if !(self.eta >= 0.0 && self.eta <= 1.0) {
            return Err(Error::InvalidParameter("eta must be in [0, 1]"));
        }
        if !(self.sigma_theta_sq >= 0.0) {
            return Err(Error::InvalidParameter("sigma_theta_sq must be >= 0"));
        }
        if !(self.noise_var > 0.0) {
            return Err(Error::InvalidParameter("noise_var must be > 0"));
        }
        Ok(())
    }
}
