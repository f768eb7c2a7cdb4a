use core::f64::consts::PI;
use core::ops::{Add, Mul, Sub};

use crate::math;

/// A complex baseband value: channel gain, precoding weight, symbol or noise
/// sample. Plain cartesian storage, double precision.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ComplexGain {
    pub re: f64,
    pub im: f64,
}

impl ComplexGain {
    pub const ZERO: Self = Self { re: 0.0, im: 0.0 };
    /// The unit symbol used throughout the simulation (any unit-magnitude
    /// PSK symbol gives the same SNR).
    pub const ONE: Self = Self { re: 1.0, im: 0.0 };

    #[inline]
    pub const fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    /// Build from magnitude and phase (radians).
    #[inline]
    pub fn from_polar(magnitude: f64, phase: f64) -> Self {
        let (s, c) = math::sin_cos(phase);
        Self {
            re: magnitude * c,
            im: magnitude * s,
        }
    }

    /// |z| = sqrt(re^2 + im^2), always >= 0.
    #[inline]
    pub fn magnitude(&self) -> f64 {
        math::hypot(self.re, self.im)
    }

    /// |z|^2 without the square root.
    #[inline]
    pub fn magnitude_sq(&self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    /// Argument in (-pi, pi]. `atan2` yields [-pi, pi]; the -pi endpoint is
    /// folded onto +pi so the range is half-open as documented.
    #[inline]
    pub fn phase(&self) -> f64 {
        let p = math::atan2(self.im, self.re);
        if p <= -PI {
            p + 2.0 * PI
        } else {
            p
        }
    }

    #[inline]
    pub fn scale(&self, k: f64) -> Self {
        Self {
            re: k * self.re,
            im: k * self.im,
        }
    }
}

impl Add for ComplexGain {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Self {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for ComplexGain {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Self {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Mul for ComplexGain {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Self {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}
