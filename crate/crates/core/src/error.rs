use core::fmt;

/// Errors produced by parameter validation and the signal/trial operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Error {
    /// A physical parameter is outside its admissible range.
    InvalidParameter(&'static str),
    /// An energy-harvesting policy that collapses the power distribution
    /// (zero transmit duration, zero harvested power, zero conversion
    /// efficiency).
    DegeneratePolicy(&'static str),
    /// A relay-to-destination channel too close to zero to invert.
    SingularChannel,
    /// Structurally malformed input (mismatched or empty lists).
    InvalidInput(&'static str),
    /// Argument outside the mathematical domain of the function.
    Domain(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::DegeneratePolicy(msg) => write!(f, "degenerate policy: {msg}"),
            Error::SingularChannel => write!(f, "singular relay-destination channel"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
