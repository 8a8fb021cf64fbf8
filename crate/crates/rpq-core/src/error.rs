//! Error taxonomy shared across the kernel.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum RpqError {
    /// The deformation expression has a pole at the substituted point.
    #[error("pole while evaluating R at {context}")]
    Pole { context: String },

    /// A defining quotient is singular (for example Δ(n+1) = 0 in f^Δ_n).
    #[error("singular value: {context}")]
    Singular { context: String },

    /// Arguments outside an operation's domain.
    #[error("domain error: {context}")]
    Domain { context: String },

    /// Operators built over different presets or sample points were combined.
    #[error("operators belong to different evaluation contexts")]
    MixedContext,

    /// A fractional exponent does not resolve to an integer power of the
    /// sample-point roots; the run's `rho` is too coarse.
    #[error("exponent {exponent} is not representable with rho = {rho}")]
    ExponentDepth { exponent: String, rho: i64 },

    /// Configuration problems: bad preset files, malformed flags, bad grids.
    #[error("config error: {0}")]
    Config(String),

    /// A preset without a scalar factor reduction was passed to the
    /// Pochhammer/theta machinery.
    #[error("preset {0} has no scalar Pochhammer reduction")]
    UnsupportedPreset(String),
}

pub type Result<T> = std::result::Result<T, RpqError>;

impl RpqError {
    pub fn pole(context: impl Into<String>) -> Self {
        RpqError::Pole { context: context.into() }
    }
    pub fn singular(context: impl Into<String>) -> Self {
        RpqError::Singular { context: context.into() }
    }
    pub fn domain(context: impl Into<String>) -> Self {
        RpqError::Domain { context: context.into() }
    }
    pub fn config(context: impl Into<String>) -> Self {
        RpqError::Config(context.into())
    }
}
