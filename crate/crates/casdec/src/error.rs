//! Error types shared across the crate.

/// Structured errors for every failure mode of the toolkit.
///
/// Poles and divergences are reported with their location rather than mapped
/// to infinities, because several potentials and kernels legitimately probe
/// near-pole arguments and the caller decides how to render them.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole at {location}: {context}")]
    Pole { location: f64, context: String },

    #[error("geometry error: {0}")]
    Geometry(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("instability: {0}")]
    Instability(String),

    #[error("input error: {0}")]
    Input(String),

    #[error("numerical error: {0}")]
    Numerical(String),

    /// The strict `epsilon -> 0` value is unbounded at this time; consumers
    /// typically render the decoherence kernel as zero there.
    #[error("divergence at ct = {m} L")]
    Divergence { m: u32 },

    #[error("step-size error: {0}")]
    StepSize(String),

    #[error("invariant breach during integration: {0}")]
    InvariantBreach(String),
}

pub type Result<T> = core::result::Result<T, Error>;
