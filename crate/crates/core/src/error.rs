use thiserror::Error;

/// Errors raised by the numerical engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A pair or source parameter is out of its physical domain.
    #[error("invalid configuration: {field} = {value}")]
    InvalidConfig { field: &'static str, value: f64 },

    /// A parameter that must be strictly positive is not.
    #[error("{name} must be positive and finite, got {value}")]
    NonPositiveParameter { name: &'static str, value: f64 },

    /// A grid span is not an integer multiple of its step.
    #[error("{name} span {span} is not an integer multiple of step {step}")]
    NonIntegralSpan {
        name: &'static str,
        span: f64,
        step: f64,
    },

    /// A grid spans zero delay but its points miss it.
    #[error("delay grid spans zero but no point falls on it (tau_min = {tau_min}, step = {step})")]
    ZeroNotOnGrid { tau_min: f64, step: f64 },

    /// An operation received a grid with no points.
    #[error("grid contains no points")]
    EmptyGrid,

    /// A requested detuning lies outside the run bandwidth.
    #[error("detuning {delta_f} Hz outside the spectral bandwidth ±{bandwidth} Hz")]
    DetuningOutOfBand { delta_f: f64, bandwidth: f64 },
}
