use thiserror::Error;

/// Errors raised by spec validation and propagation contracts.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    #[error("matrix is not unitary (max-norm defect {defect:.3e} exceeds {tolerance:.1e})")]
    NotUnitary { defect: f64, tolerance: f64 },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("tip angle {0} is outside (-pi, pi)")]
    TipAngleOutOfRange(f64),

    #[error("tip angle is not finite")]
    NonFiniteTipAngle,

    #[error("pulse events are not sorted by effective time")]
    UnsortedEvents,

    #[error("pulse event at t = {time:.3e} s lies outside [0, {total:.3e}] s")]
    EventOutOfRange { time: f64, total: f64 },

    #[error("negative duration {0:.3e} s")]
    NegativeDuration(f64),

    #[error("two-qubit dimension {0} exceeds the supported maximum of 100")]
    DimensionOverflow(usize),
}
