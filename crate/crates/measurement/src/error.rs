use thiserror::Error;

#[derive(Debug, Error)]
pub enum MeasurementError {
    #[error("qubit-cavity detuning must be nonzero")]
    ZeroDetuning,

    #[error("invalid click model: {0}")]
    InvalidModel(String),

    #[error("invalid sampling request: {0}")]
    InvalidRequest(String),
}
