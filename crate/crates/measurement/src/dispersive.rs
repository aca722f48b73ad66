//! Dispersive shift of the readout cavity and the ring-up time.

use crate::error::MeasurementError;

/// Qubit-cavity coupling rate g and detuning Δ, both angular (rad/s).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DispersiveParams {
    pub coupling_g: f64,
    pub detuning_delta: f64,
}

/// χ = g²/Δ and the pointer-state ring-up time π/χ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DispersiveShift {
    /// Dispersive shift χ in rad/s; carries the sign of Δ.
    pub chi: f64,
    /// Ring-up drive time π/χ in seconds.
    pub ringup_time: f64,
}

/// Dispersive shift χ ≡ g²/Δ of the readout cavity, and the time π/χ for
/// which the cavity is driven at the dressed frequency of the excited qubit
/// to populate the bright pointer state.
pub fn dispersive_shift(params: &DispersiveParams) -> Result<DispersiveShift, MeasurementError> {
    if params.detuning_delta == 0.0 {
        return Err(MeasurementError::ZeroDetuning);
    }
    let chi = params.coupling_g * params.coupling_g / params.detuning_delta;
    Ok(DispersiveShift {
        chi,
        ringup_time: std::f64::consts::PI / chi,
    })
}
