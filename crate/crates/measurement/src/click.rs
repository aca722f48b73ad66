//! Click statistics of the photon counter against bright/dark pointer states.

use crate::error::MeasurementError;

/// Cavity pointer state after the ring-up stage.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointerState {
    /// Large photon occupation; encodes qubit |1⟩.
    Bright,
    /// Near-vacuum residual occupation; encodes qubit |0⟩.
    Dark,
}

/// Phenomenological counter model.
///
/// Pointer states carry Poissonian photon number (mean n̄ bright, n_res
/// dark); each photon is detected independently with efficiency η and the
/// counter fires spuriously with probability p_d per interrogation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JpmClickModel {
    bright_mean_photons: f64,
    dark_residual_photons: f64,
    per_photon_efficiency: f64,
    dark_click_probability: f64,
}

impl JpmClickModel {
    pub fn new(
        bright_mean_photons: f64,
        dark_residual_photons: f64,
        per_photon_efficiency: f64,
        dark_click_probability: f64,
    ) -> Result<Self, MeasurementError> {
        if !(bright_mean_photons >= 0.0) {
            return Err(MeasurementError::InvalidModel(format!(
                "bright mean photon number must be non-negative, got {bright_mean_photons}"
            )));
        }
        if !(dark_residual_photons >= 0.0) {
            return Err(MeasurementError::InvalidModel(format!(
                "dark residual photon number must be non-negative, got {dark_residual_photons}"
            )));
        }
        if dark_residual_photons > bright_mean_photons {
            return Err(MeasurementError::InvalidModel(format!(
                "dark residual {dark_residual_photons} exceeds bright mean {bright_mean_photons}"
            )));
        }
        if !(0.0..=1.0).contains(&per_photon_efficiency) {
            return Err(MeasurementError::InvalidModel(format!(
                "per-photon efficiency must be in [0, 1], got {per_photon_efficiency}"
            )));
        }
        if !(0.0..=1.0).contains(&dark_click_probability) {
            return Err(MeasurementError::InvalidModel(format!(
                "dark click probability must be in [0, 1], got {dark_click_probability}"
            )));
        }
        Ok(Self {
            bright_mean_photons,
            dark_residual_photons,
            per_photon_efficiency,
            dark_click_probability,
        })
    }

    /// Calibration reproducing a raw single-shot fidelity of 0.92 in closed
    /// form: p_d = 0.04, η·n̄ = ln 25, no residual photons.
    pub fn reference_operating_point() -> Self {
        Self::new(25.0f64.ln(), 0.0, 1.0, 0.04).expect("valid reference model")
    }

    pub fn bright_mean_photons(&self) -> f64 {
        self.bright_mean_photons
    }

    pub fn dark_residual_photons(&self) -> f64 {
        self.dark_residual_photons
    }

    pub fn per_photon_efficiency(&self) -> f64 {
        self.per_photon_efficiency
    }

    pub fn dark_click_probability(&self) -> f64 {
        self.dark_click_probability
    }

    fn mean_photons(&self, pointer: PointerState) -> f64 {
        match pointer {
            PointerState::Bright => self.bright_mean_photons,
            PointerState::Dark => self.dark_residual_photons,
        }
    }
}

/// P(click | pointer) = 1 − (1 − p_d)·exp(−η·n̄_pointer).
///
/// Poissonian photons detected independently at efficiency η miss entirely
/// with probability exp(−η·n̄); a dark click fires on top of that.
pub fn click_probability(model: &JpmClickModel, pointer: PointerState) -> f64 {
    1.0 - (1.0 - model.dark_click_probability)
        * (-model.per_photon_efficiency * model.mean_photons(pointer)).exp()
}

/// Raw single-shot fidelity F = 1 − P(click|dark) − P(miss|bright), clamped
/// at zero.
///
/// The bright-state error term is the photon-miss probability
/// exp(−η·n̄) alone: a spurious dark click that happens to coincide with a
/// missed bright pointer is not credited as a success. With indistinguishable
/// pointers (n_res = n̄) the expression turns negative and clamps to 0.
pub fn single_shot_fidelity(model: &JpmClickModel) -> f64 {
    let p_click_dark = click_probability(model, PointerState::Dark);
    let p_miss_bright =
        (-model.per_photon_efficiency * model.bright_mean_photons).exp();
    (1.0 - p_click_dark - p_miss_bright).max(0.0)
}
