//! Wiring heat loads from power-law thermal-conductivity integrals, and the
//! microstrip cross-section bookkeeping that feeds them.

use serde::{Deserialize, Serialize};

use crate::error::BudgetError;

/// Wiring material with a power-law thermal conductivity κ(T) = k0·T^p
/// (W/m·K with T in kelvin).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Material {
    /// Kapton HN dielectric: κ = 4.6e-3 · T^0.6.
    KaptonHn,
    /// NbTi alloy traces: κ = 0.027 · T².
    NbTi,
    /// Custom power law.
    Custom { prefactor: f64, exponent: f64 },
}

impl Material {
    /// (k0, p) of the conductivity power law.
    pub fn power_law(&self) -> (f64, f64) {
        match *self {
            Material::KaptonHn => (4.6e-3, 0.6),
            Material::NbTi => (0.027, 2.0),
            Material::Custom { prefactor, exponent } => (prefactor, exponent),
        }
    }

    /// κ(T) in W/m·K.
    pub fn conductivity(&self, temperature: f64) -> f64 {
        let (k0, p) = self.power_law();
        k0 * temperature.powf(p)
    }
}

/// A bundle of wires of one material spanning two temperature stages with no
/// intermediate heat sinking.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WiringSpec {
    pub material: Material,
    /// Total conductor cross-section in m².
    pub cross_section_area: f64,
    /// Run length in m.
    pub length: f64,
    /// Hot-end temperature in K.
    pub t_hot: f64,
    /// Cold-end temperature in K.
    pub t_cold: f64,
}

impl WiringSpec {
    pub fn validate(&self) -> Result<(), BudgetError> {
        if !(self.cross_section_area >= 0.0) {
            return Err(BudgetError::InvalidParameter(format!(
                "cross-section area must be non-negative, got {:.3e}",
                self.cross_section_area
            )));
        }
        if !(self.length > 0.0) {
            return Err(BudgetError::InvalidParameter(format!(
                "length must be positive, got {:.3e}",
                self.length
            )));
        }
        if !(self.t_hot > self.t_cold && self.t_cold >= 0.0) {
            return Err(BudgetError::InvalidParameter(format!(
                "need t_hot > t_cold >= 0, got {} and {}",
                self.t_hot, self.t_cold
            )));
        }
        let (_, p) = self.material.power_law();
        if p <= -1.0 {
            return Err(BudgetError::InvalidParameter(format!(
                "conductivity exponent must exceed -1 for an integrable law, got {p}"
            )));
        }
        Ok(())
    }
}

/// Conducted heat Q = (A/L)·∫ κ(T) dT from t_cold to t_hot, with the
/// power-law integral in closed form:
/// (A/L)·k0·(T_hot^{p+1} − T_cold^{p+1})/(p+1).
pub fn wiring_heat(spec: &WiringSpec) -> Result<f64, BudgetError> {
    spec.validate()?;
    let (k0, p) = spec.material.power_law();
    let integral = k0 * (spec.t_hot.powf(p + 1.0) - spec.t_cold.powf(p + 1.0)) / (p + 1.0);
    Ok(spec.cross_section_area / spec.length * integral)
}

/// Cross-section areas of a microstrip flex bundle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WiringCrossSections {
    /// Dielectric area: lines · (trace width + spacing) · dielectric thickness.
    pub dielectric_area: f64,
    /// Metal area: lines · trace width · (1 + groundplane factor) · metal
    /// thickness.
    pub metal_area: f64,
}

/// Cross-sections of `lines` parallel microstrips. `groundplane_factor`
/// scales the signal-trace metal to account for the ground plane share.
pub fn wiring_geometry(
    lines: u64,
    trace_width: f64,
    spacing: f64,
    dielectric_thickness: f64,
    metal_thickness: f64,
    groundplane_factor: f64,
) -> Result<WiringCrossSections, BudgetError> {
    for (name, v) in [
        ("trace_width", trace_width),
        ("spacing", spacing),
        ("dielectric_thickness", dielectric_thickness),
        ("metal_thickness", metal_thickness),
    ] {
        if !(v >= 0.0) {
            return Err(BudgetError::InvalidParameter(format!(
                "{name} must be non-negative, got {v:.3e}"
            )));
        }
    }
    if !(groundplane_factor >= 0.0) {
        return Err(BudgetError::InvalidParameter(format!(
            "groundplane_factor must be non-negative, got {groundplane_factor}"
        )));
    }
    let lines = lines as f64;
    Ok(WiringCrossSections {
        dielectric_area: lines * (trace_width + spacing) * dielectric_thickness,
        metal_area: lines * trace_width * (1.0 + groundplane_factor) * metal_thickness,
    })
}
