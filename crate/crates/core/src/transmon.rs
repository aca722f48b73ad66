//! Truncated anharmonic transmon: spectrum and per-pulse coupling figures.

use crate::constants::PhysicalConstants;
use crate::error::CoreError;

/// A weakly anharmonic qubit truncated to `levels` states.
///
/// The spectrum is the standard transmon ladder E_k/ħ = k·ω10 − α·k(k−1)/2
/// with anharmonicity α = ω10 − ω21 ≥ 0. Capacitances describe the drive
/// geometry: `self_capacitance` is the qubit island capacitance C and
/// `coupling_capacitance` the drive electrode capacitance C_c.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransmonSpec {
    levels: usize,
    omega01: f64,
    anharmonicity: f64,
    self_capacitance: f64,
    coupling_capacitance: f64,
}

impl TransmonSpec {
    /// Validate and construct a spec.
    ///
    /// `omega01` and `anharmonicity` are angular frequencies in rad/s,
    /// capacitances in farad. Requires 2 ≤ levels ≤ 10, ω10 > 0,
    /// 0 ≤ α < ω10 and strictly positive capacitances.
    pub fn new(
        levels: usize,
        omega01: f64,
        anharmonicity: f64,
        self_capacitance: f64,
        coupling_capacitance: f64,
    ) -> Result<Self, CoreError> {
        if !(2..=10).contains(&levels) {
            return Err(CoreError::InvalidSpec(format!(
                "levels must be in [2, 10], got {levels}"
            )));
        }
        if !(omega01 > 0.0) {
            return Err(CoreError::InvalidSpec(format!(
                "omega01 must be positive, got {omega01:.3e}"
            )));
        }
        if !(0.0..omega01).contains(&anharmonicity) {
            return Err(CoreError::InvalidSpec(format!(
                "anharmonicity must satisfy 0 <= alpha < omega01, got {anharmonicity:.3e}"
            )));
        }
        if !(self_capacitance > 0.0) {
            return Err(CoreError::InvalidSpec(format!(
                "self_capacitance must be positive, got {self_capacitance:.3e}"
            )));
        }
        if !(coupling_capacitance >= 0.0) {
            return Err(CoreError::InvalidSpec(format!(
                "coupling_capacitance must be non-negative, got {coupling_capacitance:.3e}"
            )));
        }
        Ok(Self {
            levels,
            omega01,
            anharmonicity,
            self_capacitance,
            coupling_capacitance,
        })
    }

    /// Number of retained levels d.
    pub fn levels(&self) -> usize {
        self.levels
    }

    /// 0→1 transition angular frequency ω10 in rad/s.
    pub fn omega01(&self) -> f64 {
        self.omega01
    }

    /// Anharmonicity α = ω10 − ω21 in rad/s.
    pub fn anharmonicity(&self) -> f64 {
        self.anharmonicity
    }

    /// Qubit island capacitance C in farad.
    pub fn self_capacitance(&self) -> f64 {
        self.self_capacitance
    }

    /// Drive coupling capacitance C_c in farad.
    pub fn coupling_capacitance(&self) -> f64 {
        self.coupling_capacitance
    }

    /// Total capacitance C' = C + C_c.
    pub fn total_capacitance(&self) -> f64 {
        self.self_capacitance + self.coupling_capacitance
    }

    /// Qubit oscillation period τ = 2π/ω10 in seconds.
    pub fn period(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.omega01
    }

    /// Same qubit truncated at a different level count.
    pub fn with_levels(&self, levels: usize) -> Result<Self, CoreError> {
        Self::new(
            levels,
            self.omega01,
            self.anharmonicity,
            self.self_capacitance,
            self.coupling_capacitance,
        )
    }

    /// Level energies divided by ħ, in rad/s: E_k/ħ = k·ω10 − α·k(k−1)/2.
    ///
    /// E_0 = 0, E_1 − E_0 = ω10, E_2 − E_1 = ω10 − α.
    pub fn spectrum(&self) -> Vec<f64> {
        (0..self.levels)
            .map(|k| {
                let k = k as f64;
                k * self.omega01 - self.anharmonicity * k * (k - 1.0) / 2.0
            })
            .collect()
    }

    /// Bloch-sphere rotation angle imparted by a single SFQ pulse,
    /// δθ = C_c·Φ0·sqrt(2·ω10/(ħ·C)).
    pub fn tip_angle(&self, constants: &PhysicalConstants) -> f64 {
        self.coupling_capacitance
            * constants.flux_quantum()
            * (2.0 * self.omega01 / (constants.reduced_planck() * self.self_capacitance)).sqrt()
    }

    /// Energy delivered to the qubit by one SFQ pulse,
    /// E1 = ω01²·C_c²·Φ0²/(2·C'), returned in joule together with the
    /// same energy expressed in quanta E1/(ħ·ω01).
    pub fn pulse_energy(&self, constants: &PhysicalConstants) -> PulseEnergy {
        let phi0 = constants.flux_quantum();
        let joules = self.omega01.powi(2) * self.coupling_capacitance.powi(2) * phi0.powi(2)
            / (2.0 * self.total_capacitance());
        PulseEnergy {
            joules,
            quanta: joules / (constants.reduced_planck() * self.omega01),
        }
    }
}

/// Energy deposited by a single pulse, in joule and in units of ħω01.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulseEnergy {
    pub joules: f64,
    pub quanta: f64,
}
