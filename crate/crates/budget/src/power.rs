//! SFQ junction switching power and subsystem roll-ups.

use serde::{Deserialize, Serialize};
use sfq_core::PhysicalConstants;

use crate::error::BudgetError;

/// A biased SFQ junction: every phase slip dissipates Φ0·I_b.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JunctionBias {
    /// Gate critical current I_c in ampere.
    pub critical_current: f64,
    /// I_b/I_c; dc bias sits at ~75% of critical current.
    pub bias_fraction: f64,
    /// Average phase-slip rate in hertz.
    pub switch_rate: f64,
}

impl JunctionBias {
    pub fn new(critical_current: f64, bias_fraction: f64, switch_rate: f64) -> Result<Self, BudgetError> {
        if !(critical_current > 0.0) {
            return Err(BudgetError::InvalidParameter(format!(
                "critical current must be positive, got {critical_current:.3e}"
            )));
        }
        if !(bias_fraction > 0.0 && bias_fraction < 1.0) {
            return Err(BudgetError::InvalidParameter(format!(
                "bias fraction must lie in (0, 1), got {bias_fraction}"
            )));
        }
        if !(switch_rate >= 0.0) {
            return Err(BudgetError::InvalidParameter(format!(
                "switch rate must be non-negative, got {switch_rate:.3e}"
            )));
        }
        Ok(Self {
            critical_current,
            bias_fraction,
            switch_rate,
        })
    }
}

/// Dynamic dissipation of one junction, P = Φ0·I_b·f = Φ0·(bias·I_c)·rate.
pub fn junction_power(junction: &JunctionBias, constants: &PhysicalConstants) -> f64 {
    constants.flux_quantum() * junction.bias_fraction * junction.critical_current * junction.switch_rate
}

/// A streaming subsystem: `junctions_per_channel` junctions switching at
/// `clock`·`activity` for a `duty_cycle` fraction of wall-clock time, across
/// `channels` identical channels.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubsystemSpec {
    pub name: String,
    pub junctions_per_channel: u64,
    pub channels: u64,
    /// Clock frequency in hertz.
    pub clock: f64,
    /// Fraction of wall-clock time the channel streams, in [0, 1].
    pub duty_cycle: f64,
    /// Fraction of clock cycles in which a junction switches, in [0, 1].
    pub activity: f64,
    pub junction: JunctionBias,
}

impl SubsystemSpec {
    pub fn validate(&self) -> Result<(), BudgetError> {
        if !(0.0..=1.0).contains(&self.duty_cycle) {
            return Err(BudgetError::InvalidParameter(format!(
                "{}: duty cycle must be in [0, 1], got {}",
                self.name, self.duty_cycle
            )));
        }
        if !(0.0..=1.0).contains(&self.activity) {
            return Err(BudgetError::InvalidParameter(format!(
                "{}: activity must be in [0, 1], got {}",
                self.name, self.activity
            )));
        }
        if !(self.clock >= 0.0) {
            return Err(BudgetError::InvalidParameter(format!(
                "{}: clock must be non-negative, got {:.3e}",
                self.name, self.clock
            )));
        }
        Ok(())
    }

    /// Total junction count across all channels.
    pub fn junction_total(&self) -> u64 {
        self.junctions_per_channel * self.channels
    }
}

/// Per-channel and total power of a subsystem.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SubsystemPower {
    pub per_channel_watts: f64,
    pub total_watts: f64,
}

/// P_channel = junctions/channel · junction_power(clock·activity) · duty;
/// total = P_channel · channels. Exactly linear in rate, channels and duty.
pub fn subsystem_power(
    spec: &SubsystemSpec,
    constants: &PhysicalConstants,
) -> Result<SubsystemPower, BudgetError> {
    spec.validate()?;
    let effective = JunctionBias {
        switch_rate: spec.clock * spec.activity,
        ..spec.junction
    };
    let per_channel = spec.junctions_per_channel as f64
        * junction_power(&effective, constants)
        * spec.duty_cycle;
    Ok(SubsystemPower {
        per_channel_watts: per_channel,
        total_watts: per_channel * spec.channels as f64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const CODATA: PhysicalConstants = PhysicalConstants::codata();

    #[test]
    fn hundred_microamp_junction_near_one_nanowatt() {
        let j = JunctionBias::new(100e-6, 0.75, 5e9).unwrap();
        let p = junction_power(&j, &CODATA);
        assert!((p - 7.8e-10).abs() / 7.8e-10 < 0.01, "P = {p:.4e}");
        assert!(p > 1e-10 && p < 1e-8);
    }

    #[test]
    fn idle_junction_dissipates_nothing() {
        let j = JunctionBias::new(100e-6, 0.75, 0.0).unwrap();
        assert_eq!(junction_power(&j, &CODATA), 0.0);
    }

    #[test]
    fn power_scales_linearly_with_critical_current() {
        let j = JunctionBias::new(1e-6, 0.75, 5e9).unwrap();
        let p = junction_power(&j, &CODATA);
        assert!((p - 7.8e-12).abs() / 7.8e-12 < 0.01, "P = {p:.4e}");
    }

    fn interface_chip(channels: u64) -> SubsystemSpec {
        SubsystemSpec {
            name: "interface".into(),
            junctions_per_channel: 20,
            channels,
            clock: 5e9,
            duty_cycle: 0.1,
            activity: 1.0,
            junction: JunctionBias::new(1e-6, 0.75, 0.0).unwrap(),
        }
    }

    #[test]
    fn interface_chip_operating_point() {
        // 20 junctions, 1 uA, 5 GHz, 10% duty: ~15.5 pW/channel and ~1.6 mW
        // for 1e8 channels (quoted as 20 pW and 2 mW at one significant digit)
        let power = subsystem_power(&interface_chip(100_000_000), &CODATA).unwrap();
        assert!(
            (power.per_channel_watts - 15.5e-12).abs() / 15.5e-12 < 0.01,
            "per channel {:.3e}",
            power.per_channel_watts
        );
        assert!(power.total_watts > 2e-3 / 1.5 && power.total_watts < 2e-3 * 1.5);
    }

    #[test]
    fn zero_channels_zero_power() {
        let power = subsystem_power(&interface_chip(0), &CODATA).unwrap();
        assert_eq!(power.total_watts, 0.0);
    }

    #[test]
    fn pgu_operating_point() {
        // 1e3 junction-cells at 100 uA and 30 GHz, 10% duty, activity 0.21:
        // ~0.1 uW per channel and ~10 W for 1e8 channels
        let spec = SubsystemSpec {
            name: "pgu".into(),
            junctions_per_channel: 1000,
            channels: 100_000_000,
            clock: 30e9,
            duty_cycle: 0.1,
            activity: 0.21,
            junction: JunctionBias::new(100e-6, 0.75, 0.0).unwrap(),
        };
        let power = subsystem_power(&spec, &CODATA).unwrap();
        assert!(
            (power.per_channel_watts - 1e-7).abs() / 1e-7 < 0.05,
            "per channel {:.3e}",
            power.per_channel_watts
        );
        assert!((power.total_watts - 10.0).abs() / 10.0 < 0.05);
    }

    #[test]
    fn linearity_in_duty_and_channels() {
        let mut spec = interface_chip(1000);
        let base = subsystem_power(&spec, &CODATA).unwrap();
        spec.duty_cycle = 0.2;
        let doubled = subsystem_power(&spec, &CODATA).unwrap();
        assert!((doubled.total_watts / base.total_watts - 2.0).abs() < 1e-12);
        spec.channels = 2000;
        let four = subsystem_power(&spec, &CODATA).unwrap();
        assert!((four.total_watts / base.total_watts - 4.0).abs() < 1e-12);
    }
}
