//! Delay demodulation of photon-counter flux states.
//!
//! The flux state of the counter's SQUID loop modulates the propagation delay
//! of a probe fluxon; a race arbiter samples the delayed pulse twice per
//! clock period, binning it as even (no added delay, logical 0) or odd
//! (delayed, logical 1). This is Manchester encoding of the measurement bit.

use crate::error::CoprocessorError;

/// The time bin an arriving pulse lands in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TimeBin {
    /// Pulse ahead of the threshold: logical 0 ("no flux").
    EvenBin,
    /// Pulse at or beyond the threshold: logical 1.
    OddBin,
}

impl TimeBin {
    /// Manchester framing: even bin carries 0, odd bin carries 1.
    pub fn logical_bit(self) -> bool {
        matches!(self, TimeBin::OddBin)
    }
}

/// Race-arbiter configuration: the decision threshold sits at half the clock
/// period unless overridden.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DemodConfig {
    clock_period: f64,
    delay_threshold: f64,
}

impl DemodConfig {
    /// Threshold at clock_period/2.
    pub fn new(clock_period: f64) -> Result<Self, CoprocessorError> {
        if !(clock_period > 0.0) {
            return Err(CoprocessorError::InvalidConfig(format!(
                "clock period must be positive, got {clock_period}"
            )));
        }
        Ok(Self {
            clock_period,
            delay_threshold: clock_period / 2.0,
        })
    }

    /// Custom threshold, which must satisfy 0 < threshold < clock_period.
    pub fn with_threshold(clock_period: f64, threshold: f64) -> Result<Self, CoprocessorError> {
        let base = Self::new(clock_period)?;
        if !(threshold > 0.0 && threshold < clock_period) {
            return Err(CoprocessorError::InvalidConfig(format!(
                "threshold must lie strictly inside (0, {clock_period}), got {threshold}"
            )));
        }
        Ok(Self {
            delay_threshold: threshold,
            ..base
        })
    }

    pub fn clock_period(&self) -> f64 {
        self.clock_period
    }

    pub fn delay_threshold(&self) -> f64 {
        self.delay_threshold
    }
}

/// Deterministic step function of the pulse delay: below the threshold the
/// pulse lands in the even bin, at or above it in the odd bin
/// (upper-inclusive tie-break). The delay must lie in [0, clock_period).
pub fn jpm_delay_demod(config: &DemodConfig, pulse_delay: f64) -> Result<TimeBin, CoprocessorError> {
    if !(0.0..config.clock_period).contains(&pulse_delay) {
        return Err(CoprocessorError::DelayOutOfRange {
            delay: pulse_delay,
            period: config.clock_period,
        });
    }
    Ok(if pulse_delay < config.delay_threshold {
        TimeBin::EvenBin
    } else {
        TimeBin::OddBin
    })
}

/// Toggle flip-flop frequency divider: emits every second input pulse.
pub fn tff_divide(input_pulses: &[f64]) -> Vec<f64> {
    input_pulses
        .iter()
        .skip(1)
        .step_by(2)
        .copied()
        .collect()
}
