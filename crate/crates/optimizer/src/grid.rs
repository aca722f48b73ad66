//! The fast-clock grid a pulse pattern lives on.

use sfq_core::TransmonSpec;

use crate::error::OptimizerError;

/// Register length limit; patterns longer than this are outside the model's
/// intended regime.
pub const MAX_TICKS: usize = 100_000;

/// A fast-clock grid: `n_ticks` register bits at `clock_frequency`.
///
/// The ratio of clock frequency to qubit frequency (substeps per qubit
/// oscillation period) need not be an integer; it is carried as an exact
/// floating ratio alongside the clock frequency itself.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClockGrid {
    clock_frequency: f64,
    substeps_per_period: f64,
    n_ticks: usize,
}

impl ClockGrid {
    /// Grid with `substeps_per_period` clock ticks per oscillation period of
    /// `spec`. Requires the clock to run faster than the qubit
    /// (substeps > 1) and 1 ≤ n_ticks ≤ 10^5.
    pub fn for_qubit(
        spec: &TransmonSpec,
        substeps_per_period: f64,
        n_ticks: usize,
    ) -> Result<Self, OptimizerError> {
        if !(substeps_per_period > 1.0) || !substeps_per_period.is_finite() {
            return Err(OptimizerError::InvalidGrid(format!(
                "clock must exceed the qubit frequency (substeps_per_period > 1), got {substeps_per_period}"
            )));
        }
        if n_ticks == 0 || n_ticks > MAX_TICKS {
            return Err(OptimizerError::InvalidGrid(format!(
                "n_ticks must be in [1, {MAX_TICKS}], got {n_ticks}"
            )));
        }
        Ok(Self {
            clock_frequency: substeps_per_period / spec.period(),
            substeps_per_period,
            n_ticks,
        })
    }

    /// Clock frequency in hertz.
    pub fn clock_frequency(&self) -> f64 {
        self.clock_frequency
    }

    /// Clock ticks per qubit oscillation period.
    pub fn substeps_per_period(&self) -> f64 {
        self.substeps_per_period
    }

    /// Register length in bits.
    pub fn n_ticks(&self) -> usize {
        self.n_ticks
    }

    /// Time of tick `k` in seconds.
    pub fn tick_time(&self, k: usize) -> f64 {
        k as f64 / self.clock_frequency
    }

    /// Pattern duration n_ticks/clock_frequency in seconds.
    pub fn duration(&self) -> f64 {
        self.n_ticks as f64 / self.clock_frequency
    }

    /// Duration in units of the qubit oscillation period.
    pub fn duration_periods(&self) -> f64 {
        self.n_ticks as f64 / self.substeps_per_period
    }
}
