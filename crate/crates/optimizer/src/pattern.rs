//! Bit patterns on the clock grid and their conversion to pulse events.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use sfq_core::{PulseEvent, TransmonSpec};

use crate::error::OptimizerError;
use crate::grid::ClockGrid;

/// A clock grid plus a bit string; bit k set = one SFQ pulse at tick k.
#[derive(Debug, Clone, PartialEq)]
pub struct PulsePattern {
    grid: ClockGrid,
    bits: Vec<bool>,
}

impl PulsePattern {
    /// Wrap a bit string, which must match the register length.
    pub fn new(grid: ClockGrid, bits: Vec<bool>) -> Result<Self, OptimizerError> {
        if bits.len() != grid.n_ticks() {
            return Err(OptimizerError::SeedLengthMismatch {
                expected: grid.n_ticks(),
                actual: bits.len(),
            });
        }
        Ok(Self { grid, bits })
    }

    /// All-zero pattern (streams silence).
    pub fn empty(grid: ClockGrid) -> Self {
        let bits = vec![false; grid.n_ticks()];
        Self { grid, bits }
    }

    pub fn grid(&self) -> &ClockGrid {
        &self.grid
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn pulse_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Pattern duration in seconds.
    pub fn duration(&self) -> f64 {
        self.grid.duration()
    }

    /// Bits as a '0'/'1' string, tick 0 first.
    pub fn to_bit_string(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

/// Round to the nearest integer, choosing the smaller one when exactly
/// halfway (deterministic and unbiased at the half-tick singularity).
fn round_half_down(x: f64) -> f64 {
    (x - 0.5).ceil()
}

/// Resonant pattern: n = round(target_angle/δθ) pulses, one at the tick
/// nearest each integer multiple of the qubit period.
///
/// Errors if the grid cannot hold n qubit periods.
pub fn resonant_pattern(
    spec: &TransmonSpec,
    grid: &ClockGrid,
    target_angle: f64,
    delta_theta: f64,
) -> Result<PulsePattern, OptimizerError> {
    let implied_substeps = grid.clock_frequency() * spec.period();
    if (implied_substeps - grid.substeps_per_period()).abs() > 1e-9 * grid.substeps_per_period() {
        return Err(OptimizerError::InvalidGrid(format!(
            "grid carries {} substeps per period but the qubit period implies {}",
            grid.substeps_per_period(),
            implied_substeps
        )));
    }
    if !(target_angle >= 0.0) {
        return Err(OptimizerError::InvalidConfig(format!(
            "target angle must be non-negative, got {target_angle}"
        )));
    }
    let n = if target_angle == 0.0 {
        0
    } else {
        if !(delta_theta > 0.0) {
            return Err(OptimizerError::InvalidConfig(format!(
                "tip angle must be positive to reach a {target_angle} rad target"
            )));
        }
        (target_angle / delta_theta).round() as usize
    };
    let mut bits = vec![false; grid.n_ticks()];
    let substeps = grid.substeps_per_period();
    for pulse in 0..n {
        let tick = round_half_down(pulse as f64 * substeps) as usize;
        if tick >= grid.n_ticks() {
            return Err(OptimizerError::GridCapacity {
                needed: round_half_down((n - 1) as f64 * substeps) as usize + 1,
                available: grid.n_ticks(),
            });
        }
        bits[tick] = true;
    }
    Ok(PulsePattern {
        grid: *grid,
        bits,
    })
}

/// One pulse event per set bit, at the tick time plus an independent
/// Gaussian offset of standard deviation `jitter_sigma` (none when zero).
///
/// Deterministic for a fixed seed; the same seed draws the same standard
/// normals regardless of sigma, so sweeps over sigma share common random
/// numbers. Events are re-sorted by effective time and clamped to the
/// pattern window.
pub fn pattern_to_events(
    pattern: &PulsePattern,
    jitter_sigma: f64,
    rng_seed: u64,
) -> Result<Vec<PulseEvent>, OptimizerError> {
    if !(jitter_sigma >= 0.0) {
        return Err(OptimizerError::InvalidConfig(format!(
            "jitter sigma must be non-negative, got {jitter_sigma}"
        )));
    }
    let grid = pattern.grid();
    let duration = grid.duration();
    let mut events = Vec::with_capacity(pattern.pulse_count());
    if jitter_sigma == 0.0 {
        for (k, &bit) in pattern.bits().iter().enumerate() {
            if bit {
                events.push(PulseEvent::at(grid.tick_time(k)));
            }
        }
        return Ok(events);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    for (k, &bit) in pattern.bits().iter().enumerate() {
        if bit {
            let z: f64 = StandardNormal.sample(&mut rng);
            let nominal = grid.tick_time(k);
            let offset = (jitter_sigma * z).clamp(-nominal, duration - nominal);
            events.push(PulseEvent::with_jitter(nominal, offset));
        }
    }
    events.sort_by(|a, b| a.time().total_cmp(&b.time()));
    Ok(events)
}
