//! Seeded Monte Carlo measurement shots and Rabi-scan datasets.

use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::click::{click_probability, JpmClickModel, PointerState};
use crate::error::MeasurementError;

/// Empirical click counts for a prepared qubit state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShotRecord {
    pub shots: u64,
    pub clicks: u64,
}

impl ShotRecord {
    pub fn click_rate(&self) -> f64 {
        self.clicks as f64 / self.shots as f64
    }
}

/// Sample `shots` measurements of a qubit with excited-state probability
/// `p1`: Bernoulli projection onto bright/dark, then a Bernoulli click.
///
/// Deterministic per seed; the empirical click rate converges to
/// p1·P(click|bright) + (1−p1)·P(click|dark).
pub fn measurement_shot(
    model: &JpmClickModel,
    qubit_excited_prob: f64,
    rng_seed: u64,
    shots: u64,
) -> Result<ShotRecord, MeasurementError> {
    if !(0.0..=1.0).contains(&qubit_excited_prob) {
        return Err(MeasurementError::InvalidRequest(format!(
            "excited-state probability must be in [0, 1], got {qubit_excited_prob}"
        )));
    }
    if shots == 0 {
        return Err(MeasurementError::InvalidRequest(
            "shots must be at least 1".into(),
        ));
    }
    let p_bright = click_probability(model, PointerState::Bright);
    let p_dark = click_probability(model, PointerState::Dark);
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut clicks = 0u64;
    for _ in 0..shots {
        let excited = rng.random::<f64>() < qubit_excited_prob;
        let p_click = if excited { p_bright } else { p_dark };
        if rng.random::<f64>() < p_click {
            clicks += 1;
        }
    }
    Ok(ShotRecord { shots, clicks })
}

/// One point of a detector-resolved Rabi fringe.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RabiPoint {
    pub theta_rad: f64,
    pub click_rate: f64,
    pub shots: u64,
}

/// Sweep the Rabi angle θ, preparing p1 = sin²(θ/2) and recording the
/// Monte-Carlo click rate. The fringe visibility equals
/// P(click|bright) − P(click|dark).
pub fn rabi_scan(
    model: &JpmClickModel,
    thetas: &[f64],
    shots: u64,
    rng_seed: u64,
) -> Result<Vec<RabiPoint>, MeasurementError> {
    let mut points = Vec::with_capacity(thetas.len());
    for (i, &theta) in thetas.iter().enumerate() {
        let p1 = (theta / 2.0).sin().powi(2);
        let record = measurement_shot(model, p1, rng_seed.wrapping_add(i as u64), shots)?;
        points.push(RabiPoint {
            theta_rad: theta,
            click_rate: record.click_rate(),
            shots,
        });
    }
    Ok(points)
}

/// Rabi dataset as CSV with header `theta_rad,click_rate,shots`.
pub fn write_rabi_csv<W: Write>(points: &[RabiPoint], mut w: W) -> std::io::Result<()> {
    writeln!(w, "theta_rad,click_rate,shots")?;
    for p in points {
        writeln!(w, "{:.8e},{:.8e},{}", p.theta_rad, p.click_rate, p.shots)?;
    }
    Ok(())
}
