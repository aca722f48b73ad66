//! Register-size / clock / tip-angle tradeoff scans for the (π/2)_y gate.

use std::io::Write;

use serde::{Deserialize, Serialize};
use sfq_core::{TargetGate, TransmonSpec};

use crate::error::OptimizerError;
use crate::ga::{ga_search, GAConfig};
use crate::grid::ClockGrid;
use crate::pattern::{resonant_pattern, PulsePattern};

/// One scan point: best infidelity found for a (tip angle, clock, register
/// size) resource combination.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub tip_angle_rad: f64,
    pub substeps: f64,
    pub register_bits: usize,
    pub duration_periods: f64,
    pub infidelity: f64,
}

/// Grid of best (π/2)_y infidelities per (tip angle, substep, size).
///
/// Register sizes are scanned in ascending order within each
/// (tip, substep) pair; each size is seeded with the resonant pattern (when
/// it fits) and with the previous size's winner padded with trailing zeros,
/// so best infidelity is non-increasing in register size. Per-point RNG
/// seeds derive from `ga.rng_seed` by point index.
pub fn scan_register_size(
    spec: &TransmonSpec,
    tip_angles: &[f64],
    substeps: &[f64],
    sizes: &[usize],
    ga: &GAConfig,
) -> Result<Vec<ScanRow>, OptimizerError> {
    if tip_angles.is_empty() || substeps.is_empty() || sizes.is_empty() {
        return Err(OptimizerError::InvalidConfig(
            "scan lists must be non-empty".into(),
        ));
    }
    let target = TargetGate::y90();
    let target_angle = std::f64::consts::FRAC_PI_2;
    let mut rows = Vec::with_capacity(tip_angles.len() * substeps.len() * sizes.len());
    let mut point = 0u64;

    for &tip in tip_angles {
        for &sub in substeps {
            let mut sorted_sizes = sizes.to_vec();
            sorted_sizes.sort_unstable();
            let mut previous_best: Option<PulsePattern> = None;

            for &size in &sorted_sizes {
                let grid = ClockGrid::for_qubit(spec, sub, size)?;
                let mut seeds: Vec<PulsePattern> = Vec::new();
                if let Ok(resonant) = resonant_pattern(spec, &grid, target_angle, tip) {
                    seeds.push(resonant);
                }
                if let Some(prev) = &previous_best {
                    let mut bits = prev.bits().to_vec();
                    bits.resize(size, false);
                    seeds.push(PulsePattern::new(grid, bits)?);
                }

                let config = GAConfig {
                    rng_seed: ga.rng_seed.wrapping_add(point),
                    ..ga.clone()
                };
                let result = ga_search(&config, &grid, spec, &target, tip, &seeds)?;
                rows.push(ScanRow {
                    tip_angle_rad: tip,
                    substeps: sub,
                    register_bits: size,
                    duration_periods: grid.duration_periods(),
                    infidelity: result.best_infidelity(),
                });
                previous_best = Some(result.best_pattern);
                point += 1;
            }
        }
    }
    Ok(rows)
}

/// CSV dataset with the fixed header
/// `tip_angle_rad,substeps,register_bits,duration_periods,infidelity`.
pub fn write_scan_csv<W: Write>(rows: &[ScanRow], mut w: W) -> std::io::Result<()> {
    writeln!(
        w,
        "tip_angle_rad,substeps,register_bits,duration_periods,infidelity"
    )?;
    for r in rows {
        writeln!(
            w,
            "{:.8e},{:.8e},{},{:.8e},{:.8e}",
            r.tip_angle_rad, r.substeps, r.register_bits, r.duration_periods, r.infidelity
        )?;
    }
    Ok(())
}
