//! Power-versus-activity comparison of candidate logic families.
//!
//! Activity factor is the fraction of clock cycles in which a device
//! switches. Devices are an even logic/memory mix with maximum activity 1
//! for logic and 0.5 for memory, so the effective activity is
//! a_eff = (a + min(a, 0.5))/2.

use std::io::Write;

use serde::Serialize;
use sfq_core::PhysicalConstants;

/// Logic families compared in the per-device dissipation curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Technology {
    /// Conventional 4 K SFQ with resistor bias: large static floor.
    Rsfq,
    /// Low-I_c RSFQ tuned for millikelvin operation; bias resistors remain.
    RsfqMillikelvin,
    /// Bias-resistor-free SFQ variants: no static dissipation.
    RqlErsfq,
    /// Reduced-V_dd CMOS at 4 K: gate-leakage static floor.
    CryoCmos,
}

impl Technology {
    pub fn label(&self) -> &'static str {
        match self {
            Technology::Rsfq => "rsfq",
            Technology::RsfqMillikelvin => "rsfq_mk",
            Technology::RqlErsfq => "rql_ersfq",
            Technology::CryoCmos => "cryo_cmos",
        }
    }

    pub const ALL: [Technology; 4] = [
        Technology::Rsfq,
        Technology::RsfqMillikelvin,
        Technology::RqlErsfq,
        Technology::CryoCmos,
    ];
}

/// Parameters behind the comparison curves, exposed so the assumed critical
/// currents, CMOS electricals and the RSFQ static multiplier can be varied.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TechnologyParams {
    /// Shared clock frequency in hertz.
    pub clock: f64,
    /// I_b/I_c bias fraction for the SFQ families.
    pub bias_fraction: f64,
    /// Critical currents in ampere: conventional RSFQ, millikelvin RSFQ,
    /// RQL/ERSFQ.
    pub ic_rsfq: f64,
    pub ic_rsfq_mk: f64,
    pub ic_rql_ersfq: f64,
    /// Bias-resistor heating of RSFQ relative to its full-activity dynamic
    /// dissipation (midpoint of the observed 60-70 range).
    pub rsfq_static_multiplier: f64,
    /// CMOS supply in volt, effective gate capacitance in farad (0.5 fF/um
    /// at a 1 um device width) and gate leakage in ampere.
    pub vdd: f64,
    pub effective_capacitance: f64,
    pub leakage_current: f64,
}

impl Default for TechnologyParams {
    fn default() -> Self {
        Self {
            clock: 10e9,
            bias_fraction: 0.75,
            ic_rsfq: 250e-6,
            ic_rsfq_mk: 10e-6,
            ic_rql_ersfq: 10e-6,
            rsfq_static_multiplier: 65.0,
            vdd: 0.5,
            effective_capacitance: 0.5e-15,
            leakage_current: 1.5e-9,
        }
    }
}

/// Effective activity of the even logic/memory mix.
pub fn effective_activity(activity: f64) -> f64 {
    (activity + activity.min(0.5)) / 2.0
}

/// Per-device power of `tech` at `activity`.
pub fn device_power(
    tech: Technology,
    activity: f64,
    params: &TechnologyParams,
    constants: &PhysicalConstants,
) -> f64 {
    let a_eff = effective_activity(activity);
    let sfq_dynamic = |ic: f64| {
        constants.flux_quantum() * params.bias_fraction * ic * params.clock * a_eff
    };
    match tech {
        Technology::RqlErsfq => sfq_dynamic(params.ic_rql_ersfq),
        Technology::Rsfq => {
            let full = constants.flux_quantum()
                * params.bias_fraction
                * params.ic_rsfq
                * params.clock
                * effective_activity(1.0);
            params.rsfq_static_multiplier * full + sfq_dynamic(params.ic_rsfq)
        }
        Technology::RsfqMillikelvin => {
            let full = constants.flux_quantum()
                * params.bias_fraction
                * params.ic_rsfq_mk
                * params.clock
                * effective_activity(1.0);
            params.rsfq_static_multiplier * full + sfq_dynamic(params.ic_rsfq_mk)
        }
        Technology::CryoCmos => {
            params.leakage_current * params.vdd
                + a_eff * params.effective_capacitance * params.vdd * params.vdd * params.clock
        }
    }
}

/// One point of the comparison dataset.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ActivityRow {
    pub technology: &'static str,
    pub activity: f64,
    pub power_watts: f64,
}

/// Tabulate per-device power over an activity grid for each technology.
pub fn activity_curves(
    technologies: &[Technology],
    activity_grid: &[f64],
    params: &TechnologyParams,
    constants: &PhysicalConstants,
) -> Vec<ActivityRow> {
    let mut rows = Vec::with_capacity(technologies.len() * activity_grid.len());
    for &tech in technologies {
        for &a in activity_grid {
            rows.push(ActivityRow {
                technology: tech.label(),
                activity: a,
                power_watts: device_power(tech, a, params, constants),
            });
        }
    }
    rows
}

/// CSV with header `technology,activity,power_watts`.
pub fn write_activity_csv<W: Write>(rows: &[ActivityRow], mut w: W) -> std::io::Result<()> {
    writeln!(w, "technology,activity,power_watts")?;
    for r in rows {
        writeln!(w, "{},{:.8e},{:.8e}", r.technology, r.activity, r.power_watts)?;
    }
    Ok(())
}
