//! Budget roll-up: per-stage line items, wiring heat, junction totals and
//! headroom against the stage cooling capacities.

use serde::Serialize;
use sfq_core::PhysicalConstants;

use crate::comparison::HeterodyneReport;
use crate::error::BudgetError;
use crate::power::{subsystem_power, SubsystemSpec};
use crate::wiring::{wiring_heat, WiringSpec};

/// Cryostat stage a line item loads.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoolingStage {
    Millikelvin,
    ThreeKelvin,
}

/// One budget line: a subsystem's power or a wire bundle's conducted heat.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StageLine {
    pub name: String,
    pub stage: CoolingStage,
    pub power_watts: f64,
    pub junctions: u64,
}

/// Full budget with totals and headroom flags.
///
/// Totals are sums of the line items in listed order (first subsystems, then
/// wiring), so they reproduce exactly on every run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BudgetReport {
    pub lines: Vec<StageLine>,
    pub millikelvin_total_watts: f64,
    pub three_kelvin_total_watts: f64,
    pub junction_total: u64,
    pub millikelvin_capacity_watts: f64,
    pub three_kelvin_capacity_watts: f64,
    pub millikelvin_within_capacity: bool,
    pub three_kelvin_within_capacity: bool,
    pub heterodyne_baseline: Option<HeterodyneReport>,
}

/// Available cooling power at the millikelvin stage of a large dilution
/// refrigerator.
pub const MILLIKELVIN_CAPACITY_WATTS: f64 = 10e-3;
/// Available cooling power at the 3 K pulse-tube stage.
pub const THREE_KELVIN_CAPACITY_WATTS: f64 = 10.0;

impl BudgetReport {
    /// Assemble a report from subsystems and wire bundles. Wiring heat loads
    /// sink at the cold end (millikelvin stage).
    pub fn assemble(
        subsystems: &[(SubsystemSpec, CoolingStage)],
        wiring: &[(String, WiringSpec)],
        heterodyne: Option<HeterodyneReport>,
        constants: &PhysicalConstants,
    ) -> Result<Self, BudgetError> {
        let mut lines = Vec::with_capacity(subsystems.len() + wiring.len());
        for (spec, stage) in subsystems {
            let power = subsystem_power(spec, constants)?;
            lines.push(StageLine {
                name: spec.name.clone(),
                stage: *stage,
                power_watts: power.total_watts,
                junctions: spec.junction_total(),
            });
        }
        for (name, spec) in wiring {
            lines.push(StageLine {
                name: name.clone(),
                stage: CoolingStage::Millikelvin,
                power_watts: wiring_heat(spec)?,
                junctions: 0,
            });
        }

        let mut millikelvin_total = 0.0;
        let mut three_kelvin_total = 0.0;
        let mut junction_total = 0u64;
        for line in &lines {
            match line.stage {
                CoolingStage::Millikelvin => millikelvin_total += line.power_watts,
                CoolingStage::ThreeKelvin => three_kelvin_total += line.power_watts,
            }
            junction_total += line.junctions;
        }

        Ok(Self {
            lines,
            millikelvin_total_watts: millikelvin_total,
            three_kelvin_total_watts: three_kelvin_total,
            junction_total,
            millikelvin_capacity_watts: MILLIKELVIN_CAPACITY_WATTS,
            three_kelvin_capacity_watts: THREE_KELVIN_CAPACITY_WATTS,
            millikelvin_within_capacity: millikelvin_total <= MILLIKELVIN_CAPACITY_WATTS,
            three_kelvin_within_capacity: three_kelvin_total <= THREE_KELVIN_CAPACITY_WATTS,
            heterodyne_baseline: heterodyne,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable table.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:<28} {:>12} {:>14} {:>12}\n",
            "line item", "stage", "power (W)", "junctions"
        ));
        for line in &self.lines {
            let stage = match line.stage {
                CoolingStage::Millikelvin => "millikelvin",
                CoolingStage::ThreeKelvin => "3 K",
            };
            out.push_str(&format!(
                "{:<28} {:>12} {:>14.6e} {:>12}\n",
                line.name, stage, line.power_watts, line.junctions
            ));
        }
        out.push_str(&format!(
            "millikelvin total: {:.6e} W of {:.1e} W capacity ({})\n",
            self.millikelvin_total_watts,
            self.millikelvin_capacity_watts,
            if self.millikelvin_within_capacity { "ok" } else { "OVER" }
        ));
        out.push_str(&format!(
            "3 K total:         {:.6e} W of {:.1e} W capacity ({})\n",
            self.three_kelvin_total_watts,
            self.three_kelvin_capacity_watts,
            if self.three_kelvin_within_capacity { "ok" } else { "OVER" }
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::power::JunctionBias;
    use crate::wiring::Material;

    const CODATA: PhysicalConstants = PhysicalConstants::codata();

    fn reference_system() -> (Vec<(SubsystemSpec, CoolingStage)>, Vec<(String, WiringSpec)>) {
        let interface = SubsystemSpec {
            name: "interface chip".into(),
            junctions_per_channel: 20,
            channels: 100_000_000,
            clock: 5e9,
            duty_cycle: 0.1,
            activity: 1.0,
            junction: JunctionBias::new(1e-6, 0.75, 0.0).unwrap(),
        };
        let pgu = SubsystemSpec {
            name: "pattern generator".into(),
            junctions_per_channel: 1000,
            channels: 100_000_000,
            clock: 30e9,
            duty_cycle: 0.1,
            activity: 0.21,
            junction: JunctionBias::new(100e-6, 0.75, 0.0).unwrap(),
        };
        let kapton = WiringSpec {
            material: Material::KaptonHn,
            cross_section_area: 1.3e-2,
            length: 1.0,
            t_hot: 3.0,
            t_cold: 0.0,
        };
        let nbti = WiringSpec {
            material: Material::NbTi,
            cross_section_area: 1.5e-4,
            length: 1.0,
            t_hot: 3.0,
            t_cold: 0.0,
        };
        (
            vec![
                (interface, CoolingStage::Millikelvin),
                (pgu, CoolingStage::ThreeKelvin),
            ],
            vec![("kapton flex".into(), kapton), ("nbti traces".into(), nbti)],
        )
    }

    #[test]
    fn totals_equal_sum_of_lines_exactly() {
        let (subsystems, wiring) = reference_system();
        let report = BudgetReport::assemble(&subsystems, &wiring, None, &CODATA).unwrap();
        let mk: f64 = report
            .lines
            .iter()
            .filter(|l| l.stage == CoolingStage::Millikelvin)
            .map(|l| l.power_watts)
            .sum();
        let k3: f64 = report
            .lines
            .iter()
            .filter(|l| l.stage == CoolingStage::ThreeKelvin)
            .map(|l| l.power_watts)
            .sum();
        assert_eq!(report.millikelvin_total_watts, mk);
        assert_eq!(report.three_kelvin_total_watts, k3);
    }

    #[test]
    fn reference_system_sits_inside_capacity() {
        let (subsystems, wiring) = reference_system();
        let report = BudgetReport::assemble(&subsystems, &wiring, None, &CODATA).unwrap();
        // ~1.55 mW interface + ~0.25 mW wiring at millikelvin; ~9.8 W at 3 K
        assert!(report.millikelvin_within_capacity);
        assert!(report.three_kelvin_within_capacity);
        assert!(report.millikelvin_total_watts > 1e-3);
        assert!(report.three_kelvin_total_watts > 9.0);
    }

    #[test]
    fn empty_system_is_all_zeros() {
        let report = BudgetReport::assemble(&[], &[], None, &CODATA).unwrap();
        assert_eq!(report.millikelvin_total_watts, 0.0);
        assert_eq!(report.three_kelvin_total_watts, 0.0);
        assert_eq!(report.junction_total, 0);
        assert!(report.millikelvin_within_capacity);
    }

    #[test]
    fn table_and_json_render() {
        let (subsystems, wiring) = reference_system();
        let report = BudgetReport::assemble(&subsystems, &wiring, None, &CODATA).unwrap();
        let table = report.render_table();
        assert!(table.contains("pattern generator"));
        assert!(table.contains("ok"));
        let json = report.to_json();
        assert!(json.contains("\"millikelvin_total_watts\""));
    }
}
