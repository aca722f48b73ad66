//! `sfqctl budget`: assemble the power/thermal/footprint roll-up. Prints the
//! human-readable table to stdout (JSON with --format json) and always writes
//! the JSON report.

use std::fs::File;
use std::io::BufWriter;

use anyhow::bail;
use sfq_budget::{
    activity_curves, footprint_report, heterodyne_baseline, wiring_geometry, write_activity_csv,
    BudgetReport, CoolingStage, JunctionBias, Material, SubsystemSpec, Technology, WiringSpec,
};
use sfq_core::PhysicalConstants;

use crate::config::{self, BudgetConfig, WiringSection};
use crate::output;
use crate::{CommonArgs, OutputFormat};

pub fn run(args: &CommonArgs) -> anyhow::Result<()> {
    let cfg: BudgetConfig = config::load(&args.config)?;
    output::echo_resolved_config(&args.out, &cfg)?;
    let constants = PhysicalConstants::codata();

    let mut subsystems = Vec::new();
    for s in &cfg.subsystem {
        let stage = parse_stage(&s.stage)?;
        subsystems.push((
            SubsystemSpec {
                name: s.name.clone(),
                junctions_per_channel: s.junctions_per_channel,
                channels: s.channels,
                clock: s.clock_ghz * 1e9,
                duty_cycle: s.duty_cycle,
                activity: s.activity,
                junction: JunctionBias::new(s.critical_current_ua * 1e-6, s.bias_fraction, 0.0)?,
            },
            stage,
        ));
    }

    let mut wiring = Vec::new();
    for w in &cfg.wiring {
        wiring.push((w.name.clone(), wiring_spec(w)?));
    }

    let heterodyne = cfg
        .heterodyne
        .as_ref()
        .map(|h| {
            heterodyne_baseline(
                h.hemt_power_mw * 1e-3,
                h.qubits_per_amp,
                h.amps_per_hemt,
                h.preamp_pump_nw * 1e-9,
                h.qubits,
            )
        })
        .transpose()?;

    let report = BudgetReport::assemble(&subsystems, &wiring, heterodyne, &constants)?;

    let mut document = serde_json::to_value(&report)?;
    if let Some(f) = &cfg.footprint {
        let fp = footprint_report(
            (f.qubit_cell_um[0] * 1e-6, f.qubit_cell_um[1] * 1e-6),
            f.array_count,
            (f.interface_cell_um[0] * 1e-6, f.interface_cell_um[1] * 1e-6),
        )?;
        document["footprint"] = serde_json::to_value(fp)?;
    }
    if let Some(a) = &cfg.activity_curves {
        let rows = activity_curves(&Technology::ALL, &a.grid, &Default::default(), &constants);
        let path = args.out.join("activity.csv");
        write_activity_csv(&rows, BufWriter::new(File::create(&path)?))?;
        document["activity_dataset"] = "activity.csv".into();
    }

    output::write_report(&args.out, "budget_report.json", &document)?;
    match args.format {
        OutputFormat::Json => output::print_summary(&document, OutputFormat::Json),
        OutputFormat::Csv => print!("{}", report.render_table()),
    }
    Ok(())
}

fn parse_stage(stage: &str) -> anyhow::Result<CoolingStage> {
    match stage {
        "millikelvin" => Ok(CoolingStage::Millikelvin),
        "three_kelvin" | "3k" => Ok(CoolingStage::ThreeKelvin),
        other => bail!("subsystem.stage: expected millikelvin or three_kelvin, got {other:?}"),
    }
}

fn wiring_spec(section: &WiringSection) -> anyhow::Result<WiringSpec> {
    let material = match section.material.as_str() {
        "kapton_hn" => Material::KaptonHn,
        "nbti" => Material::NbTi,
        "custom" => match (section.custom_prefactor_w_per_m_k, section.custom_exponent) {
            (Some(prefactor), Some(exponent)) => Material::Custom { prefactor, exponent },
            _ => bail!(
                "wiring {:?}: custom material needs custom_prefactor_w_per_m_k and custom_exponent",
                section.name
            ),
        },
        other => bail!(
            "wiring {:?}: material must be kapton_hn, nbti or custom, got {other:?}",
            section.name
        ),
    };

    let area = match (section.cross_section_area_m2, &section.geometry) {
        (Some(area), None) => area,
        (None, Some(g)) => {
            let xs = wiring_geometry(
                g.lines,
                g.trace_width_um * 1e-6,
                g.spacing_um * 1e-6,
                g.dielectric_thickness_um * 1e-6,
                g.metal_thickness_nm * 1e-9,
                g.groundplane_factor,
            )?;
            match g.conductor.as_str() {
                "dielectric" => xs.dielectric_area,
                "metal" => xs.metal_area,
                other => bail!(
                    "wiring {:?}: geometry.conductor must be dielectric or metal, got {other:?}",
                    section.name
                ),
            }
        }
        (Some(_), Some(_)) => bail!(
            "wiring {:?}: give either cross_section_area_m2 or a geometry block, not both",
            section.name
        ),
        (None, None) => bail!(
            "wiring {:?}: needs cross_section_area_m2 or a geometry block",
            section.name
        ),
    };

    Ok(WiringSpec {
        material,
        cross_section_area: area,
        length: section.length_m,
        t_hot: section.t_hot_k,
        t_cold: section.t_cold_k,
    })
}
