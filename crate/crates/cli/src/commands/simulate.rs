//! `sfqctl simulate`: propagate a pattern, report fidelity and leakage, and
//! optionally dump the rotating-frame Bloch trajectory.

use std::io::Write;

use anyhow::Context;
use sfq_core::dynamics::state_trajectory;
use sfq_core::{average_gate_fidelity, propagate_sequence, to_rotating_frame, TargetGate};
use sfq_coprocessor::read_pattern_file;
use sfq_optimizer::{pattern_to_events, resonant_pattern, ClockGrid, PulsePattern};

use crate::config::{self, SimulateConfig};
use crate::output::{self, sig9};
use crate::CommonArgs;

pub fn run(args: &CommonArgs) -> anyhow::Result<()> {
    let mut cfg: SimulateConfig = config::load(&args.config)?;
    if let Some(seed) = args.seed {
        cfg.rng_seed = seed;
    }
    output::echo_resolved_config(&args.out, &cfg)?;

    let spec = cfg.qubit.to_spec()?;
    let tip_angle = cfg.qubit.tip_angle(cfg.drive.tip_angle_rad)?;
    let grid = ClockGrid::for_qubit(&spec, cfg.drive.substeps_per_period, cfg.drive.register_bits)?;

    let pattern = match &cfg.drive.pattern_file {
        Some(file) => {
            let path = config::resolve_path(&args.config, file);
            let text = std::fs::File::open(&path)
                .with_context(|| format!("opening pattern file {}", path.display()))?;
            let lines = read_pattern_file(std::io::BufReader::new(text))?;
            let bits = lines
                .into_iter()
                .next()
                .context("pattern file is empty")?;
            PulsePattern::new(grid, bits)?
        }
        None => resonant_pattern(&spec, &grid, cfg.drive.target_angle_rad, tip_angle)?,
    };

    let events = pattern_to_events(&pattern, cfg.drive.jitter_sigma_ps * 1e-12, cfg.rng_seed)?;
    let duration = pattern.duration();
    let propagator = propagate_sequence(&spec, &events, tip_angle, duration)?;
    let rotated = to_rotating_frame(&propagator, &spec, duration)?;
    let target = TargetGate::ry(cfg.drive.target_angle_rad);
    let report = average_gate_fidelity(&rotated, &target, duration)?;

    if cfg.output.trajectory_csv {
        let points = state_trajectory(&spec, &events, tip_angle, duration)?;
        let path = args.out.join("trajectory.csv");
        let mut file = std::io::BufWriter::new(std::fs::File::create(&path)?);
        writeln!(file, "time_s,bloch_x,bloch_y,bloch_z,pop_leak")?;
        for p in &points {
            writeln!(
                file,
                "{:.8e},{:.8e},{:.8e},{:.8e},{:.8e}",
                p.time, p.bloch_x, p.bloch_y, p.bloch_z, p.leakage_population
            )?;
        }
    }

    let summary = serde_json::json!({
        "command": "simulate",
        "rng_seed": cfg.rng_seed,
        "tip_angle_rad": sig9(tip_angle),
        "pulse_count": pattern.pulse_count(),
        "duration_s": sig9(duration),
        "avg_gate_fidelity": sig9(report.avg_gate_fidelity),
        "infidelity": sig9(report.infidelity()),
        "leakage": sig9(report.leakage),
        "unitarity_defect": sig9(propagator.unitarity_defect()),
    });
    output::write_report(&args.out, "simulate_report.json", &summary)?;
    output::print_summary(&summary, args.format);
    Ok(())
}
