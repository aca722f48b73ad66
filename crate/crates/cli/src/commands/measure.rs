//! `sfqctl measure`: closed-form and Monte Carlo readout figures side by
//! side, plus the detector-resolved Rabi fringe dataset.

use std::f64::consts::PI;
use std::fs::File;
use std::io::BufWriter;

use sfq_measurement::{
    click_probability, dispersive_shift, measurement_shot, rabi_scan, single_shot_fidelity,
    write_rabi_csv, DispersiveParams, JpmClickModel, PointerState,
};

use crate::config::{self, MeasureConfig};
use crate::output::{self, sig9};
use crate::CommonArgs;

pub fn run(args: &CommonArgs) -> anyhow::Result<()> {
    let mut cfg: MeasureConfig = config::load(&args.config)?;
    if let Some(seed) = args.seed {
        cfg.rng_seed = seed;
    }
    output::echo_resolved_config(&args.out, &cfg)?;

    let d = &cfg.detector;
    let model = JpmClickModel::new(
        d.bright_mean_photons,
        d.dark_residual_photons,
        d.per_photon_efficiency,
        d.dark_click_probability,
    )?;

    let p_bright = click_probability(&model, PointerState::Bright);
    let p_dark = click_probability(&model, PointerState::Dark);
    let fidelity = single_shot_fidelity(&model);

    // Monte Carlo estimate of the same quantities
    let shots = cfg.rabi.shots;
    let bright_mc = measurement_shot(&model, 1.0, cfg.rng_seed, shots)?;
    let dark_mc = measurement_shot(&model, 0.0, cfg.rng_seed.wrapping_add(1), shots)?;
    let fidelity_mc = bright_mc.click_rate() - dark_mc.click_rate();

    let thetas: Vec<f64> = (0..cfg.rabi.points)
        .map(|k| {
            if cfg.rabi.points == 1 {
                0.0
            } else {
                k as f64 * cfg.rabi.max_theta_rad / (cfg.rabi.points as f64 - 1.0)
            }
        })
        .collect();
    let points = rabi_scan(&model, &thetas, shots, cfg.rng_seed.wrapping_add(2))?;
    let rabi_path = args.out.join("rabi.csv");
    write_rabi_csv(&points, BufWriter::new(File::create(&rabi_path)?))?;

    let mut summary = serde_json::json!({
        "command": "measure",
        "rng_seed": cfg.rng_seed,
        "closed_form": {
            "click_probability_bright": sig9(p_bright),
            "click_probability_dark": sig9(p_dark),
            "single_shot_fidelity": sig9(fidelity),
        },
        "monte_carlo": {
            "shots": shots,
            "click_rate_bright": sig9(bright_mc.click_rate()),
            "click_rate_dark": sig9(dark_mc.click_rate()),
            "fidelity_estimate": sig9(fidelity_mc),
        },
        "rabi_dataset": "rabi.csv",
    });

    if let Some(section) = &cfg.dispersive {
        let shift = dispersive_shift(&DispersiveParams {
            coupling_g: 2.0 * PI * section.coupling_g_mhz * 1e6,
            detuning_delta: 2.0 * PI * section.detuning_mhz * 1e6,
        })?;
        summary["dispersive"] = serde_json::json!({
            "chi_rad_per_s": sig9(shift.chi),
            "chi_over_2pi_hz": sig9(shift.chi / (2.0 * PI)),
            "ringup_time_s": sig9(shift.ringup_time),
        });
    }

    output::write_report(&args.out, "measure_report.json", &summary)?;
    output::print_summary(&summary, args.format);
    Ok(())
}
