//! End-to-end checks of the sfqctl binary: exit codes, error JSON,
//! reproducibility of primary outputs, and the reference numbers of each
//! subcommand.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn sfqctl() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sfqctl"))
}

fn write(path: &Path, content: &str) {
    fs::write(path, content).unwrap();
}

fn run_ok(args: &[&str]) -> Output {
    let out = sfqctl().args(args).output().unwrap();
    assert!(
        out.status.success(),
        "command failed: {}\nstderr: {}",
        args.join(" "),
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

fn json_report(dir: &Path, name: &str) -> serde_json::Value {
    let text = fs::read_to_string(dir.join(name)).unwrap();
    serde_json::from_str(&text).unwrap()
}

const QUBIT_BLOCK: &str = r#"
[qubit]
levels = 3
frequency_ghz = 5.0
anharmonicity_mhz = 200.0
self_capacitance_ff = 100.0
coupling_capacitance_af = 100.0
"#;

fn simulate_config(dir: &Path) -> PathBuf {
    let path = dir.join("simulate.toml");
    write(
        &path,
        &format!(
            r#"rng_seed = 1
{QUBIT_BLOCK}
[drive]
substeps_per_period = 8.0
register_bits = 800
target_angle_rad = 1.5707963267948966
tip_angle_rad = 0.015707963267948967

[output]
trajectory_csv = true
"#
        ),
    );
    path
}

#[test]
fn simulate_reference_point_and_reproducibility() {
    let tmp = tempfile::tempdir().unwrap();
    let config = simulate_config(tmp.path());
    let out_a = tmp.path().join("a");
    let out_b = tmp.path().join("b");

    run_ok(&["simulate", "--config", config.to_str().unwrap(), "--out", out_a.to_str().unwrap()]);
    run_ok(&["simulate", "--config", config.to_str().unwrap(), "--out", out_b.to_str().unwrap()]);

    let report = json_report(&out_a, "simulate_report.json");
    let fidelity = report["avg_gate_fidelity"].as_f64().unwrap();
    assert!(fidelity >= 0.999, "F = {fidelity}");
    assert_eq!(report["pulse_count"], 100);

    // identical config + seed -> byte-identical primary outputs
    for name in ["simulate_report.json", "trajectory.csv", "resolved_config.json"] {
        let a = fs::read(out_a.join(name)).unwrap();
        let b = fs::read(out_b.join(name)).unwrap();
        assert_eq!(a, b, "{name} differs between reruns");
    }

    let trajectory = fs::read_to_string(out_a.join("trajectory.csv")).unwrap();
    assert!(trajectory.starts_with("time_s,bloch_x,bloch_y,bloch_z,pop_leak"));
    assert_eq!(trajectory.lines().count(), 1 + 100 + 2);
}

#[test]
fn seed_flag_overrides_config() {
    let tmp = tempfile::tempdir().unwrap();
    let config = simulate_config(tmp.path());
    let out = tmp.path().join("out");
    run_ok(&[
        "simulate",
        "--config",
        config.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
        "--seed",
        "42",
    ]);
    let resolved = json_report(&out, "resolved_config.json");
    assert_eq!(resolved["rng_seed"], 42);
    let report = json_report(&out, "simulate_report.json");
    assert_eq!(report["rng_seed"], 42);
}

#[test]
fn optimize_outputs_are_thread_count_independent() {
    let tmp = tempfile::tempdir().unwrap();
    let config = tmp.path().join("optimize.toml");
    write(
        &config,
        &format!(
            r#"rng_seed = 7
{QUBIT_BLOCK}
[search]
substeps_per_period = 8.0
register_bits = 200
target_angle_rad = 1.5707963267948966
tip_angle_rad = 0.06283185307179587
population_size = 20
generations = 10
"#
        ),
    );
    let out_one = tmp.path().join("one");
    let out_four = tmp.path().join("four");
    run_ok(&[
        "optimize",
        "--config",
        config.to_str().unwrap(),
        "--out",
        out_one.to_str().unwrap(),
        "--threads",
        "1",
    ]);
    run_ok(&[
        "optimize",
        "--config",
        config.to_str().unwrap(),
        "--out",
        out_four.to_str().unwrap(),
        "--threads",
        "4",
    ]);
    for name in ["optimize_report.json", "best_pattern.txt", "history.jsonl"] {
        let a = fs::read(out_one.join(name)).unwrap();
        let b = fs::read(out_four.join(name)).unwrap();
        assert_eq!(a, b, "{name} depends on worker count");
    }
    let report = json_report(&out_one, "optimize_report.json");
    assert!(report["best_infidelity"].as_f64().unwrap() <= report["resonant_infidelity"].as_f64().unwrap());
}

#[test]
fn pgu_streams_and_counts() {
    let tmp = tempfile::tempdir().unwrap();
    let patterns = tmp.path().join("patterns.txt");
    write(&patterns, "10110010\n01000001\n");
    let config = tmp.path().join("pgu.toml");
    write(
        &config,
        r#"[pgu]
pattern_file = "patterns.txt"
fast_clock_ghz = 40.0
readout_mode = "p2s"

[counts]
mux_channels = 100
mux_variant = "squid_stack"
demux_channels = 10
"#,
    );
    let out = tmp.path().join("out");
    run_ok(&["pgu", "--config", config.to_str().unwrap(), "--out", out.to_str().unwrap()]);

    let stream = fs::read_to_string(out.join("stream.csv")).unwrap();
    let bits: String = stream
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().chars().next().unwrap())
        .collect();
    assert_eq!(bits, "1011001001000001");

    let report = json_report(&out, "pgu_report.json");
    assert_eq!(report["junction_counts"]["mux_junctions"], 300);
    assert_eq!(report["junction_counts"]["demux_junctions"], 113);
    // p2s mode on 8-bit registers: 3*8 - 4 = 20
    assert_eq!(report["junction_counts"]["p2s_overhead_junctions"], 20);
}

#[test]
fn measure_reference_fidelity() {
    let tmp = tempfile::tempdir().unwrap();
    let config = tmp.path().join("measure.toml");
    write(
        &config,
        r#"rng_seed = 1

[detector]
bright_mean_photons = 3.2188758248682006
dark_residual_photons = 0.0
per_photon_efficiency = 1.0
dark_click_probability = 0.04

[rabi]
points = 9
max_theta_rad = 6.283185307179586
shots = 20000
"#,
    );
    let out = tmp.path().join("out");
    run_ok(&["measure", "--config", config.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    let report = json_report(&out, "measure_report.json");
    let f = report["closed_form"]["single_shot_fidelity"].as_f64().unwrap();
    assert!((f - 0.92).abs() < 1e-6, "F = {f}");
    let rabi = fs::read_to_string(out.join("rabi.csv")).unwrap();
    assert!(rabi.starts_with("theta_rad,click_rate,shots"));
    assert_eq!(rabi.lines().count(), 10);
}

#[test]
fn budget_reference_numbers() {
    let tmp = tempfile::tempdir().unwrap();
    let config = tmp.path().join("budget.toml");
    write(
        &config,
        r#"[[wiring]]
name = "kapton"
material = "kapton_hn"
cross_section_area_m2 = 1.3e-2
length_m = 1.0
t_hot_k = 3.0
t_cold_k = 0.0

[[wiring]]
name = "nbti"
material = "nbti"
cross_section_area_m2 = 1.5e-4
length_m = 1.0
t_hot_k = 3.0
t_cold_k = 0.0

[heterodyne]
hemt_power_mw = 10.0
qubits_per_amp = 100
amps_per_hemt = 100
preamp_pump_nw = 100.0
qubits = 100000000
"#,
    );
    let out = tmp.path().join("out");
    let run = run_ok(&[
        "budget",
        "--config",
        config.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    let table = String::from_utf8_lossy(&run.stdout);
    assert!(table.contains("kapton"), "table:\n{table}");

    let report = json_report(&out, "budget_report.json");
    let kapton = report["lines"][0]["power_watts"].as_f64().unwrap();
    let nbti = report["lines"][1]["power_watts"].as_f64().unwrap();
    assert!((kapton - 216.8e-6).abs() / 216.8e-6 < 0.01, "kapton {kapton}");
    assert!((nbti - 36.45e-6).abs() / 36.45e-6 < 0.01, "nbti {nbti}");
    assert_eq!(
        report["heterodyne_baseline"]["hemt_total_watts"].as_f64().unwrap(),
        100.0
    );
    assert_eq!(
        report["heterodyne_baseline"]["preamp_total_watts"].as_f64().unwrap(),
        0.1
    );
}

#[test]
fn bad_config_gives_json_error_and_nonzero_exit() {
    let tmp = tempfile::tempdir().unwrap();
    let config = tmp.path().join("broken.toml");
    write(&config, "rng_seed = \"not a number\"\n");
    let out = sfqctl()
        .args(["simulate", "--config", config.to_str().unwrap(), "--out"])
        .arg(tmp.path().join("out"))
        .output()
        .unwrap();
    assert!(!out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr);
    let parsed: serde_json::Value = serde_json::from_str(stderr.trim()).unwrap();
    assert!(parsed["error"].as_str().unwrap().contains("parsing config"));
}

#[test]
fn validation_error_names_the_field() {
    let tmp = tempfile::tempdir().unwrap();
    let config = tmp.path().join("invalid.toml");
    write(
        &config,
        &format!(
            r#"rng_seed = 1
{QUBIT_BLOCK}
[drive]
substeps_per_period = 0.5
register_bits = 100
target_angle_rad = 1.5707963267948966
"#
        ),
    );
    let out = sfqctl()
        .args(["simulate", "--config", config.to_str().unwrap(), "--out"])
        .arg(tmp.path().join("out"))
        .output()
        .unwrap();
    assert!(!out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("substeps_per_period"), "stderr: {stderr}");
}
