//! Config file schemas. Every physical key carries its unit in the name;
//! conversion to SI happens exactly once, here.

use std::f64::consts::PI;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use serde::{Deserialize, Serialize};
use sfq_core::{PhysicalConstants, TransmonSpec};

const TWO_PI: f64 = 2.0 * PI;

pub fn load<T: serde::de::DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading config {}", path.display()))?;
    toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
}

/// Resolve a config-relative path against the config file's directory.
pub fn resolve_path(config: &Path, value: &str) -> PathBuf {
    let p = Path::new(value);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        config.parent().unwrap_or(Path::new(".")).join(p)
    }
}

/// Truncated transmon parameters.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QubitConfig {
    pub levels: usize,
    pub frequency_ghz: f64,
    pub anharmonicity_mhz: f64,
    pub self_capacitance_ff: f64,
    pub coupling_capacitance_af: f64,
}

impl QubitConfig {
    pub fn to_spec(&self) -> anyhow::Result<TransmonSpec> {
        TransmonSpec::new(
            self.levels,
            TWO_PI * self.frequency_ghz * 1e9,
            TWO_PI * self.anharmonicity_mhz * 1e6,
            self.self_capacitance_ff * 1e-15,
            self.coupling_capacitance_af * 1e-18,
        )
        .map_err(|e| anyhow::anyhow!("qubit: {e}"))
    }

    /// Tip angle from the config override or the drive geometry.
    pub fn tip_angle(&self, override_rad: Option<f64>) -> anyhow::Result<f64> {
        match override_rad {
            Some(v) if v.is_finite() && v > 0.0 => Ok(v),
            Some(v) => bail!("drive.tip_angle_rad: must be positive and finite, got {v}"),
            None => Ok(self
                .to_spec()?
                .tip_angle(&PhysicalConstants::codata())),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SimulateConfig {
    #[serde(default)]
    pub rng_seed: u64,
    pub qubit: QubitConfig,
    pub drive: DriveConfig,
    #[serde(default)]
    pub output: SimulateOutput,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DriveConfig {
    pub substeps_per_period: f64,
    pub register_bits: usize,
    /// Rotation target R_y(angle); the resonant pattern is built for it.
    pub target_angle_rad: f64,
    /// Omitted: use the geometric tip angle of the qubit spec.
    pub tip_angle_rad: Option<f64>,
    /// Explicit pattern file (one bit string; overrides the resonant pattern).
    pub pattern_file: Option<String>,
    #[serde(default)]
    pub jitter_sigma_ps: f64,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct SimulateOutput {
    #[serde(default)]
    pub trajectory_csv: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OptimizeConfig {
    #[serde(default)]
    pub rng_seed: u64,
    pub qubit: QubitConfig,
    pub search: SearchConfig,
    /// Present: run a register-size scan instead of a single search.
    pub scan: Option<ScanConfig>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchConfig {
    pub substeps_per_period: f64,
    pub register_bits: usize,
    pub target_angle_rad: f64,
    pub tip_angle_rad: Option<f64>,
    #[serde(default = "default_population")]
    pub population_size: usize,
    #[serde(default = "default_generations")]
    pub generations: usize,
    #[serde(default = "default_crossover")]
    pub crossover_rate: f64,
    /// Omitted: 1/register_bits.
    pub mutation_rate_per_bit: Option<f64>,
    #[serde(default = "default_elite")]
    pub elite_count: usize,
    #[serde(default = "default_tournament")]
    pub tournament_size: usize,
    #[serde(default = "default_true")]
    pub seed_with_resonant: bool,
}

fn default_population() -> usize {
    100
}
fn default_generations() -> usize {
    500
}
fn default_crossover() -> f64 {
    0.7
}
fn default_elite() -> usize {
    2
}
fn default_tournament() -> usize {
    3
}
fn default_true() -> bool {
    true
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScanConfig {
    pub tip_angles_rad: Vec<f64>,
    pub substeps: Vec<f64>,
    pub register_bits: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PguCliConfig {
    pub pgu: PguSection,
    pub counts: Option<CountsSection>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PguSection {
    pub pattern_file: String,
    pub fast_clock_ghz: f64,
    /// Omitted: inferred from the first pattern line.
    pub register_bits: Option<usize>,
    #[serde(default = "default_readout_mode")]
    pub readout_mode: String,
}

fn default_readout_mode() -> String {
    "merger_sync".into()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CountsSection {
    pub mux_channels: u64,
    #[serde(default = "default_mux_variant")]
    pub mux_variant: String,
    pub demux_channels: u64,
}

fn default_mux_variant() -> String {
    "merger_tree".into()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MeasureConfig {
    #[serde(default)]
    pub rng_seed: u64,
    pub detector: DetectorSection,
    pub dispersive: Option<DispersiveSection>,
    #[serde(default)]
    pub rabi: RabiSection,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DetectorSection {
    pub bright_mean_photons: f64,
    #[serde(default)]
    pub dark_residual_photons: f64,
    pub per_photon_efficiency: f64,
    pub dark_click_probability: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DispersiveSection {
    pub coupling_g_mhz: f64,
    pub detuning_mhz: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RabiSection {
    pub points: usize,
    pub max_theta_rad: f64,
    pub shots: u64,
}

impl Default for RabiSection {
    fn default() -> Self {
        Self {
            points: 33,
            max_theta_rad: 2.0 * TWO_PI / 2.0,
            shots: 100_000,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BudgetConfig {
    #[serde(default)]
    pub subsystem: Vec<SubsystemSection>,
    #[serde(default)]
    pub wiring: Vec<WiringSection>,
    pub heterodyne: Option<HeterodyneSection>,
    pub footprint: Option<FootprintSection>,
    pub activity_curves: Option<ActivitySection>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubsystemSection {
    pub name: String,
    /// "millikelvin" or "three_kelvin".
    pub stage: String,
    pub junctions_per_channel: u64,
    pub channels: u64,
    pub clock_ghz: f64,
    pub duty_cycle: f64,
    pub activity: f64,
    pub critical_current_ua: f64,
    #[serde(default = "default_bias_fraction")]
    pub bias_fraction: f64,
}

fn default_bias_fraction() -> f64 {
    0.75
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WiringSection {
    pub name: String,
    /// "kapton_hn", "nbti", or "custom".
    pub material: String,
    pub custom_prefactor_w_per_m_k: Option<f64>,
    pub custom_exponent: Option<f64>,
    /// Direct area, or computed from the geometry block below.
    pub cross_section_area_m2: Option<f64>,
    pub geometry: Option<GeometrySection>,
    pub length_m: f64,
    pub t_hot_k: f64,
    #[serde(default)]
    pub t_cold_k: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeometrySection {
    pub lines: u64,
    pub trace_width_um: f64,
    pub spacing_um: f64,
    pub dielectric_thickness_um: f64,
    pub metal_thickness_nm: f64,
    #[serde(default)]
    pub groundplane_factor: f64,
    /// Which cross-section this bundle conducts through: "dielectric" or
    /// "metal".
    pub conductor: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HeterodyneSection {
    pub hemt_power_mw: f64,
    pub qubits_per_amp: u64,
    pub amps_per_hemt: u64,
    pub preamp_pump_nw: f64,
    pub qubits: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FootprintSection {
    pub qubit_cell_um: [f64; 2],
    pub array_count: u64,
    pub interface_cell_um: [f64; 2],
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ActivitySection {
    pub grid: Vec<f64>,
}
