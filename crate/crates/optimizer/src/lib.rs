//! Synthesis and optimization of clock-gridded binary SFQ pulse patterns.
//!
//! A control sequence is a bit string on a fast-clock grid: bit k set means
//! "emit one SFQ pulse at tick k". The crate builds resonant patterns (one
//! pulse per qubit oscillation period), searches patterns with a seeded,
//! fully deterministic genetic algorithm, and quantifies robustness to
//! Gaussian pulse-timing jitter.
//!
//! Amplitudes are not searchable: a pulse either happens or it does not, so
//! gradient-based pulse shaping does not apply and the search runs directly
//! over bit strings.

pub mod error;
pub mod fitness;
pub mod ga;
pub mod grid;
pub mod jitter;
pub mod pattern;
pub mod scan;

pub use error::OptimizerError;
pub use fitness::{evaluate, fitness};
pub use ga::{ga_search, GAConfig, GenerationStats, OptimizationResult};
pub use grid::ClockGrid;
pub use jitter::{jitter_robustness, JitterStats};
pub use pattern::{pattern_to_events, resonant_pattern, PulsePattern};
pub use scan::{scan_register_size, write_scan_csv, ScanRow};
