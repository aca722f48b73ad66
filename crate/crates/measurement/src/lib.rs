//! Phenomenological model of photon-counter qubit readout.
//!
//! The qubit state is mapped to a bright or dark cavity pointer state; a
//! Josephson photon counter then either clicks or stays silent. Photon
//! number is Poissonian with per-photon detection efficiency η, plus an
//! additive dark-click probability, which is the minimal model that
//! reproduces bright/dark discrimination and a chosen raw-fidelity operating
//! point.

pub mod click;
pub mod dispersive;
pub mod error;
pub mod sampling;

pub use click::{click_probability, single_shot_fidelity, JpmClickModel, PointerState};
pub use dispersive::{dispersive_shift, DispersiveParams, DispersiveShift};
pub use error::MeasurementError;
pub use sampling::{measurement_shot, rabi_scan, write_rabi_csv, RabiPoint, ShotRecord};
