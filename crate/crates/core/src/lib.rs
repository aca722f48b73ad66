//! Unitary dynamics of weakly anharmonic transmons driven by trains of
//! single-flux-quantum (SFQ) pulses.
//!
//! An SFQ pulse is orders of magnitude shorter than the qubit oscillation
//! period, so it acts on the qubit as a Dirac-δ kick: an instantaneous
//! rotation generated by the charge operator, interleaved with free evolution
//! of the bare anharmonic spectrum. This crate provides:
//!
//! - [`TransmonSpec`]: a truncated anharmonic qubit (spectrum, tip angle per
//!   pulse, energy per pulse),
//! - [`dynamics`]: kick and free-evolution propagators and time-ordered
//!   sequence propagation in the lab frame,
//! - [`fidelity`]: two-level average gate fidelity and leakage of a
//!   propagator against a computational-subspace target,
//! - [`two_qubit`]: two coupled transmons, doublet spectroscopy and the
//!   SFQ-driven controlled-Z protocol.
//!
//! All operations are pure functions of their inputs and safe to call
//! concurrently.

pub mod constants;
pub mod dynamics;
pub mod error;
pub mod fidelity;
pub mod transmon;
pub mod two_qubit;
pub mod unitary;

pub use constants::PhysicalConstants;
pub use dynamics::{free_evolution, propagate_sequence, sfq_kick_unitary, to_rotating_frame, PulseEvent};
pub use error::CoreError;
pub use fidelity::{average_gate_fidelity, FidelityReport, TargetGate};
pub use transmon::TransmonSpec;
pub use two_qubit::{CzResult, DriveTarget, TwoTransmonSpec};
pub use unitary::UnitaryMatrix;
