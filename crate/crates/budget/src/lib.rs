//! Power, thermal and footprint budget of an SFQ-based quantum-classical
//! interface: per-junction switching power, subsystem roll-ups,
//! activity-factor comparison curves for candidate logic families, wiring
//! heat loads from thermal-conductivity integrals, and the heterodyne
//! baseline the SFQ approach is measured against.

pub mod activity;
pub mod comparison;
pub mod error;
pub mod power;
pub mod report;
pub mod wiring;

pub use activity::{activity_curves, write_activity_csv, ActivityRow, Technology, TechnologyParams};
pub use comparison::{footprint_report, heterodyne_baseline, FootprintReport, HeterodyneReport};
pub use error::BudgetError;
pub use power::{junction_power, subsystem_power, JunctionBias, SubsystemPower, SubsystemSpec};
pub use report::{BudgetReport, CoolingStage, StageLine};
pub use wiring::{wiring_geometry, wiring_heat, Material, WiringCrossSections, WiringSpec};
