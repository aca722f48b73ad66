//! Heterodyne-readout baseline and footprint accounting.

use serde::Serialize;

use crate::error::BudgetError;

/// Dissipation of a conventional amplify-and-heterodyne readout chain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HeterodyneReport {
    pub hemt_count: f64,
    /// HEMT drain-source dissipation total at the 3 K stage, in watt.
    pub hemt_total_watts: f64,
    pub preamp_count: f64,
    /// Parametric-amplifier pump dissipation total at the millikelvin stage,
    /// in watt.
    pub preamp_total_watts: f64,
}

/// HEMT total = qubits/(qubits_per_amp·amps_per_hemt)·hemt_power; pump total
/// = qubits/qubits_per_amp·pump_dissipation.
pub fn heterodyne_baseline(
    hemt_power: f64,
    qubits_per_amp: u64,
    amps_per_hemt: u64,
    preamp_pump_dissipation: f64,
    qubits: u64,
) -> Result<HeterodyneReport, BudgetError> {
    if qubits_per_amp == 0 || amps_per_hemt == 0 {
        return Err(BudgetError::InvalidParameter(
            "qubits_per_amp and amps_per_hemt must be positive".into(),
        ));
    }
    if !(hemt_power >= 0.0 && preamp_pump_dissipation >= 0.0) {
        return Err(BudgetError::InvalidParameter(
            "dissipation figures must be non-negative".into(),
        ));
    }
    let preamp_count = qubits as f64 / qubits_per_amp as f64;
    let hemt_count = preamp_count / amps_per_hemt as f64;
    Ok(HeterodyneReport {
        hemt_count,
        hemt_total_watts: hemt_count * hemt_power,
        preamp_count,
        preamp_total_watts: preamp_count * preamp_pump_dissipation,
    })
}

/// Array and per-channel interface footprints.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FootprintReport {
    pub qubit_cell_area_m2: f64,
    pub array_area_m2: f64,
    pub interface_area_per_channel_m2: f64,
    /// True when the per-channel control/readout hardware fits inside one
    /// qubit cell.
    pub interface_fits: bool,
}

/// Array footprint = cell area × count; the interface fits when its
/// per-channel area does not exceed the cell area.
pub fn footprint_report(
    qubit_cell: (f64, f64),
    array_count: u64,
    interface_cell: (f64, f64),
) -> Result<FootprintReport, BudgetError> {
    for (name, v) in [
        ("qubit cell width", qubit_cell.0),
        ("qubit cell height", qubit_cell.1),
        ("interface cell width", interface_cell.0),
        ("interface cell height", interface_cell.1),
    ] {
        if !(v > 0.0) {
            return Err(BudgetError::InvalidParameter(format!(
                "{name} must be positive, got {v:.3e}"
            )));
        }
    }
    let cell_area = qubit_cell.0 * qubit_cell.1;
    let interface_area = interface_cell.0 * interface_cell.1;
    Ok(FootprintReport {
        qubit_cell_area_m2: cell_area,
        array_area_m2: cell_area * array_count as f64,
        interface_area_per_channel_m2: interface_area,
        interface_fits: interface_area <= cell_area,
    })
}
