//! Gate-quality objective for a pulse pattern.

use sfq_core::{
    average_gate_fidelity, propagate_sequence, to_rotating_frame, FidelityReport, TargetGate,
    TransmonSpec,
};

use crate::error::OptimizerError;
use crate::pattern::{pattern_to_events, PulsePattern};

/// Full fidelity report of a jitter-free pattern: propagate, convert to the
/// rotating frame at the pattern duration, compare against the target.
pub fn evaluate(
    pattern: &PulsePattern,
    spec: &TransmonSpec,
    target: &TargetGate,
    delta_theta: f64,
) -> Result<FidelityReport, OptimizerError> {
    let events = pattern_to_events(pattern, 0.0, 0)?;
    let duration = pattern.duration();
    let u = propagate_sequence(spec, &events, delta_theta, duration)?;
    let rotated = to_rotating_frame(&u, spec, duration)?;
    Ok(average_gate_fidelity(&rotated, target, duration)?)
}

/// Gate infidelity 1 − F of a pattern; pure and deterministic.
pub fn fitness(
    pattern: &PulsePattern,
    spec: &TransmonSpec,
    target: &TargetGate,
    delta_theta: f64,
) -> Result<f64, OptimizerError> {
    Ok(evaluate(pattern, spec, target, delta_theta)?.infidelity())
}
