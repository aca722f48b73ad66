//! Kick and free-evolution propagators and time-ordered sequence propagation.
//!
//! Simulation runs in the lab frame with absolute phases. Gate targets are
//! stated in the frame co-rotating at ω10; convert a lab-frame propagator
//! with [`to_rotating_frame`] before comparing against a target.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::CoreError;
use crate::transmon::TransmonSpec;
use crate::unitary::{HermitianEigen, UnitaryMatrix};

/// One SFQ pulse arrival.
///
/// The effective kick time is `nominal_time + jitter_offset`; sequences must
/// be sorted by effective time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulseEvent {
    pub nominal_time: f64,
    pub jitter_offset: f64,
}

impl PulseEvent {
    /// Jitter-free event at `t` seconds.
    pub fn at(t: f64) -> Self {
        Self {
            nominal_time: t,
            jitter_offset: 0.0,
        }
    }

    pub fn with_jitter(t: f64, offset: f64) -> Self {
        Self {
            nominal_time: t,
            jitter_offset: offset,
        }
    }

    /// Effective arrival time in seconds.
    pub fn time(&self) -> f64 {
        self.nominal_time + self.jitter_offset
    }
}

/// Lowering operator on a d-level harmonic ladder, ⟨k−1|a|k⟩ = √k.
pub(crate) fn lowering_operator(dim: usize) -> DMatrix<Complex64> {
    DMatrix::from_fn(dim, dim, |i, j| {
        if j == i + 1 {
            Complex64::new((j as f64).sqrt(), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// Hermitian generator of one δ-function kick, H = i·(δθ/2)·(a† − a),
/// so that the kick unitary is exp(−i·H).
pub(crate) fn kick_generator(dim: usize, delta_theta: f64) -> DMatrix<Complex64> {
    let a = lowering_operator(dim);
    let g = (&a.adjoint() - &a) * Complex64::new(0.0, delta_theta / 2.0);
    g
}

/// Unitary of a single SFQ kick, U = exp[(δθ/2)(a† − a)] on the d-level
/// truncation.
///
/// Restricted to the {|0⟩, |1⟩} block at d = 2 this is a rotation by δθ
/// about the Bloch-sphere y-axis. Rejects non-finite δθ and |δθ| ≥ π.
pub fn sfq_kick_unitary(spec: &TransmonSpec, delta_theta: f64) -> Result<UnitaryMatrix, CoreError> {
    kick_unitary_dim(spec.levels(), delta_theta)
}

/// Kick unitary on an explicit dimension (used for the drive factor of
/// coupled systems).
pub(crate) fn kick_unitary_dim(dim: usize, delta_theta: f64) -> Result<UnitaryMatrix, CoreError> {
    if !delta_theta.is_finite() {
        return Err(CoreError::NonFiniteTipAngle);
    }
    if delta_theta.abs() >= std::f64::consts::PI {
        return Err(CoreError::TipAngleOutOfRange(delta_theta));
    }
    let eig = HermitianEigen::new(&kick_generator(dim, delta_theta));
    UnitaryMatrix::try_new(eig.propagator(1.0))
}

/// Free evolution for `duration` seconds: diagonal U with
/// U_kk = exp(−i·E_k·duration), energies from the transmon spectrum.
pub fn free_evolution(spec: &TransmonSpec, duration: f64) -> Result<UnitaryMatrix, CoreError> {
    if duration < 0.0 {
        return Err(CoreError::NegativeDuration(duration));
    }
    let phases = free_phases(&spec.spectrum(), duration);
    Ok(UnitaryMatrix::from_product(DMatrix::from_diagonal(&phases)))
}

fn free_phases(energies: &[f64], duration: f64) -> DVector<Complex64> {
    DVector::from_iterator(
        energies.len(),
        energies
            .iter()
            .map(|&e| Complex64::from_polar(1.0, -e * duration)),
    )
}

/// Left-multiply `u` by diag(phases) in place.
fn apply_free_segment(u: &mut DMatrix<Complex64>, energies: &[f64], duration: f64) {
    if duration == 0.0 {
        return;
    }
    for (i, &e) in energies.iter().enumerate() {
        let p = Complex64::from_polar(1.0, -e * duration);
        u.row_mut(i).iter_mut().for_each(|z| *z *= p);
    }
}

/// Ordered product of free-evolution segments and kick factors for a pulse
/// sequence, including the trailing free evolution to `total_duration`.
///
/// Events must be sorted by effective time and lie inside
/// [0, total_duration]; kicks at equal times compose in list order.
pub fn propagate_sequence(
    spec: &TransmonSpec,
    events: &[PulseEvent],
    delta_theta: f64,
    total_duration: f64,
) -> Result<UnitaryMatrix, CoreError> {
    if total_duration < 0.0 {
        return Err(CoreError::NegativeDuration(total_duration));
    }
    let energies = spec.spectrum();
    let kick = sfq_kick_unitary(spec, delta_theta)?;
    let dim = spec.levels();

    let mut u = DMatrix::<Complex64>::identity(dim, dim);
    let mut scratch = DMatrix::<Complex64>::zeros(dim, dim);
    let mut t = 0.0f64;
    for event in events {
        let te = event.time();
        if te < t {
            return Err(if te < 0.0 {
                CoreError::EventOutOfRange {
                    time: te,
                    total: total_duration,
                }
            } else {
                CoreError::UnsortedEvents
            });
        }
        if te > total_duration {
            return Err(CoreError::EventOutOfRange {
                time: te,
                total: total_duration,
            });
        }
        apply_free_segment(&mut u, &energies, te - t);
        kick.matrix().mul_to(&u, &mut scratch);
        std::mem::swap(&mut u, &mut scratch);
        t = te;
    }
    apply_free_segment(&mut u, &energies, total_duration - t);
    Ok(UnitaryMatrix::from_product(u))
}

/// Convert a lab-frame propagator at time `at_time` into the frame
/// co-rotating at ω10: U_rot = diag(e^{+i·k·ω10·t}) · U_lab.
pub fn to_rotating_frame(
    u: &UnitaryMatrix,
    spec: &TransmonSpec,
    at_time: f64,
) -> Result<UnitaryMatrix, CoreError> {
    if u.dim() != spec.levels() {
        return Err(CoreError::DimensionMismatch {
            expected: spec.levels(),
            actual: u.dim(),
        });
    }
    let mut m = u.matrix().clone();
    for k in 0..u.dim() {
        let p = Complex64::from_polar(1.0, k as f64 * spec.omega01() * at_time);
        m.row_mut(k).iter_mut().for_each(|z| *z *= p);
    }
    Ok(UnitaryMatrix::from_product(m))
}

/// One sampled point of a driven-qubit trajectory, in the rotating frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryPoint {
    pub time: f64,
    pub bloch_x: f64,
    pub bloch_y: f64,
    pub bloch_z: f64,
    pub leakage_population: f64,
}

/// Evolve |0⟩ through the sequence, sampling the rotating-frame Bloch vector
/// after each kick and at the final time.
pub fn state_trajectory(
    spec: &TransmonSpec,
    events: &[PulseEvent],
    delta_theta: f64,
    total_duration: f64,
) -> Result<Vec<TrajectoryPoint>, CoreError> {
    let energies = spec.spectrum();
    let kick = sfq_kick_unitary(spec, delta_theta)?;
    let dim = spec.levels();

    let mut psi = DVector::<Complex64>::zeros(dim);
    psi[0] = Complex64::new(1.0, 0.0);
    let mut points = Vec::with_capacity(events.len() + 2);
    points.push(sample_point(&psi, spec, 0.0));

    let mut t = 0.0f64;
    for event in events {
        let te = event.time();
        if te < t || te > total_duration {
            return Err(CoreError::EventOutOfRange {
                time: te,
                total: total_duration,
            });
        }
        for (i, &e) in energies.iter().enumerate() {
            psi[i] *= Complex64::from_polar(1.0, -e * (te - t));
        }
        psi = kick.matrix() * &psi;
        t = te;
        points.push(sample_point(&psi, spec, t));
    }
    for (i, &e) in energies.iter().enumerate() {
        psi[i] *= Complex64::from_polar(1.0, -e * (total_duration - t));
    }
    points.push(sample_point(&psi, spec, total_duration));
    Ok(points)
}

fn sample_point(psi: &DVector<Complex64>, spec: &TransmonSpec, t: f64) -> TrajectoryPoint {
    // rotating-frame amplitudes of the computational levels
    let a0 = psi[0];
    let a1 = psi[1] * Complex64::from_polar(1.0, spec.omega01() * t);
    let coherence = a0.conj() * a1;
    let p0 = a0.norm_sqr();
    let p1 = a1.norm_sqr();
    TrajectoryPoint {
        time: t,
        bloch_x: 2.0 * coherence.re,
        bloch_y: 2.0 * coherence.im,
        bloch_z: p0 - p1,
        leakage_population: (1.0 - p0 - p1).max(0.0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::PhysicalConstants;
    use std::f64::consts::PI;

    const TWO_PI: f64 = 2.0 * PI;

    fn qubit(levels: usize, alpha: f64) -> TransmonSpec {
        TransmonSpec::new(levels, TWO_PI * 5e9, alpha, 100e-15, 100e-18).unwrap()
    }

    /// Scaling-and-squaring Taylor exponential, independent of the
    /// eigendecomposition path used by the implementation.
    fn expm_oracle(m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
        let dim = m.nrows();
        let mut scaled = m.clone();
        let mut squarings = 0u32;
        let mut norm: f64 = scaled.iter().map(|z| z.norm()).fold(0.0, f64::max) * dim as f64;
        while norm > 0.25 {
            scaled /= Complex64::new(2.0, 0.0);
            norm /= 2.0;
            squarings += 1;
        }
        let mut result = DMatrix::<Complex64>::identity(dim, dim);
        let mut term = DMatrix::<Complex64>::identity(dim, dim);
        for k in 1..30 {
            term = (&term * &scaled) / Complex64::new(k as f64, 0.0);
            result += &term;
        }
        for _ in 0..squarings {
            result = &result * &result;
        }
        result
    }

    #[test]
    fn zero_kick_is_identity() {
        let u = sfq_kick_unitary(&qubit(3, 0.0), 0.0).unwrap();
        assert!(u.max_distance(&UnitaryMatrix::identity(3)) < 1e-14);
    }

    #[test]
    fn two_level_kick_is_y_rotation() {
        let u = sfq_kick_unitary(&qubit(2, 0.0), PI / 2.0).unwrap();
        let c = (PI / 4.0).cos();
        let s = (PI / 4.0).sin();
        let m = u.matrix();
        assert!((m[(0, 0)] - Complex64::new(c, 0.0)).norm() < 1e-12);
        assert!((m[(0, 1)] - Complex64::new(-s, 0.0)).norm() < 1e-12);
        assert!((m[(1, 0)] - Complex64::new(s, 0.0)).norm() < 1e-12);
        assert!((m[(1, 1)] - Complex64::new(c, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn kick_matches_exponential_oracle() {
        // d = 5, small tip: compare against scaling-and-squaring
        let spec = qubit(5, TWO_PI * 200e6);
        let dtheta = PI / 50.0;
        let u = sfq_kick_unitary(&spec, dtheta).unwrap();
        let g = kick_generator(5, dtheta) * Complex64::new(0.0, -1.0);
        let oracle = expm_oracle(&g);
        let dist = u
            .matrix()
            .iter()
            .zip(oracle.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(dist < 1e-12, "distance {dist}");
    }

    #[test]
    fn kick_rejects_out_of_range() {
        assert!(matches!(
            sfq_kick_unitary(&qubit(3, 0.0), PI),
            Err(CoreError::TipAngleOutOfRange(_))
        ));
        assert!(matches!(
            sfq_kick_unitary(&qubit(3, 0.0), f64::NAN),
            Err(CoreError::NonFiniteTipAngle)
        ));
    }

    #[test]
    fn free_evolution_zero_duration() {
        let u = free_evolution(&qubit(3, TWO_PI * 200e6), 0.0).unwrap();
        assert!(u.max_distance(&UnitaryMatrix::identity(3)) < 1e-15);
    }

    #[test]
    fn harmonic_period_is_identity_up_to_phase() {
        let spec = qubit(3, 0.0);
        let u = free_evolution(&spec, spec.period()).unwrap();
        for k in 0..3 {
            // phases e^{-i k 2pi} = 1
            assert!((u.matrix()[(k, k)] - Complex64::new(1.0, 0.0)).norm() < 1e-9);
        }
    }

    #[test]
    fn anharmonic_level_two_excess_phase() {
        let alpha = TWO_PI * 200e6;
        let spec = qubit(3, alpha);
        let tau = spec.period();
        let u = free_evolution(&spec, tau).unwrap();
        // E_2 = 2*w10 - alpha, so over one period level 2 carries e^{+i alpha tau}
        let expected = Complex64::from_polar(1.0, alpha * tau);
        assert!((u.matrix()[(2, 2)] - expected).norm() < 1e-9);
    }

    #[test]
    fn empty_sequence_is_free_evolution() {
        let spec = qubit(3, TWO_PI * 200e6);
        let t = 3.7e-9;
        let u = propagate_sequence(&spec, &[], 0.01, t).unwrap();
        let f = free_evolution(&spec, t).unwrap();
        assert!(u.max_distance(&f) < 1e-12);
    }

    #[test]
    fn resonant_two_level_train_is_exact_rotation() {
        let spec = qubit(2, 0.0);
        let constants = PhysicalConstants::codata();
        let dtheta = spec.tip_angle(&constants);
        let n = ((PI / 2.0) / dtheta).round() as usize;
        let tau = spec.period();
        let events: Vec<PulseEvent> = (0..n).map(|k| PulseEvent::at(k as f64 * tau)).collect();
        let u = propagate_sequence(&spec, &events, dtheta, n as f64 * tau).unwrap();
        let rot = to_rotating_frame(&u, &spec, n as f64 * tau).unwrap();
        // single rotation by n*dtheta about y
        let angle = n as f64 * dtheta;
        let c = (angle / 2.0).cos();
        let s = (angle / 2.0).sin();
        let m = rot.matrix();
        assert!((m[(0, 0)] - Complex64::new(c, 0.0)).norm() < 1e-10);
        assert!((m[(0, 1)] - Complex64::new(-s, 0.0)).norm() < 1e-10);
        assert!((m[(1, 0)] - Complex64::new(s, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn rejects_unsorted_events() {
        let spec = qubit(3, 0.0);
        let events = [PulseEvent::at(2e-10), PulseEvent::at(1e-10)];
        assert!(matches!(
            propagate_sequence(&spec, &events, 0.01, 1e-9),
            Err(CoreError::UnsortedEvents)
        ));
    }

    #[test]
    fn rejects_event_beyond_duration() {
        let spec = qubit(3, 0.0);
        let events = [PulseEvent::at(2e-9)];
        assert!(matches!(
            propagate_sequence(&spec, &events, 0.01, 1e-9),
            Err(CoreError::EventOutOfRange { .. })
        ));
    }

    #[test]
    fn composition_at_any_split_point() {
        let spec = qubit(4, TWO_PI * 200e6);
        let tau = spec.period();
        let dtheta = 0.02;
        let events: Vec<PulseEvent> = (0..24).map(|k| PulseEvent::at(k as f64 * tau)).collect();
        let total = 24.0 * tau;
        let full = propagate_sequence(&spec, &events, dtheta, total).unwrap();
        for split in [1usize, 7, 12, 23] {
            let t_split = events[split].time();
            let head = propagate_sequence(&spec, &events[..split], dtheta, t_split).unwrap();
            let shifted: Vec<PulseEvent> = events[split..]
                .iter()
                .map(|e| PulseEvent::at(e.time() - t_split))
                .collect();
            let tail = propagate_sequence(&spec, &shifted, dtheta, total - t_split).unwrap();
            let composed = tail.after(&head);
            assert!(
                composed.max_distance(&full) < 1e-10,
                "split {split}: {}",
                composed.max_distance(&full)
            );
        }
    }

    #[test]
    fn unitarity_holds_for_long_sequences() {
        let spec = qubit(5, TWO_PI * 200e6);
        let tau = spec.period();
        let events: Vec<PulseEvent> =
            (0..10_000).map(|k| PulseEvent::at(k as f64 * tau)).collect();
        let u = propagate_sequence(&spec, &events, 0.01, 10_000.0 * tau).unwrap();
        assert!(u.unitarity_defect() < 1e-9, "defect {}", u.unitarity_defect());
    }

    #[test]
    fn detuned_train_stays_near_north_pole() {
        // pulse spacing mismatched by 20%: state undergoes small excursions
        let spec = qubit(2, 0.0);
        let constants = PhysicalConstants::codata();
        let dtheta = spec.tip_angle(&constants);
        let n = ((PI / 2.0) / dtheta).round() as usize;
        let spacing = spec.period() * 1.2;
        let events: Vec<PulseEvent> =
            (0..n).map(|k| PulseEvent::at(k as f64 * spacing)).collect();
        let u = propagate_sequence(&spec, &events, dtheta, n as f64 * spacing).unwrap();
        let p1 = u.matrix()[(1, 0)].norm_sqr();
        assert!(p1 < 0.2, "P1 = {p1}");
    }

    #[test]
    fn truncation_converged_above_three_levels() {
        // rerunning the 100-pulse resonant infidelity at d = 4 and d = 5
        // moves the answer by less than 1e-5 (d = 3 itself sits ~3e-5 away)
        let infidelity = |levels: usize| {
            let spec = qubit(levels, TWO_PI * 200e6);
            let dtheta = PI / 200.0;
            let tau = spec.period();
            let events: Vec<PulseEvent> =
                (0..100).map(|k| PulseEvent::at(k as f64 * tau)).collect();
            let total = 100.0 * tau;
            let u = propagate_sequence(&spec, &events, dtheta, total).unwrap();
            let rot = to_rotating_frame(&u, &spec, total).unwrap();
            1.0 - crate::fidelity::average_gate_fidelity(
                &rot,
                &crate::fidelity::TargetGate::y90(),
                total,
            )
            .unwrap()
            .avg_gate_fidelity
        };
        let d4 = infidelity(4);
        let d5 = infidelity(5);
        assert!((d4 - d5).abs() < 1e-5, "d4 {d4:.6e} vs d5 {d5:.6e}");
    }

    #[test]
    fn trajectory_stays_in_xz_plane_for_ideal_qubit() {
        let spec = qubit(2, 0.0);
        let dtheta = PI / 100.0;
        let tau = spec.period();
        let events: Vec<PulseEvent> = (0..50).map(|k| PulseEvent::at(k as f64 * tau)).collect();
        let points = state_trajectory(&spec, &events, dtheta, 50.0 * tau).unwrap();
        for p in &points {
            assert!(p.bloch_y.abs() < 1e-6, "bloch_y = {}", p.bloch_y);
            assert!(p.leakage_population < 1e-12);
        }
        // ends near the equator after a pi/2 rotation
        let last = points.last().unwrap();
        assert!(last.bloch_z.abs() < 1e-2);
        assert!((last.bloch_x - 1.0).abs() < 1e-2);
    }
}
