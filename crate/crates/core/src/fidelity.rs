//! Two-level average gate fidelity and leakage of a propagator.

use nalgebra::Matrix2;
use num_complex::Complex64;

use crate::error::CoreError;
use crate::unitary::UnitaryMatrix;

/// A 2×2 unitary target on the computational subspace, stated in the frame
/// co-rotating at ω10.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TargetGate {
    matrix: Matrix2<Complex64>,
}

impl TargetGate {
    /// Validate unitarity and wrap.
    pub fn new(matrix: Matrix2<Complex64>) -> Result<Self, CoreError> {
        let product = matrix.adjoint() * matrix;
        let defect = (product - Matrix2::identity())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        if defect >= 1e-10 {
            return Err(CoreError::NotUnitary {
                defect,
                tolerance: 1e-10,
            });
        }
        Ok(Self { matrix })
    }

    pub fn identity() -> Self {
        Self {
            matrix: Matrix2::identity(),
        }
    }

    /// Rotation by `angle` about the Bloch-sphere y-axis.
    pub fn ry(angle: f64) -> Self {
        let c = Complex64::new((angle / 2.0).cos(), 0.0);
        let s = Complex64::new((angle / 2.0).sin(), 0.0);
        Self {
            matrix: Matrix2::new(c, -s, s, c),
        }
    }

    /// Rotation by `angle` about the Bloch-sphere x-axis.
    pub fn rx(angle: f64) -> Self {
        let c = Complex64::new((angle / 2.0).cos(), 0.0);
        let s = Complex64::new(0.0, -(angle / 2.0).sin());
        Self {
            matrix: Matrix2::new(c, s, s, c),
        }
    }

    /// The (π/2)_y rotation.
    pub fn y90() -> Self {
        Self::ry(std::f64::consts::FRAC_PI_2)
    }

    pub fn matrix(&self) -> &Matrix2<Complex64> {
        &self.matrix
    }
}

/// Computational-subspace gate quality of a propagator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FidelityReport {
    /// Two-level average gate fidelity, in [0, 1].
    pub avg_gate_fidelity: f64,
    /// Population escaping {|0⟩, |1⟩}, averaged over computational inputs.
    pub leakage: f64,
    /// Sequence duration in seconds.
    pub duration: f64,
}

impl FidelityReport {
    /// Gate infidelity 1 − F.
    pub fn infidelity(&self) -> f64 {
        1.0 - self.avg_gate_fidelity
    }
}

/// Average gate fidelity of `actual` against a two-level `target`.
///
/// With M = P·target†·actual·P the projection onto {|0⟩, |1⟩},
/// F = (Tr(M†M) + |Tr M|²)/6 and leakage = 1 − Tr(M†M)/2. A global phase on
/// `actual` does not change F. `duration` is carried through to the report.
pub fn average_gate_fidelity(
    actual: &UnitaryMatrix,
    target: &TargetGate,
    duration: f64,
) -> Result<FidelityReport, CoreError> {
    if actual.dim() < 2 {
        return Err(CoreError::DimensionMismatch {
            expected: 2,
            actual: actual.dim(),
        });
    }
    let m = target.matrix().adjoint() * actual.computational_block();
    let tr_mm = (m.adjoint() * m).trace().re;
    let tr_m = m.trace();
    let fidelity = (tr_mm + tr_m.norm_sqr()) / 6.0;
    Ok(FidelityReport {
        avg_gate_fidelity: fidelity.clamp(0.0, 1.0),
        leakage: (1.0 - tr_mm / 2.0).clamp(0.0, 1.0),
        duration,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::DMatrix;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn embed(target: &TargetGate, dim: usize) -> UnitaryMatrix {
        let mut m = DMatrix::<Complex64>::identity(dim, dim);
        for i in 0..2 {
            for j in 0..2 {
                m[(i, j)] = target.matrix()[(i, j)];
            }
        }
        UnitaryMatrix::try_new(m).unwrap()
    }

    #[test]
    fn exact_gate_has_unit_fidelity() {
        let target = TargetGate::y90();
        let actual = embed(&target, 2);
        let report = average_gate_fidelity(&actual, &target, 1e-8).unwrap();
        assert!((report.avg_gate_fidelity - 1.0).abs() < 1e-12);
        assert!(report.leakage.abs() < 1e-12);
        assert_eq!(report.duration, 1e-8);
    }

    #[test]
    fn global_phase_invariance() {
        let target = TargetGate::y90();
        let phase = Complex64::from_polar(1.0, 1.234);
        let m = embed(&target, 2).into_matrix() * phase;
        let actual = UnitaryMatrix::try_new(m).unwrap();
        let report = average_gate_fidelity(&actual, &target, 0.0).unwrap();
        assert!((report.avg_gate_fidelity - 1.0).abs() < 1e-12);
    }

    #[test]
    fn identity_against_y90_is_two_thirds() {
        let actual = UnitaryMatrix::identity(2);
        let report = average_gate_fidelity(&actual, &TargetGate::y90(), 0.0).unwrap();
        assert!((report.avg_gate_fidelity - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_one_dimensional_actual() {
        let actual = UnitaryMatrix::identity(1);
        assert!(average_gate_fidelity(&actual, &TargetGate::identity(), 0.0).is_err());
    }

    /// Random-unitary property sweep: fidelity and leakage stay in [0, 1].
    #[test]
    fn bounds_hold_for_random_unitaries() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..1000 {
            let dim = rng.random_range(2..=5);
            let u = random_unitary(dim, &mut rng);
            let target = random_target(&mut rng);
            let report = average_gate_fidelity(&u, &target, 0.0).unwrap();
            assert!((0.0..=1.0).contains(&report.avg_gate_fidelity));
            assert!((0.0..=1.0).contains(&report.leakage));
        }
    }

    fn random_unitary(dim: usize, rng: &mut ChaCha8Rng) -> UnitaryMatrix {
        // QR of a Ginibre matrix
        let g = DMatrix::<Complex64>::from_fn(dim, dim, |_, _| {
            Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
        });
        let qr = g.qr();
        UnitaryMatrix::try_new(qr.q()).unwrap()
    }

    fn random_target(rng: &mut ChaCha8Rng) -> TargetGate {
        TargetGate::ry(rng.random::<f64>() * std::f64::consts::PI)
    }
}
