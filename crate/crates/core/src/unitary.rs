//! Dense complex unitary matrices over the truncated level space.

use nalgebra::{DMatrix, DVector, Matrix2};
use num_complex::Complex64;

use crate::error::CoreError;

/// Max-norm unitarity tolerance enforced when a matrix is built from a
/// generator (eigendecomposition or closed form).
pub const UNITARITY_TOLERANCE: f64 = 1e-10;

/// A dense d×d unitary over the truncated level space.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryMatrix {
    entries: DMatrix<Complex64>,
}

impl UnitaryMatrix {
    /// Identity on a d-level space.
    pub fn identity(dim: usize) -> Self {
        Self {
            entries: DMatrix::identity(dim, dim),
        }
    }

    /// Wrap a matrix, verifying ‖U†U − I‖_max < 1e-10.
    pub fn try_new(entries: DMatrix<Complex64>) -> Result<Self, CoreError> {
        if entries.nrows() != entries.ncols() {
            return Err(CoreError::DimensionMismatch {
                expected: entries.nrows(),
                actual: entries.ncols(),
            });
        }
        let u = Self { entries };
        let defect = u.unitarity_defect();
        if defect >= UNITARITY_TOLERANCE {
            return Err(CoreError::NotUnitary {
                defect,
                tolerance: UNITARITY_TOLERANCE,
            });
        }
        Ok(u)
    }

    /// Wrap a product of already-verified unitaries without re-checking.
    pub(crate) fn from_product(entries: DMatrix<Complex64>) -> Self {
        debug_assert_eq!(entries.nrows(), entries.ncols());
        Self { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.entries
    }

    pub fn adjoint(&self) -> Self {
        Self {
            entries: self.entries.adjoint(),
        }
    }

    /// Matrix product; `self` acts after `earlier` in time order.
    pub fn after(&self, earlier: &Self) -> Self {
        Self {
            entries: &self.entries * &earlier.entries,
        }
    }

    /// Kronecker product `self ⊗ other` (self indexes the first factor).
    pub fn tensor(&self, other: &Self) -> Self {
        Self {
            entries: self.entries.kronecker(&other.entries),
        }
    }

    /// Top-left 2×2 block restricted to the computational subspace {|0⟩, |1⟩}.
    pub fn computational_block(&self) -> Matrix2<Complex64> {
        Matrix2::new(
            self.entries[(0, 0)],
            self.entries[(0, 1)],
            self.entries[(1, 0)],
            self.entries[(1, 1)],
        )
    }

    /// ‖U†U − I‖ in max-norm.
    pub fn unitarity_defect(&self) -> f64 {
        let d = self.dim();
        let product = self.entries.adjoint() * &self.entries;
        let mut defect = 0.0f64;
        for i in 0..d {
            for j in 0..d {
                let expected = if i == j {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                };
                defect = defect.max((product[(i, j)] - expected).norm());
            }
        }
        defect
    }

    /// Largest entry-wise distance to another matrix.
    pub fn max_distance(&self, other: &Self) -> f64 {
        self.entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Eigendecomposition of a Hermitian matrix, H = V·diag(λ)·V†.
///
/// Cached by callers that exponentiate the same Hamiltonian for many time
/// segments.
pub(crate) struct HermitianEigen {
    pub values: DVector<f64>,
    pub vectors: DMatrix<Complex64>,
}

impl HermitianEigen {
    pub fn new(h: &DMatrix<Complex64>) -> Self {
        let eig = nalgebra::linalg::SymmetricEigen::new(h.clone());
        Self {
            values: eig.eigenvalues,
            vectors: eig.eigenvectors,
        }
    }

    /// exp(−i·H·t) reconstructed from the eigenbasis.
    pub fn propagator(&self, t: f64) -> DMatrix<Complex64> {
        let d = self.values.len();
        let phases = DVector::from_iterator(
            d,
            self.values
                .iter()
                .map(|&e| Complex64::from_polar(1.0, -e * t)),
        );
        // V · diag(phases) · V†
        let mut scaled = self.vectors.clone();
        for j in 0..d {
            let p = phases[j];
            scaled.column_mut(j).iter_mut().for_each(|z| *z *= p);
        }
        &scaled * self.vectors.adjoint()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_unitary() {
        let u = UnitaryMatrix::identity(4);
        assert!(u.unitarity_defect() < 1e-15);
    }

    #[test]
    fn rejects_non_unitary() {
        let m = DMatrix::from_diagonal_element(2, 2, Complex64::new(2.0, 0.0));
        assert!(matches!(
            UnitaryMatrix::try_new(m),
            Err(CoreError::NotUnitary { .. })
        ));
    }

    #[test]
    fn hermitian_propagator_is_unitary() {
        // H = pauli_x scaled
        let h = DMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(0.0, 0.0),
                Complex64::new(1.5, 0.0),
                Complex64::new(1.5, 0.0),
                Complex64::new(0.0, 0.0),
            ],
        );
        let eig = HermitianEigen::new(&h);
        let u = UnitaryMatrix::try_new(eig.propagator(0.7)).unwrap();
        // exp(-i*1.5*0.7*X): diagonal cos(1.05), off-diagonal -i sin(1.05)
        let c = (1.05f64).cos();
        let s = (1.05f64).sin();
        assert!((u.matrix()[(0, 0)] - Complex64::new(c, 0.0)).norm() < 1e-12);
        assert!((u.matrix()[(0, 1)] - Complex64::new(0.0, -s)).norm() < 1e-12);
    }

    #[test]
    fn tensor_dimensions() {
        let a = UnitaryMatrix::identity(3);
        let b = UnitaryMatrix::identity(4);
        assert_eq!(a.tensor(&b).dim(), 12);
    }
}
