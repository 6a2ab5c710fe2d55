//! Standard qubit operators and state constructors.

use crate::error::QmatError;
use crate::matrix::{ComplexMatrix, C64};
use crate::operator::HermitianOperator;

pub fn pauli_x() -> HermitianOperator {
    HermitianOperator::new(ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap()).unwrap()
}

pub fn pauli_y() -> HermitianOperator {
    HermitianOperator::new(
        ComplexMatrix::new(
            2,
            2,
            vec![
                C64::new(0.0, 0.0),
                C64::new(0.0, -1.0),
                C64::new(0.0, 1.0),
                C64::new(0.0, 0.0),
            ],
        )
        .unwrap(),
    )
    .unwrap()
}

pub fn pauli_z() -> HermitianOperator {
    HermitianOperator::new(ComplexMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, -1.0]).unwrap()).unwrap()
}

/// |0⟩⟨0|
pub fn proj0() -> HermitianOperator {
    HermitianOperator::new(ComplexMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, 0.0]).unwrap()).unwrap()
}

/// |1⟩⟨1|
pub fn proj1() -> HermitianOperator {
    HermitianOperator::new(ComplexMatrix::from_real(2, 2, &[0.0, 0.0, 0.0, 1.0]).unwrap()).unwrap()
}

/// |+⟩⟨+|
pub fn proj_plus() -> HermitianOperator {
    HermitianOperator::new(ComplexMatrix::from_real(2, 2, &[0.5, 0.5, 0.5, 0.5]).unwrap()).unwrap()
}

/// |−⟩⟨−|
pub fn proj_minus() -> HermitianOperator {
    HermitianOperator::new(ComplexMatrix::from_real(2, 2, &[0.5, -0.5, -0.5, 0.5]).unwrap())
        .unwrap()
}

/// Computational basis vector |k⟩ in dimension `d`.
pub fn basis_ket(d: usize, k: usize) -> Vec<C64> {
    let mut v = vec![C64::new(0.0, 0.0); d];
    v[k] = C64::new(1.0, 0.0);
    v
}

/// Rank-1 projector |ψ⟩⟨ψ| / ⟨ψ|ψ⟩ from an unnormalized state vector.
pub fn pure_projector(psi: &[C64]) -> Result<HermitianOperator, QmatError> {
    let norm2: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
    if norm2 == 0.0 || !norm2.is_finite() {
        return Err(QmatError::NonFinite);
    }
    let d = psi.len();
    let m = ComplexMatrix::from_fn(d, d, |i, j| psi[i] * psi[j].conj() / norm2);
    HermitianOperator::from_upper_triangle(&m)
}
