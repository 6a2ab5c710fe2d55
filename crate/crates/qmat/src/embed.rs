use nalgebra::DMatrix;

use crate::matrix::ComplexMatrix;
use crate::operator::HermitianOperator;

/// Real embedding `[[Re m, -Im m], [Im m, Re m]]` of a complex matrix.
///
/// For Hermitian input the result is symmetric and carries the same spectrum
/// with doubled multiplicities, which is the single boundary this workspace
/// uses towards real-arithmetic conic solvers and eigensolvers.
pub fn real_embed_matrix(m: &ComplexMatrix) -> DMatrix<f64> {
    let n = m.rows();
    let c = m.cols();
    let mut out = DMatrix::<f64>::zeros(2 * n, 2 * c);
    for i in 0..n {
        for j in 0..c {
            let z = m[(i, j)];
            out[(i, j)] = z.re;
            out[(i, j + c)] = -z.im;
            out[(i + n, j)] = z.im;
            out[(i + n, j + c)] = z.re;
        }
    }
    out
}

/// Real symmetric embedding of a Hermitian operator.
pub fn real_embed(m: &HermitianOperator) -> DMatrix<f64> {
    real_embed_matrix(m.matrix())
}

/// Smallest eigenvalue of a real symmetric matrix.
pub fn sym_min_eigenvalue(m: &DMatrix<f64>) -> f64 {
    if m.nrows() == 0 {
        return 0.0;
    }
    let eig = m.clone().symmetric_eigen();
    eig.eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::consts;
    use crate::matrix::C64;

    #[test]
    fn identity_embeds_to_identity() {
        let e = real_embed(&HermitianOperator::identity(2));
        assert_eq!(e, DMatrix::<f64>::identity(4, 4));
    }

    #[test]
    fn pauli_y_spectrum_doubles() {
        let y = consts::pauli_y();
        let e = real_embed(&y);
        let mut eigs: Vec<f64> = e.symmetric_eigen().eigenvalues.iter().cloned().collect();
        eigs.sort_by(f64::total_cmp);
        for (got, want) in eigs.iter().zip([-1.0, -1.0, 1.0, 1.0]) {
            assert!((got - want).abs() < 1e-10);
        }
    }

    #[test]
    fn embedding_is_symmetric_for_hermitian_input() {
        let m = ComplexMatrix::new(
            2,
            2,
            vec![
                C64::new(2.0, 0.0),
                C64::new(0.5, -1.5),
                C64::new(0.5, 1.5),
                C64::new(-1.0, 0.0),
            ],
        )
        .unwrap();
        let h = HermitianOperator::new(m).unwrap();
        let e = real_embed(&h);
        assert!((&e - e.transpose()).abs().max() < 1e-15);
    }
}
