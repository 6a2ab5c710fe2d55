use crate::embed::{real_embed, sym_min_eigenvalue};
use crate::error::QmatError;
use crate::matrix::{kron, ComplexMatrix, C64};

/// Ordered tensor-factor dimensions annotating a composite operator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsystemShape {
    dims: Vec<usize>,
}

impl SubsystemShape {
    pub fn new(dims: Vec<usize>) -> Result<Self, QmatError> {
        if dims.is_empty() || dims.iter().any(|&d| d == 0) {
            return Err(QmatError::EmptyShape);
        }
        Ok(Self { dims })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn factors(&self) -> usize {
        self.dims.len()
    }
}

/// Square complex matrix validated to be Hermitian at construction.
///
/// Inputs exceeding the tolerance are rejected rather than symmetrized, so
/// construction bugs surface instead of being averaged away.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianOperator {
    dim: usize,
    matrix: ComplexMatrix,
}

impl HermitianOperator {
    /// Entrywise absolute tolerance for accepting a matrix as Hermitian.
    pub const HERMITICITY_TOL: f64 = 1e-12;

    pub fn new(matrix: ComplexMatrix) -> Result<Self, QmatError> {
        if !matrix.is_square() {
            return Err(QmatError::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        let defect = matrix.hermiticity_defect();
        if defect > Self::HERMITICITY_TOL {
            return Err(QmatError::NotHermitian {
                defect,
                tol: Self::HERMITICITY_TOL,
            });
        }
        Ok(Self {
            dim: matrix.rows(),
            matrix,
        })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            dim,
            matrix: ComplexMatrix::identity(dim),
        }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            matrix: ComplexMatrix::zeros(dim, dim),
        }
    }

    /// Builds an exactly Hermitian operator from the upper triangle of `m`:
    /// diagonal entries keep their real part, the lower triangle mirrors the
    /// conjugate. Intended for numerically computed results whose defect is
    /// at round-off scale; asserts it stays below the construction tolerance.
    pub fn from_upper_triangle(m: &ComplexMatrix) -> Result<Self, QmatError> {
        if !m.is_square() {
            return Err(QmatError::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let defect = m.hermiticity_defect();
        if defect > Self::HERMITICITY_TOL {
            return Err(QmatError::NotHermitian {
                defect,
                tol: Self::HERMITICITY_TOL,
            });
        }
        let n = m.rows();
        let mut out = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            out[(i, i)] = C64::new(m[(i, i)].re, 0.0);
            for j in (i + 1)..n {
                out[(i, j)] = m[(i, j)];
                out[(j, i)] = m[(i, j)].conj();
            }
        }
        Ok(Self {
            dim: n,
            matrix: out,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> C64 {
        self.matrix[(i, j)]
    }

    /// Trace; real for Hermitian operators.
    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    pub fn add(&self, other: &Self) -> Result<Self, QmatError> {
        if self.dim != other.dim {
            return Err(QmatError::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(Self {
            dim: self.dim,
            matrix: &self.matrix + &other.matrix,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, QmatError> {
        if self.dim != other.dim {
            return Err(QmatError::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(Self {
            dim: self.dim,
            matrix: &self.matrix - &other.matrix,
        })
    }

    /// Scaling by a real factor keeps Hermiticity.
    pub fn scale(&self, s: f64) -> Self {
        Self {
            dim: self.dim,
            matrix: self.matrix.scale(C64::new(s, 0.0)),
        }
    }

    /// Kronecker product of Hermitian operators is Hermitian.
    pub fn kron(&self, other: &Self) -> Self {
        Self {
            dim: self.dim * other.dim,
            matrix: kron(&self.matrix, &other.matrix),
        }
    }

    /// Transpose in the computational basis; Hermitian iff the input is.
    pub fn transpose(&self) -> Self {
        Self {
            dim: self.dim,
            matrix: self.matrix.transpose(),
        }
    }

    /// Smallest eigenvalue, computed on the real symmetric embedding.
    pub fn min_eigenvalue(&self) -> f64 {
        sym_min_eigenvalue(&real_embed(self))
    }

    pub fn is_psd(&self, tol: f64) -> bool {
        self.min_eigenvalue() >= -tol
    }
}

/// Trace inner product `tr(a† b)`; real whenever both arguments are Hermitian.
pub fn trace_inner(a: &HermitianOperator, b: &HermitianOperator) -> Result<C64, QmatError> {
    if a.dim() != b.dim() {
        return Err(QmatError::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let mut acc = C64::new(0.0, 0.0);
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            acc += a.entry(i, j).conj() * b.entry(i, j);
        }
    }
    Ok(acc)
}

/// Partial trace over the factors of `shape` not listed in `keep`.
///
/// Works for arbitrary (possibly non-Hermitian) square matrices; the
/// Hermitian wrapper below preserves exact Hermiticity of the result.
pub fn partial_trace_matrix(
    m: &ComplexMatrix,
    shape: &SubsystemShape,
    keep: &[usize],
) -> Result<ComplexMatrix, QmatError> {
    if !m.is_square() {
        return Err(QmatError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if shape.total_dim() != m.rows() {
        return Err(QmatError::InconsistentShape {
            dims: shape.dims().to_vec(),
            product: shape.total_dim(),
            dim: m.rows(),
        });
    }
    let k = shape.factors();
    for &idx in keep {
        if idx >= k {
            return Err(QmatError::BadSubsystemIndex {
                index: idx,
                count: k,
            });
        }
    }
    let mut keep_sorted: Vec<usize> = keep.to_vec();
    keep_sorted.sort_unstable();
    keep_sorted.dedup();
    let traced: Vec<usize> = (0..k).filter(|i| !keep_sorted.contains(i)).collect();

    let dims = shape.dims();
    // strides of each factor in the full index
    let mut stride = vec![1usize; k];
    for i in (0..k.saturating_sub(1)).rev() {
        stride[i] = stride[i + 1] * dims[i + 1];
    }
    let keep_dim: usize = keep_sorted.iter().map(|&i| dims[i]).product();
    let traced_dim: usize = traced.iter().map(|&i| dims[i]).product();

    // decode a flat index over a factor subset into the full index offset
    let offset = |subset: &[usize], mut flat: usize| -> usize {
        let mut off = 0;
        for &fac in subset.iter().rev() {
            off += (flat % dims[fac]) * stride[fac];
            flat /= dims[fac];
        }
        off
    };

    let mut out = ComplexMatrix::zeros(keep_dim, keep_dim);
    for bi in 0..keep_dim {
        let row_base = offset(&keep_sorted, bi);
        for bj in 0..keep_dim {
            let col_base = offset(&keep_sorted, bj);
            let mut acc = C64::new(0.0, 0.0);
            for t in 0..traced_dim {
                let toff = offset(&traced, t);
                acc += m[(row_base + toff, col_base + toff)];
            }
            out[(bi, bj)] = acc;
        }
    }
    Ok(out)
}

/// Partial trace of a Hermitian operator; the trace is preserved.
pub fn partial_trace(
    m: &HermitianOperator,
    shape: &SubsystemShape,
    keep: &[usize],
) -> Result<HermitianOperator, QmatError> {
    let raw = partial_trace_matrix(m.matrix(), shape, keep)?;
    HermitianOperator::from_upper_triangle(&raw)
}

/// Projector onto the maximally entangled vector `Σ_k |k⟩|k⟩` on `C^d ⊗ C^d`.
/// Trace is `d` when unnormalized and 1 when normalized.
pub fn max_entangled(d: usize, normalized: bool) -> HermitianOperator {
    let n = d * d;
    let scale = if normalized { 1.0 / d as f64 } else { 1.0 };
    let mut m = ComplexMatrix::zeros(n, n);
    for i in 0..d {
        for j in 0..d {
            m[(i * d + i, j * d + j)] = C64::new(scale, 0.0);
        }
    }
    HermitianOperator::new(m).expect("maximally entangled projector is Hermitian")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::consts;

    #[test]
    fn hermiticity_is_enforced() {
        let bad =
            ComplexMatrix::new(2, 2, vec![
                C64::new(1.0, 0.0),
                C64::new(0.0, 1.0),
                C64::new(0.0, 1.0),
                C64::new(1.0, 0.0),
            ])
            .unwrap();
        assert!(matches!(
            HermitianOperator::new(bad),
            Err(QmatError::NotHermitian { .. })
        ));
    }

    #[test]
    fn trace_inner_paulis() {
        let i2 = HermitianOperator::identity(2);
        assert!((trace_inner(&i2, &i2).unwrap().re - 2.0).abs() < 1e-15);
        let z = consts::pauli_z();
        let x = consts::pauli_x();
        assert!(trace_inner(&z, &x).unwrap().norm() < 1e-15);
    }

    // Direct 2x2 arithmetic: tr[|0><0| (I + (Z+X)/sqrt(2))/2] = (2+sqrt(2))/4.
    #[test]
    fn trace_inner_tilted_effect() {
        let p0 = consts::proj0();
        let e = consts::pauli_z()
            .add(&consts::pauli_x())
            .unwrap()
            .scale(1.0 / 2f64.sqrt())
            .add(&HermitianOperator::identity(2))
            .unwrap()
            .scale(0.5);
        let v = trace_inner(&p0, &e).unwrap();
        assert!((v.re - (2.0 + 2f64.sqrt()) / 4.0).abs() < 1e-14);
        assert!(v.im.abs() < 1e-15);
    }

    #[test]
    fn partial_trace_product_state() {
        let a = consts::proj0();
        let b = consts::proj_plus().scale(3.0); // tr(b) = 3
        let ab = a.kron(&b);
        let shape = SubsystemShape::new(vec![2, 2]).unwrap();
        let ra = partial_trace(&ab, &shape, &[0]).unwrap();
        let diff = ra.sub(&a.scale(3.0)).unwrap();
        assert!(diff.matrix().max_abs() < 1e-14);
    }

    #[test]
    fn partial_trace_max_entangled_marginal() {
        let phi = max_entangled(2, true);
        let shape = SubsystemShape::new(vec![2, 2]).unwrap();
        let rb = partial_trace(&phi, &shape, &[1]).unwrap();
        let diff = rb.sub(&HermitianOperator::identity(2).scale(0.5)).unwrap();
        assert!(diff.matrix().max_abs() < 1e-14);
    }

    #[test]
    fn partial_trace_rejects_bad_shape() {
        let m = HermitianOperator::identity(6);
        let shape = SubsystemShape::new(vec![2, 2]).unwrap();
        assert!(partial_trace(&m, &shape, &[0]).is_err());
    }

    #[test]
    fn min_eigenvalue_basics() {
        assert!((HermitianOperator::identity(2).min_eigenvalue() - 1.0).abs() < 1e-10);
        assert!((consts::pauli_z().min_eigenvalue() + 1.0).abs() < 1e-10);
        assert!(consts::proj_plus().min_eigenvalue().abs() < 1e-10);
    }

    #[test]
    fn max_entangled_shapes() {
        let one = max_entangled(1, false);
        assert_eq!(one.dim(), 1);
        assert!((one.trace() - 1.0).abs() < 1e-15);

        let phi = max_entangled(2, false);
        assert!((phi.trace() - 2.0).abs() < 1e-15);
        // rank 1: second eigenvalue of trace-2 projector-like operator is 0
        assert!(phi.min_eigenvalue().abs() < 1e-10);
    }
}
