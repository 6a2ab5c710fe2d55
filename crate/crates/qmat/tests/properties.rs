//! Randomized algebraic properties of the matrix kernel, checked against
//! independent brute-force oracles where one exists.

use qmat::{
    kron, max_entangled, partial_trace, real_embed, sym_min_eigenvalue, trace_inner,
    ComplexMatrix, HermitianOperator, SubsystemShape, C64,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_matrix(n: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, n, |_, _| {
        C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
    })
}

fn random_hermitian(n: usize, rng: &mut ChaCha8Rng) -> HermitianOperator {
    let g = random_matrix(n, rng);
    let h = ComplexMatrix::from_fn(n, n, |i, j| (g[(i, j)] + g[(j, i)].conj()) * 0.5);
    HermitianOperator::from_upper_triangle(&h).unwrap()
}

fn random_psd(n: usize, rng: &mut ChaCha8Rng) -> HermitianOperator {
    let g = random_matrix(n, rng);
    HermitianOperator::from_upper_triangle(&(&g.dagger() * &g)).unwrap()
}

fn max_abs_diff(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    (a - b).max_abs()
}

#[test]
fn kron_associativity_and_mixed_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let a = random_matrix(2, &mut rng);
        let b = random_matrix(2, &mut rng);
        let c = random_matrix(2, &mut rng);
        let d = random_matrix(2, &mut rng);

        let left = kron(&kron(&a, &b), &c);
        let right = kron(&a, &kron(&b, &c));
        assert!(max_abs_diff(&left, &right) < 1e-12);

        // (A⊗B)(C⊗D) = (AC)⊗(BD)
        let lhs = &kron(&a, &b) * &kron(&c, &d);
        let rhs = kron(&(&a * &c), &(&b * &d));
        assert!(max_abs_diff(&lhs, &rhs) < 1e-12);
    }
}

// Brute-force oracle: partial trace by explicit 4-index summation on 2x2 factors.
fn partial_trace_oracle_keep0(m: &HermitianOperator) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(2, 2);
    for i in 0..2 {
        for j in 0..2 {
            let mut acc = C64::new(0.0, 0.0);
            for k in 0..2 {
                acc += m.entry(2 * i + k, 2 * j + k);
            }
            out[(i, j)] = acc;
        }
    }
    out
}

#[test]
fn partial_trace_matches_brute_force_and_preserves_trace() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let shape = SubsystemShape::new(vec![2, 2]).unwrap();
    for _ in 0..100 {
        let m = random_hermitian(4, &mut rng);
        let pt = partial_trace(&m, &shape, &[0]).unwrap();
        let oracle = partial_trace_oracle_keep0(&m);
        assert!(max_abs_diff(pt.matrix(), &oracle) < 1e-12);
        assert!((pt.trace() - m.trace()).abs() < 1e-12);
    }
}

#[test]
fn partial_trace_is_linear() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let shape = SubsystemShape::new(vec![2, 3]).unwrap();
    for _ in 0..40 {
        let a = random_hermitian(6, &mut rng);
        let b = random_hermitian(6, &mut rng);
        let s = rng.random::<f64>() * 3.0 - 1.5;
        let combo = a.add(&b.scale(s)).unwrap();
        let lhs = partial_trace(&combo, &shape, &[1]).unwrap();
        let rhs = partial_trace(&a, &shape, &[1])
            .unwrap()
            .add(&partial_trace(&b, &shape, &[1]).unwrap().scale(s))
            .unwrap();
        assert!(lhs.sub(&rhs).unwrap().matrix().max_abs() < 1e-12);
    }
}

#[test]
fn real_embed_preserves_psd_and_min_eigenvalue() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..60 {
        let m = if rng.random::<bool>() {
            random_psd(3, &mut rng)
        } else {
            random_hermitian(3, &mut rng)
        };
        let embedded_min = sym_min_eigenvalue(&real_embed(&m));
        assert!((embedded_min - m.min_eigenvalue()).abs() < 1e-10);
        assert_eq!(embedded_min >= -1e-10, m.is_psd(1e-10));
    }
}

#[test]
fn trace_inner_is_positive_definite() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..60 {
        let a = random_hermitian(3, &mut rng);
        if a.matrix().max_abs() == 0.0 {
            continue;
        }
        let v = trace_inner(&a, &a).unwrap();
        assert!(v.re > 0.0);
        assert!(v.im.abs() < 1e-14);
    }
}

#[test]
fn max_entangled_partial_traces_are_maximally_mixed() {
    let shape = SubsystemShape::new(vec![2, 2]).unwrap();
    let phi = max_entangled(2, true);
    for keep in [[0usize], [1usize]] {
        let marginal = partial_trace(&phi, &shape, &keep).unwrap();
        let diff = marginal
            .sub(&HermitianOperator::identity(2).scale(0.5))
            .unwrap();
        assert!(diff.matrix().max_abs() < 1e-14);
    }
}
