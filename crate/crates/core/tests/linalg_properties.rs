use num_complex::Complex64;
use proptest::prelude::*;
use qtsteer_core::linalg::{hermitian_eig, kron, partial_trace, psd_sqrt, ComplexMatrix, TensorShape};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_matrix(rng: &mut impl Rng, dim: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(dim, |_, _| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
}

fn random_hermitian(rng: &mut impl Rng, dim: usize) -> ComplexMatrix {
    random_matrix(rng, dim).hermitian_part()
}

/// `G G†`, optionally rank-deficient, normalized to unit trace.
fn random_psd(rng: &mut impl Rng, dim: usize) -> ComplexMatrix {
    let g = random_matrix(rng, dim);
    let rank = rng.random_range(1..=dim);
    let g = ComplexMatrix::from_fn(dim, |r, c| if c < rank { g[(r, c)] } else { Complex64::new(0.0, 0.0) });
    let m = &g * &g.adjoint();
    let t = m.trace().re;
    m.scale(1.0 / t).hermitian_part()
}

#[test]
fn eig_reconstructs_random_hermitian_8x8() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        let m = random_hermitian(&mut rng, 8);
        let d = hermitian_eig(&m).unwrap();
        assert!(d.reconstruct().approx_eq(&m, 1e-12));
        let v = &d.eigenvectors;
        assert!((&v.adjoint() * v).approx_eq(&ComplexMatrix::identity(8), 1e-12));
        assert!(d.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
        let sum: f64 = d.eigenvalues.iter().sum();
        assert!((sum - m.trace().re).abs() < 1e-12);
    }
}

#[test]
fn psd_sqrt_squares_back_for_1000_random_states() {
    let mut rng = ChaCha8Rng::seed_from_u64(1000);
    for k in 0..1000 {
        let dim = [2, 3, 6, 8][k % 4];
        let m = random_psd(&mut rng, dim);
        let root = psd_sqrt(&m).unwrap();
        assert!(root.is_hermitian(1e-14));
        assert!(hermitian_eig(&root).unwrap().min_eigenvalue() > -1e-12);
        assert!((&root * &root).approx_eq(&m, 1e-10), "sample {k} dim {dim}");
    }
}

#[test]
fn partial_traces_of_kron_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (da, db) in [(2, 3), (2, 4), (3, 2), (4, 4)] {
        let a = random_matrix(&mut rng, da);
        let b = random_matrix(&mut rng, db);
        let shape = TensorShape::new(vec![da, db]).unwrap();
        let ab = kron(&a, &b);
        let keep_a = partial_trace(&ab, &shape, &[0]).unwrap();
        let keep_b = partial_trace(&ab, &shape, &[1]).unwrap();
        let tr_a = a.trace();
        let tr_b = b.trace();
        let expect_a = ComplexMatrix::from_fn(da, |r, c| a[(r, c)] * tr_b);
        let expect_b = ComplexMatrix::from_fn(db, |r, c| b[(r, c)] * tr_a);
        assert!(keep_a.approx_eq(&expect_a, 1e-13));
        assert!(keep_b.approx_eq(&expect_b, 1e-13));
    }
}

proptest! {
    #[test]
    fn partial_trace_preserves_trace_and_hermiticity(seed in any::<u64>(), keep_first in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_hermitian(&mut rng, 8);
        let shape = TensorShape::new(vec![2, 4]).unwrap();
        let keep = if keep_first { [0] } else { [1] };
        let reduced = partial_trace(&m, &shape, &keep).unwrap();
        prop_assert!((reduced.trace() - m.trace()).norm() < 1e-13);
        prop_assert!(reduced.is_hermitian(1e-14));
    }

    #[test]
    fn eigenvalues_sum_to_trace(seed in any::<u64>(), dim in 2usize..=8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_hermitian(&mut rng, dim);
        let d = hermitian_eig(&m).unwrap();
        prop_assert!((d.eigenvalues.iter().sum::<f64>() - m.trace().re).abs() < 1e-12);
    }
}
