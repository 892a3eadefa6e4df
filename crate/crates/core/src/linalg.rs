//! Small dense complex linear algebra: Kronecker products, partial traces over
//! labelled tensor factors, Hermitian eigendecomposition and PSD square roots.
//!
//! Tensor factors use the row-major convention: the leftmost factor is the
//! most significant digit of a basis index, so `|q, t>` with a qubit `q` and
//! a qutrit `t` lives at index `3 * q + t`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest tolerated `|m_ij - conj(m_ji)|` for inputs declared Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Eigenvalues in `[-PSD_TOL, 0)` are numerical zeros; anything lower is an error.
pub const PSD_TOL: f64 = 1e-10;
/// Relative size below which an eigenvalue is indistinguishable from zero in `psd_sqrt`.
const SQRT_NOISE_FLOOR: f64 = 64.0 * f64::EPSILON;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

/// Square complex matrix.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix(DMatrix<Complex64>);

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self(DMatrix::zeros(dim, dim))
    }

    pub fn identity(dim: usize) -> Self {
        Self(DMatrix::identity(dim, dim))
    }

    pub fn from_fn(dim: usize, f: impl FnMut(usize, usize) -> Complex64) -> Self {
        Self(DMatrix::from_fn(dim, dim, f))
    }

    /// Builds a matrix from row-major entries; panics if `entries.len()` is not a square.
    pub fn from_row_slice(dim: usize, entries: &[Complex64]) -> Self {
        Self(DMatrix::from_row_slice(dim, dim, entries))
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (k, &d) in diag.iter().enumerate() {
            m[(k, k)] = Complex64::new(d, 0.0);
        }
        m
    }

    /// Outer product `|v><v|`.
    pub fn projector(v: &[Complex64]) -> Self {
        Self::from_fn(v.len(), |r, c| v[r] * v[c].conj())
    }

    pub fn from_dmatrix(m: DMatrix<Complex64>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Dimension(format!("expected a square matrix, got {}x{}", m.nrows(), m.ncols())));
        }
        Ok(Self(m))
    }

    pub fn as_dmatrix(&self) -> &DMatrix<Complex64> {
        &self.0
    }

    pub fn into_dmatrix(self) -> DMatrix<Complex64> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn trace(&self) -> Complex64 {
        self.0.trace()
    }

    pub fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self(self.0.map(|z| z * factor))
    }

    /// `(m + m†) / 2`.
    pub fn hermitian_part(&self) -> Self {
        Self((&self.0 + self.0.adjoint()) * Complex64::new(0.5, 0.0))
    }

    /// `max |m_ij - conj(m_ji)|`.
    pub fn hermiticity_defect(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0_f64;
        for r in 0..n {
            for c in r..n {
                worst = worst.max((self.0[(r, c)] - self.0[(c, r)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol
    }

    /// Largest elementwise modulus of `self - other`; infinite on a dimension mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.dim() != other.dim() {
            return f64::INFINITY;
        }
        self.0.iter().zip(other.0.iter()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// Elementwise equality within an absolute tolerance.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    /// `sum_ij |m_ij|^2`, equal to `Tr(m m†)`.
    pub fn frobenius_norm_sqr(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Real part of every entry, row-major.
    pub fn real_entries(&self) -> Vec<f64> {
        let n = self.dim();
        (0..n).flat_map(|r| (0..n).map(move |c| (r, c))).map(|(r, c)| self.0[(r, c)].re).collect()
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{})", self.dim(), self.dim())?;
        for r in 0..self.dim() {
            for c in 0..self.dim() {
                let z = self.0[(r, c)];
                write!(f, " {:+.6}{:+.6}i", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, idx: (usize, usize)) -> &Complex64 {
        &self.0[idx]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, idx: (usize, usize)) -> &mut Complex64 {
        &mut self.0[idx]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix(&self.0 * &rhs.0)
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix(&self.0 + &rhs.0)
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix(&self.0 - &rhs.0)
    }
}

/// Factorization of a Hilbert space into ordered tensor factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorShape {
    factor_dims: Vec<usize>,
}

impl TensorShape {
    pub fn new(factor_dims: Vec<usize>) -> Result<Self> {
        if factor_dims.is_empty() || factor_dims.contains(&0) {
            return Err(Error::Dimension(format!(
                "tensor factors must be non-empty and positive, got {factor_dims:?}"
            )));
        }
        Ok(Self { factor_dims })
    }

    pub fn factor_dims(&self) -> &[usize] {
        &self.factor_dims
    }

    pub fn num_factors(&self) -> usize {
        self.factor_dims.len()
    }

    /// Product of the factor dimensions.
    pub fn dim(&self) -> usize {
        self.factor_dims.iter().product()
    }

    fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1; self.factor_dims.len()];
        for k in (0..self.factor_dims.len().saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * self.factor_dims[k + 1];
        }
        strides
    }

    /// Flat offsets of every multi-index over `factors` (ascending factor order).
    fn offsets(&self, factors: &[usize]) -> Vec<usize> {
        let strides = self.strides();
        let mut offsets = vec![0usize];
        for &f in factors {
            let mut next = Vec::with_capacity(offsets.len() * self.factor_dims[f]);
            for &base in &offsets {
                for digit in 0..self.factor_dims[f] {
                    next.push(base + digit * strides[f]);
                }
            }
            offsets = next;
        }
        offsets
    }
}

/// Kronecker product `a ⊗ b`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix(a.0.kronecker(&b.0))
}

/// Traces out every factor of `shape` not listed in `keep`.
///
/// The kept factors appear in the result in ascending factor order.
pub fn partial_trace(m: &ComplexMatrix, shape: &TensorShape, keep: &[usize]) -> Result<ComplexMatrix> {
    if shape.dim() != m.dim() {
        return Err(Error::Dimension(format!(
            "tensor shape {:?} has dimension {} but the matrix is {}x{}",
            shape.factor_dims(),
            shape.dim(),
            m.dim(),
            m.dim()
        )));
    }
    let mut kept: Vec<usize> = keep.to_vec();
    kept.sort_unstable();
    kept.dedup();
    if kept.len() != keep.len() || kept.iter().any(|&k| k >= shape.num_factors()) {
        return Err(Error::Dimension(format!(
            "keep set {keep:?} is not a set of factor indices below {}",
            shape.num_factors()
        )));
    }
    if kept.is_empty() || kept.len() == shape.num_factors() {
        return Err(Error::Dimension(format!(
            "keep set {keep:?} must be a non-empty proper subset of {} factors",
            shape.num_factors()
        )));
    }
    let traced: Vec<usize> = (0..shape.num_factors()).filter(|f| !kept.contains(f)).collect();

    let kept_offsets = shape.offsets(&kept);
    let traced_offsets = shape.offsets(&traced);
    let out = ComplexMatrix::from_fn(kept_offsets.len(), |a, b| {
        traced_offsets.iter().map(|&t| m[(kept_offsets[a] + t, kept_offsets[b] + t)]).sum()
    });
    Ok(out)
}

/// Eigenvalues (descending) with orthonormal eigenvector columns.
#[derive(Clone, Debug)]
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<f64>,
    /// Column `k` is the eigenvector of `eigenvalues[k]`.
    pub eigenvectors: ComplexMatrix,
}

impl SpectralDecomposition {
    pub fn eigenvector(&self, k: usize) -> Vec<Complex64> {
        let n = self.eigenvectors.dim();
        (0..n).map(|r| self.eigenvectors[(r, k)]).collect()
    }

    /// `V f(Λ) V†` for a real function applied to the spectrum.
    pub fn map_spectrum(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let v = self.eigenvectors.as_dmatrix();
        let diag = DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
            self.eigenvalues.len(),
            self.eigenvalues.iter().map(|&l| Complex64::new(f(l), 0.0)),
        ));
        ComplexMatrix(v * diag * v.adjoint())
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.map_spectrum(|l| l)
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    pub fn max_eigenvalue(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }
}

/// Hermitian eigendecomposition with eigenvalues sorted descending.
pub fn hermitian_eig(m: &ComplexMatrix) -> Result<SpectralDecomposition> {
    let defect = m.hermiticity_defect();
    if defect > HERMITIAN_TOL {
        return Err(Error::NotHermitian { defect, tol: HERMITIAN_TOL });
    }
    let eig = SymmetricEigen::new(m.0.clone());
    let mut order: Vec<usize> = (0..m.dim()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));

    let eigenvalues = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let eigenvectors = ComplexMatrix::from_fn(m.dim(), |r, c| eig.eigenvectors[(r, order[c])]);
    Ok(SpectralDecomposition { eigenvalues, eigenvectors })
}

/// Principal square root of a positive-semidefinite Hermitian matrix.
pub fn psd_sqrt(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let spectral = hermitian_eig(m)?;
    let min = spectral.min_eigenvalue();
    if min < -PSD_TOL {
        return Err(Error::NotPsd { min_eigenvalue: min });
    }
    // eigenvalues inside the solver's round-off band are zero; their square
    // roots would otherwise inject O(1e-8) noise
    let floor = SQRT_NOISE_FLOOR * spectral.max_eigenvalue().abs().max(min.abs());
    Ok(spectral.map_spectrum(|l| if l <= floor { 0.0 } else { l.sqrt() }).hermitian_part())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn kron_of_identities_is_identity() {
        let k = kron(&ComplexMatrix::identity(2), &ComplexMatrix::identity(3));
        assert!(k.approx_eq(&ComplexMatrix::identity(6), 0.0));
    }

    #[test]
    fn kron_pads_projector() {
        let k = kron(&ComplexMatrix::from_real_diagonal(&[1.0, 0.0]), &ComplexMatrix::identity(3));
        let expected = ComplexMatrix::from_real_diagonal(&[1.0, 1.0, 1.0, 0.0, 0.0, 0.0]);
        assert!(k.approx_eq(&expected, 0.0));
    }

    #[test]
    fn kron_swap_acts_on_leading_factor() {
        let swap = ComplexMatrix::from_row_slice(2, &[ZERO, ONE, ONE, ZERO]);
        let op = kron(&swap, &ComplexMatrix::identity(2));
        // |00> is index 0, |10> is index 2
        for row in 0..4 {
            let expected = if row == 2 { ONE } else { ZERO };
            assert_eq!(op[(row, 0)], expected);
        }
    }

    #[test]
    fn partial_trace_of_product_state() {
        let a =
            ComplexMatrix::from_row_slice(2, &[c(0.7), Complex64::new(0.1, 0.2), Complex64::new(0.1, -0.2), c(0.3)]);
        let b = ComplexMatrix::from_real_diagonal(&[0.5, 0.25, 0.25]);
        let shape = TensorShape::new(vec![2, 3]).unwrap();
        let ab = kron(&a, &b);
        assert!(partial_trace(&ab, &shape, &[0]).unwrap().approx_eq(&a, 1e-15));
        assert!(partial_trace(&ab, &shape, &[1]).unwrap().approx_eq(&b, 1e-15));
    }

    #[test]
    fn partial_trace_keeps_middle_factor() {
        let a = ComplexMatrix::from_real_diagonal(&[1.0, 0.0]);
        let b = ComplexMatrix::from_real_diagonal(&[0.2, 0.3, 0.5]);
        let d = ComplexMatrix::from_real_diagonal(&[0.5, 0.5]);
        let shape = TensorShape::new(vec![2, 3, 2]).unwrap();
        let abd = kron(&kron(&a, &b), &d);
        assert!(partial_trace(&abd, &shape, &[1]).unwrap().approx_eq(&b, 1e-15));
        let ad = partial_trace(&abd, &shape, &[0, 2]).unwrap();
        assert!(ad.approx_eq(&kron(&a, &d), 1e-15));
    }

    #[test]
    fn partial_trace_rejects_bad_shapes() {
        let m = ComplexMatrix::identity(6);
        let shape = TensorShape::new(vec![2, 2]).unwrap();
        assert!(matches!(partial_trace(&m, &shape, &[0]), Err(Error::Dimension(_))));

        let shape = TensorShape::new(vec![2, 3]).unwrap();
        assert!(partial_trace(&m, &shape, &[]).is_err());
        assert!(partial_trace(&m, &shape, &[0, 1]).is_err());
        assert!(partial_trace(&m, &shape, &[2]).is_err());
        assert!(TensorShape::new(vec![2, 0]).is_err());
    }

    #[test]
    fn eig_of_diagonal_is_sorted() {
        let d = hermitian_eig(&ComplexMatrix::from_real_diagonal(&[3.0, 1.0, 2.0])).unwrap();
        assert_eq!(d.eigenvalues, vec![3.0, 2.0, 1.0]);
    }

    #[test]
    fn eig_of_rank_one_projector() {
        let h = ComplexMatrix::from_row_slice(2, &[c(0.5), c(0.5), c(0.5), c(0.5)]);
        let d = hermitian_eig(&h).unwrap();
        assert_abs_diff_eq!(d.eigenvalues[0], 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(d.eigenvalues[1], 0.0, epsilon = 1e-15);
        let v = d.eigenvector(0);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let overlap = (v[0].conj() * s + v[1].conj() * s).norm();
        assert_abs_diff_eq!(overlap, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let m = ComplexMatrix::from_row_slice(2, &[ZERO, ONE, ZERO, ZERO]);
        assert!(matches!(hermitian_eig(&m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn sqrt_of_diagonal() {
        let r = psd_sqrt(&ComplexMatrix::from_real_diagonal(&[4.0, 9.0, 0.0])).unwrap();
        assert!(r.approx_eq(&ComplexMatrix::from_real_diagonal(&[2.0, 3.0, 0.0]), 1e-14));
    }

    #[test]
    fn sqrt_of_pure_projector_is_itself() {
        let v = [Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)];
        let p = ComplexMatrix::projector(&v);
        assert!(psd_sqrt(&p).unwrap().approx_eq(&p, 1e-14));
    }

    #[test]
    fn sqrt_of_scaled_identity() {
        let r = psd_sqrt(&ComplexMatrix::identity(6).scale(1.0 / 6.0)).unwrap();
        assert!(r.approx_eq(&ComplexMatrix::identity(6).scale(1.0 / 6.0_f64.sqrt()), 1e-14));
    }

    #[test]
    fn sqrt_clamps_tiny_negatives_and_rejects_large_ones() {
        let r = psd_sqrt(&ComplexMatrix::from_real_diagonal(&[1.0, -5e-11])).unwrap();
        assert_eq!(r[(1, 1)], ZERO);
        assert!(matches!(psd_sqrt(&ComplexMatrix::from_real_diagonal(&[1.0, -1e-6])), Err(Error::NotPsd { .. })));
    }
}
