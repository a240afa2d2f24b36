use alloc::format;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use super::eigen::{eigh, Eigh};
use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Square complex matrix equal to its adjoint.
///
/// Inputs within [`HermitianOperator::TOLERANCE`] of Hermitian are accepted
/// and symmetrized to `(A + A†)/2`; anything further off is rejected.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianOperator(ComplexMatrix);

impl HermitianOperator {
    pub const TOLERANCE: f64 = 1e-12;

    pub fn new(m: ComplexMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let residual = m.hermiticity_residual();
        if residual > Self::TOLERANCE {
            return Err(Error::NotHermitian(residual));
        }
        Ok(Self::symmetrize(m))
    }

    /// `(A + A†)/2` for a square matrix, without any tolerance check.
    pub(crate) fn symmetrize(m: ComplexMatrix) -> Self {
        let n = m.rows();
        let sym = ComplexMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Complex64::new(m[(i, i)].re, 0.0)
            } else {
                (m[(i, j)] + m[(j, i)].conj()) * 0.5
            }
        });
        Self(sym)
    }

    pub fn identity(d: usize) -> Self {
        Self(ComplexMatrix::identity(d))
    }

    pub fn zeros(d: usize) -> Self {
        Self(ComplexMatrix::zeros(d, d))
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        Self(ComplexMatrix::from_real_diagonal(diag))
    }

    /// Projector `|ψ⟩⟨ψ|` (not normalized).
    pub fn projector(psi: &[Complex64]) -> Self {
        Self::symmetrize(ComplexMatrix::outer(psi, psi))
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    #[inline]
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    pub fn trace(&self) -> f64 {
        self.0.trace().re
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self(self.0.scale(factor))
    }

    pub fn eigh(&self) -> Eigh {
        eigh(self)
    }

    /// Hilbert–Schmidt inner product `Tr(A B)`.
    pub fn hs_inner(&self, other: &Self) -> Result<f64> {
        hs_inner(self, other)
    }

    pub fn kron(&self, other: &Self) -> Self {
        Self(self.0.kron(&other.0))
    }

    /// `Σ cᵢ Aᵢ` over equally sized operators.
    ///
    /// # Panics
    ///
    /// On an empty list or mismatched dimensions.
    pub fn linear_combination<'a>(terms: impl IntoIterator<Item = (f64, &'a Self)>) -> Self {
        let mut iter = terms.into_iter();
        let (c0, a0) = iter.next().expect("empty linear combination");
        let mut acc = a0.0.scale(c0);
        for (c, a) in iter {
            acc.add_scaled(Complex64::new(c, 0.0), &a.0);
        }
        Self(acc)
    }
}

impl Add for &HermitianOperator {
    type Output = HermitianOperator;

    fn add(self, rhs: &HermitianOperator) -> HermitianOperator {
        HermitianOperator(&self.0 + &rhs.0)
    }
}

impl Sub for &HermitianOperator {
    type Output = HermitianOperator;

    fn sub(self, rhs: &HermitianOperator) -> HermitianOperator {
        HermitianOperator(&self.0 - &rhs.0)
    }
}

impl Mul<f64> for &HermitianOperator {
    type Output = HermitianOperator;

    fn mul(self, rhs: f64) -> HermitianOperator {
        self.scale(rhs)
    }
}

/// Hilbert–Schmidt inner product `Tr(A B)` of two Hermitian operators.
///
/// The result is real for Hermitian inputs; the rounding-level imaginary
/// part is dropped.
pub fn hs_inner(a: &HermitianOperator, b: &HermitianOperator) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    let z = a.0.trace_of_product(&b.0);
    debug_assert!(z.im.abs() <= 1e-12 * (1.0 + z.re.abs()) * a.dim() as f64);
    Ok(z.re)
}

/// Kronecker product of two matrices.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.kron(b)
}

/// The swap operator `F_d = Σ |m⟩⟨n| ⊗ |n⟩⟨m|` on `C^d ⊗ C^d`.
pub fn flip_operator(d: usize) -> Result<HermitianOperator> {
    if d < 2 {
        return Err(Error::DimensionTooSmall(d));
    }
    let mut f = ComplexMatrix::zeros(d * d, d * d);
    for m in 0..d {
        for n in 0..d {
            f[(m * d + n, n * d + m)] = Complex64::new(1.0, 0.0);
        }
    }
    Ok(HermitianOperator(f))
}

/// The maximally entangled state `P₊ = (1/d) Σ |m⟩⟨n| ⊗ |m⟩⟨n|`.
pub fn max_entangled_projector(d: usize) -> Result<DensityMatrix> {
    if d < 2 {
        return Err(Error::DimensionTooSmall(d));
    }
    let mut p = ComplexMatrix::zeros(d * d, d * d);
    let v = Complex64::new(1.0 / d as f64, 0.0);
    for m in 0..d {
        for n in 0..d {
            p[(m * d + m, n * d + n)] = v;
        }
    }
    Ok(DensityMatrix(HermitianOperator(p)))
}

/// A positive semidefinite Hermitian operator of unit trace.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix(HermitianOperator);

impl DensityMatrix {
    pub const TRACE_TOLERANCE: f64 = 1e-10;
    pub const POSITIVITY_TOLERANCE: f64 = 1e-10;

    pub fn new(op: HermitianOperator) -> Result<Self> {
        let tr = op.trace();
        if (tr - 1.0).abs() > Self::TRACE_TOLERANCE {
            return Err(Error::InvalidState(format!("trace {tr}")));
        }
        let min = op.eigh().min();
        if min < -Self::POSITIVITY_TOLERANCE {
            return Err(Error::InvalidState(format!("eigenvalue {min:e}")));
        }
        Ok(Self(op))
    }

    pub fn from_matrix(m: ComplexMatrix) -> Result<Self> {
        Self::new(HermitianOperator::new(m)?)
    }

    /// `|ψ⟩⟨ψ|/⟨ψ|ψ⟩` for a nonzero vector.
    pub fn pure(psi: &[Complex64]) -> Result<Self> {
        let norm_sqr: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        if psi.is_empty() || !(norm_sqr > 0.0) {
            return Err(Error::InvalidState("zero state vector".into()));
        }
        Ok(Self(
            HermitianOperator::projector(psi).scale(1.0 / norm_sqr),
        ))
    }

    pub fn maximally_mixed(d: usize) -> Self {
        Self(HermitianOperator::identity(d).scale(1.0 / d as f64))
    }

    /// Tensor product state `ρ_A ⊗ ρ_B`.
    pub fn tensor(&self, other: &Self) -> Self {
        Self(self.0.kron(&other.0))
    }

    /// Convex combination `Σ pᵢ ρᵢ`; weights must be nonnegative and sum to one.
    pub fn mixture(terms: &[(f64, &DensityMatrix)]) -> Result<Self> {
        if terms.is_empty() || terms.iter().any(|(p, _)| *p < 0.0) {
            return Err(Error::InvalidArgument(
                "mixture weights must be nonnegative".into(),
            ));
        }
        let total: f64 = terms.iter().map(|(p, _)| p).sum();
        if (total - 1.0).abs() > Self::TRACE_TOLERANCE {
            return Err(Error::InvalidArgument(format!(
                "mixture weights sum to {total}"
            )));
        }
        let dim = terms[0].1.dim();
        if let Some((_, r)) = terms.iter().find(|(_, r)| r.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: r.dim(),
            });
        }
        Ok(Self(HermitianOperator::linear_combination(
            terms.iter().map(|(p, r)| (*p, &r.0)),
        )))
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn operator(&self) -> &HermitianOperator {
        &self.0
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        self.0.matrix()
    }

    /// `Tr ρ²`.
    pub fn purity(&self) -> f64 {
        self.0.matrix().trace_of_product(self.0.matrix()).re
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        self.0.eigh().values
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hs_inner_identity() {
        let i2 = HermitianOperator::identity(2);
        assert_eq!(hs_inner(&i2, &i2).unwrap(), 2.0);
        assert!(hs_inner(&i2, &HermitianOperator::identity(3)).is_err());
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut m = ComplexMatrix::identity(2);
        m[(0, 1)] = Complex64::new(1e-6, 0.0);
        assert!(matches!(
            HermitianOperator::new(m),
            Err(Error::NotHermitian(_))
        ));
    }

    #[test]
    fn symmetrizes_within_tolerance() {
        let mut m = ComplexMatrix::identity(2);
        m[(0, 1)] = Complex64::new(0.5, 1e-13);
        m[(1, 0)] = Complex64::new(0.5, 0.0);
        let h = HermitianOperator::new(m).unwrap();
        assert_eq!(h.matrix().hermiticity_residual(), 0.0);
    }

    #[test]
    fn flip_is_swap_involution() {
        let f2 = flip_operator(2).unwrap();
        assert_eq!(f2.trace(), 2.0);
        assert_eq!(f2.matrix()[(1, 2)], Complex64::new(1.0, 0.0));
        assert_eq!(f2.matrix()[(0, 0)], Complex64::new(1.0, 0.0));
        let f3 = flip_operator(3).unwrap();
        let sq = f3.matrix() * f3.matrix();
        assert_eq!(sq, ComplexMatrix::identity(9));
        assert!(flip_operator(1).is_err());
    }

    #[test]
    fn bell_projector_entries() {
        let p = max_entangled_projector(2).unwrap();
        let m = p.matrix();
        for i in 0..4 {
            for j in 0..4 {
                let expected = if (i == 0 || i == 3) && (j == 0 || j == 3) {
                    0.5
                } else {
                    0.0
                };
                assert_eq!(m[(i, j)], Complex64::new(expected, 0.0));
            }
        }
        let p3 = max_entangled_projector(3).unwrap();
        assert!((p3.purity() - 1.0).abs() < 1e-14);
        let sq = p3.matrix() * p3.matrix();
        assert!(sq.max_abs_diff(p3.matrix()) < 1e-15);
        assert!(max_entangled_projector(1).is_err());
    }

    #[test]
    fn density_validation() {
        assert!(DensityMatrix::new(HermitianOperator::from_real_diagonal(&[0.5, 0.6])).is_err());
        assert!(DensityMatrix::new(HermitianOperator::from_real_diagonal(&[1.5, -0.5])).is_err());
        assert!(DensityMatrix::new(HermitianOperator::from_real_diagonal(&[0.25, 0.75])).is_ok());
    }
}
