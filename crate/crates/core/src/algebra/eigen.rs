//! Cyclic Jacobi eigensolver for small dense Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` and then applies
//! the classical real Jacobi rotation, so the combined 2×2 unitary is
//!
//! ```text
//! U = [ c        s      ]
//!     [ -s·ē     c·ē    ]    with e = a_pq / |a_pq|
//! ```
//!
//! and `U† A U` has a vanishing `(p, q)` entry. Dimensions in this crate stay
//! below a few dozen, where Jacobi is both accurate and fast enough.

use alloc::vec::Vec;

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use super::HermitianOperator;

const MAX_SWEEPS: usize = 100;

/// Eigen-decomposition `A = V Λ V†` with ascending eigenvalues; the columns
/// of `vectors` are the matching orthonormal eigenvectors.
#[derive(Clone, Debug)]
pub struct Eigh {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl Eigh {
    pub fn min(&self) -> f64 {
        self.values[0]
    }

    pub fn max(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    /// Rebuilds `V Λ V†`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.values.len();
        let v = &self.vectors;
        ComplexMatrix::from_fn(n, n, |i, j| {
            (0..n)
                .map(|k| v[(i, k)] * self.values[k] * v[(j, k)].conj())
                .sum()
        })
    }
}

/// Eigenvalues (ascending) and eigenvectors of a Hermitian operator.
pub fn eigh(a: &HermitianOperator) -> Eigh {
    jacobi(a.matrix())
}

/// Jacobi iteration on a matrix the caller guarantees to be Hermitian.
pub(crate) fn jacobi(input: &ComplexMatrix) -> Eigh {
    let n = input.rows();
    debug_assert!(input.is_square());
    let mut a = input.clone();
    let mut v = ComplexMatrix::identity(n);

    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[(p, q)].norm_sqr();
            }
        }
        if off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Eigh { values, vectors }
}

fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let g = a[(p, q)];
    let abs_g = g.norm();
    if abs_g == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    // Pivot negligible against both diagonal entries: drop it.
    let h = 100.0 * abs_g;
    if app.abs() + h == app.abs() && aqq.abs() + h == aqq.abs() {
        a[(p, q)] = Complex64::new(0.0, 0.0);
        a[(q, p)] = Complex64::new(0.0, 0.0);
        return;
    }

    let theta = (aqq - app) / (2.0 * abs_g);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + libm::sqrt(theta * theta + 1.0))
    };
    let c = 1.0 / libm::sqrt(1.0 + t * t);
    let s = t * c;
    let e_conj = (g / abs_g).conj();

    let u_pp = Complex64::new(c, 0.0);
    let u_pq = Complex64::new(s, 0.0);
    let u_qp = e_conj * (-s);
    let u_qq = e_conj * c;

    let n = a.rows();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * u_pp + akq * u_qp;
        a[(k, q)] = akp * u_pq + akq * u_qq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = u_pp.conj() * apk + u_qp.conj() * aqk;
        a[(q, k)] = u_pq.conj() * apk + u_qq.conj() * aqk;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)].im = 0.0;
    a[(q, q)].im = 0.0;

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * u_pp + vkq * u_qp;
        v[(k, q)] = vkp * u_pq + vkq * u_qq;
    }
}

/// Singular values of an arbitrary matrix, in descending order.
///
/// Computed from the Hermitian dilation `[[0, M], [M†, 0]]`, whose spectrum
/// is `±σ_i` padded with zeros; this keeps small singular values accurate
/// instead of square-rooting eigenvalues of `M†M`.
pub fn singular_values(m: &ComplexMatrix) -> Vec<f64> {
    let (rows, cols) = (m.rows(), m.cols());
    let n = rows + cols;
    let dilation = ComplexMatrix::from_fn(n, n, |i, j| {
        if i < rows && j >= rows {
            m[(i, j - rows)]
        } else if i >= rows && j < rows {
            m[(j, i - rows)].conj()
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let eig = jacobi(&dilation);
    eig.values
        .iter()
        .rev()
        .take(rows.min(cols))
        .map(|&s| s.max(0.0))
        .collect()
}

/// Trace (nuclear) norm: the sum of singular values.
pub fn trace_norm(m: &ComplexMatrix) -> f64 {
    singular_values(m).iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn herm(rows: &[Vec<Complex64>]) -> HermitianOperator {
        HermitianOperator::new(ComplexMatrix::from_rows(rows).unwrap()).unwrap()
    }

    #[test]
    fn diagonal_input_sorted() {
        let e = eigh(&HermitianOperator::from_real_diagonal(&[1.0, 0.0, 0.0]));
        assert_eq!(e.values, vec![0.0, 0.0, 1.0]);
    }

    #[test]
    fn off_diagonal_pair() {
        let a = herm(&[
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 0.0)],
        ]);
        let e = eigh(&a);
        assert!((e.values[0] + 1.0).abs() < 1e-15);
        assert!((e.values[1] - 1.0).abs() < 1e-15);
        assert!(e.reconstruct().max_abs_diff(a.matrix()) < 1e-14);
    }

    #[test]
    fn complex_pivot_reconstructs() {
        let a = herm(&[
            vec![c(2.0, 0.0), c(1.0, -1.0), c(0.0, 0.5)],
            vec![c(1.0, 1.0), c(-1.0, 0.0), c(0.25, 0.0)],
            vec![c(0.0, -0.5), c(0.25, 0.0), c(0.5, 0.0)],
        ]);
        let e = eigh(&a);
        assert!(e.reconstruct().max_abs_diff(a.matrix()) < 1e-12);
        let vv = &e.vectors.adjoint() * &e.vectors;
        assert!(vv.max_abs_diff(&ComplexMatrix::identity(3)) < 1e-12);
        let trace: f64 = e.values.iter().sum();
        assert!((trace - 1.5).abs() < 1e-12);
    }

    #[test]
    fn trace_norm_basic_values() {
        assert!((trace_norm(&ComplexMatrix::identity(2)) - 2.0).abs() < 1e-14);
        assert_eq!(trace_norm(&ComplexMatrix::zeros(3, 3)), 0.0);
    }

    #[test]
    fn rectangular_singular_values() {
        // diag(3, 2) padded with a zero column
        let m = ComplexMatrix::from_rows(&[
            vec![c(3.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 2.0), c(0.0, 0.0)],
        ])
        .unwrap();
        let s = singular_values(&m);
        assert_eq!(s.len(), 2);
        assert!((s[0] - 3.0).abs() < 1e-14 && (s[1] - 2.0).abs() < 1e-14);
    }
}
