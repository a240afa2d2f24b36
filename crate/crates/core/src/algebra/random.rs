//! Seeded samplers for states, unitaries and orthogonal rotations.
//!
//! All samplers take a caller-owned RNG; the `*_seeded` conveniences use
//! ChaCha8 seeded from a `u64`, so results are reproducible across platforms.

use alloc::vec::Vec;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Exp1, StandardNormal};

use super::hermitian::{DensityMatrix, HermitianOperator};
use super::matrix::{ComplexMatrix, RealMatrix};
use crate::error::{Error, Result};

/// Deterministic RNG used by the seeded entry points.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im)
}

/// Haar-random unit vector in `C^d`.
pub fn random_pure_vector<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Vec<Complex64> {
    loop {
        let v: Vec<Complex64> = (0..d).map(|_| complex_normal(rng)).collect();
        let norm = libm::sqrt(v.iter().map(|z| z.norm_sqr()).sum());
        if norm > 1e-12 {
            return v.into_iter().map(|z| z / norm).collect();
        }
    }
}

/// Ginibre-distributed state `G G† / Tr(G G†)` with `G` of size `d × rank`.
pub fn random_density_matrix_with<R: Rng + ?Sized>(
    d: usize,
    rank: usize,
    rng: &mut R,
) -> Result<DensityMatrix> {
    if d == 0 || rank == 0 || rank > d {
        return Err(Error::InvalidRank { rank, dim: d });
    }
    let g = ComplexMatrix::from_fn(d, rank, |_, _| complex_normal(rng));
    let gg = &g * &g.adjoint();
    let tr = gg.trace().re;
    let op = HermitianOperator::symmetrize(gg.scale(1.0 / tr));
    DensityMatrix::new(op)
}

/// Seeded variant of [`random_density_matrix_with`].
pub fn random_density_matrix(d: usize, rank: usize, seed: u64) -> Result<DensityMatrix> {
    random_density_matrix_with(d, rank, &mut seeded_rng(seed))
}

/// Haar-random pure state as a density matrix.
pub fn random_pure_state<R: Rng + ?Sized>(d: usize, rng: &mut R) -> DensityMatrix {
    DensityMatrix::pure(&random_pure_vector(d, rng)).expect("unit vector")
}

/// Separable state `Σ pᵢ |aᵢ⟩⟨aᵢ| ⊗ |bᵢ⟩⟨bᵢ|` with `1..=max_terms` Haar
/// product factors and flat-Dirichlet weights.
pub fn random_separable_state<R: Rng + ?Sized>(
    d_a: usize,
    d_b: usize,
    max_terms: usize,
    rng: &mut R,
) -> DensityMatrix {
    let terms = rng.random_range(1..=max_terms.max(1));
    let raw: Vec<f64> = (0..terms).map(|_| rng.sample::<f64, _>(Exp1)).collect();
    let total: f64 = raw.iter().sum();
    let products: Vec<DensityMatrix> = (0..terms)
        .map(|_| random_pure_state(d_a, rng).tensor(&random_pure_state(d_b, rng)))
        .collect();
    let weighted: Vec<(f64, &DensityMatrix)> =
        raw.iter().map(|w| w / total).zip(products.iter()).collect();
    let op =
        HermitianOperator::linear_combination(weighted.iter().map(|(p, r)| (*p, r.operator())));
    DensityMatrix::new(op).expect("convex combination of states")
}

/// Haar-random unitary via Gram–Schmidt on a Ginibre matrix.
pub fn random_unitary<R: Rng + ?Sized>(d: usize, rng: &mut R) -> ComplexMatrix {
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(d);
    while cols.len() < d {
        let mut v: Vec<Complex64> = (0..d).map(|_| complex_normal(rng)).collect();
        for u in &cols {
            let proj: Complex64 = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            for (vi, ui) in v.iter_mut().zip(u) {
                *vi -= proj * ui;
            }
        }
        let norm = libm::sqrt(v.iter().map(|z| z.norm_sqr()).sum());
        if norm > 1e-8 {
            cols.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    ComplexMatrix::from_fn(d, d, |i, j| cols[j][i])
}

/// Haar-random real orthogonal matrix via Gram–Schmidt on Gaussian rows.
pub fn random_orthogonal<R: Rng + ?Sized>(n: usize, rng: &mut R) -> RealMatrix {
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(n);
    while rows.len() < n {
        let mut v: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
        for _ in 0..2 {
            for u in &rows {
                let proj: f64 = u.iter().zip(&v).map(|(a, b)| a * b).sum();
                for (vi, ui) in v.iter_mut().zip(u) {
                    *vi -= proj * ui;
                }
            }
        }
        let norm = libm::sqrt(v.iter().map(|x| x * x).sum());
        if norm > 1e-8 {
            rows.push(v.into_iter().map(|x| x / norm).collect());
        }
    }
    RealMatrix::from_rows(&rows).expect("square")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_is_pure() {
        for seed in 0..5 {
            let rho = random_density_matrix(3, 1, seed).unwrap();
            assert!((rho.purity() - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn full_rank_is_valid() {
        let rho = random_density_matrix(4, 4, 7).unwrap();
        let ev = rho.eigenvalues();
        assert!(ev.iter().all(|&x| x >= -1e-12));
        assert!((ev.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn seeded_is_deterministic() {
        assert_eq!(
            random_density_matrix(3, 2, 42).unwrap(),
            random_density_matrix(3, 2, 42).unwrap()
        );
    }

    #[test]
    fn invalid_rank_rejected() {
        assert!(random_density_matrix(3, 0, 1).is_err());
        assert!(random_density_matrix(3, 4, 1).is_err());
    }

    #[test]
    fn samplers_are_orthonormal() {
        let mut rng = seeded_rng(3);
        let u = random_unitary(4, &mut rng);
        assert!((&u.adjoint() * &u).max_abs_diff(&ComplexMatrix::identity(4)) < 1e-12);
        let o = random_orthogonal(5, &mut rng);
        assert!(o.orthogonality_residual() < 1e-12);
    }

    #[test]
    fn separable_sample_is_state() {
        let mut rng = seeded_rng(11);
        let rho = random_separable_state(2, 3, 10, &mut rng);
        assert_eq!(rho.dim(), 6);
        assert!((rho.operator().trace() - 1.0).abs() < 1e-12);
    }
}
