//! Traceless orthonormal Hermitian operator bases and their partition into
//! blocks `{G_{α,1}, …, G_{α,M_α−1}}`.
//!
//! Block indices `α` are zero-based throughout the API.

use alloc::vec::Vec;

use num_complex::Complex64;
use rand::Rng;

use crate::algebra::random::random_orthogonal;
use crate::algebra::{hs_inner, ComplexMatrix, HermitianOperator, RealMatrix};
use crate::error::{Error, Result};

/// Tolerance for tracelessness and Hilbert–Schmidt orthonormality.
pub const ORTHONORMALITY_TOLERANCE: f64 = 1e-10;

/// Generalized Gell-Mann basis of the traceless operators on `C^d`.
///
/// Returns `d² − 1` operators normalized to `Tr(G_i G_j) = δ_ij`, ordered as
/// the symmetric off-diagonal pairs `(|j⟩⟨k| + |k⟩⟨j|)/√2`, then the
/// antisymmetric pairs `(−i|j⟩⟨k| + i|k⟩⟨j|)/√2` (both with `j < k` in
/// lexicographic order), then the diagonal operators
/// `(Σ_{m<l} |m⟩⟨m| − l|l⟩⟨l|)/√(l(l+1))` for `l = 1..d−1`.
///
/// For `d = 2` this is `(σ_x, σ_y, σ_z)/√2`.
pub fn gell_mann_basis(d: usize) -> Result<Vec<HermitianOperator>> {
    if d < 2 {
        return Err(Error::DimensionTooSmall(d));
    }
    let s = core::f64::consts::FRAC_1_SQRT_2;
    let mut out = Vec::with_capacity(d * d - 1);
    let pairs: Vec<(usize, usize)> = (0..d)
        .flat_map(|j| ((j + 1)..d).map(move |k| (j, k)))
        .collect();
    for &(j, k) in &pairs {
        let mut m = ComplexMatrix::zeros(d, d);
        m[(j, k)] = Complex64::new(s, 0.0);
        m[(k, j)] = Complex64::new(s, 0.0);
        out.push(HermitianOperator::new(m)?);
    }
    for &(j, k) in &pairs {
        let mut m = ComplexMatrix::zeros(d, d);
        m[(j, k)] = Complex64::new(0.0, -s);
        m[(k, j)] = Complex64::new(0.0, s);
        out.push(HermitianOperator::new(m)?);
    }
    for l in 1..d {
        let norm = 1.0 / libm::sqrt((l * (l + 1)) as f64);
        let diag: Vec<f64> = (0..d)
            .map(|m| match m {
                m if m < l => norm,
                m if m == l => -(l as f64) * norm,
                _ => 0.0,
            })
            .collect();
        out.push(HermitianOperator::from_real_diagonal(&diag));
    }
    Ok(out)
}

/// Checks tracelessness and pairwise orthonormality of a list of operators.
pub fn check_orthonormal(ops: &[HermitianOperator]) -> Result<()> {
    for (i, a) in ops.iter().enumerate() {
        let tr = a.trace();
        if tr.abs() > ORTHONORMALITY_TOLERANCE {
            return Err(Error::NotTraceless {
                index: i,
                trace: tr,
            });
        }
        for (j, b) in ops.iter().enumerate().skip(i) {
            let target = if i == j { 1.0 } else { 0.0 };
            let deviation = (hs_inner(a, b)? - target).abs();
            if deviation > ORTHONORMALITY_TOLERANCE {
                return Err(Error::NotOrthonormal { i, j, deviation });
            }
        }
    }
    Ok(())
}

/// Orthonormal traceless operators grouped into `N` blocks; block `α` holds
/// `M_α − 1` operators.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisPartition {
    dim: usize,
    block_sizes: Vec<usize>,
    blocks: Vec<Vec<HermitianOperator>>,
}

impl BasisPartition {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// POVM sizes `M_α` (one more than the number of operators per block).
    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    pub fn n_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block(&self, alpha: usize) -> Result<&[HermitianOperator]> {
        self.blocks
            .get(alpha)
            .map(Vec::as_slice)
            .ok_or(Error::BlockIndex {
                alpha,
                count: self.blocks.len(),
            })
    }

    pub fn blocks(&self) -> &[Vec<HermitianOperator>] {
        &self.blocks
    }

    /// `G_α = Σ_k G_{α,k}`.
    pub fn block_sum(&self, alpha: usize) -> Result<HermitianOperator> {
        let block = self.block(alpha)?;
        Ok(HermitianOperator::linear_combination(
            block.iter().map(|g| (1.0, g)),
        ))
    }

    /// All operators in block order.
    pub fn operators(&self) -> impl Iterator<Item = &HermitianOperator> {
        self.blocks.iter().flatten()
    }

    /// `true` when the blocks use a full traceless basis (`Σ(M_α − 1) = d² − 1`).
    pub fn is_complete(&self) -> bool {
        self.operators().count() == self.dim * self.dim - 1
    }
}

/// Splits `ops` first-fit into blocks of `M_α − 1` operators.
pub fn partition_basis(ops: &[HermitianOperator], block_sizes: &[usize]) -> Result<BasisPartition> {
    let first = ops.first().ok_or(Error::PartitionOverflow {
        needed: 1,
        available: 0,
    })?;
    let dim = first.dim();
    if let Some(bad) = ops.iter().find(|g| g.dim() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: bad.dim(),
        });
    }
    if block_sizes.is_empty() {
        return Err(Error::InvalidArgument("no blocks requested".into()));
    }
    if let Some((alpha, &size)) = block_sizes.iter().enumerate().find(|(_, &m)| m < 2) {
        return Err(Error::BlockTooSmall { alpha, size });
    }
    let needed: usize = block_sizes.iter().map(|m| m - 1).sum();
    let available = ops.len().min(dim * dim - 1);
    if needed > available {
        return Err(Error::PartitionOverflow { needed, available });
    }
    let used = &ops[..needed];
    check_orthonormal(used)?;

    let mut blocks = Vec::with_capacity(block_sizes.len());
    let mut start = 0;
    for &m in block_sizes {
        blocks.push(used[start..start + m - 1].to_vec());
        start += m - 1;
    }
    Ok(BasisPartition {
        dim,
        block_sizes: block_sizes.to_vec(),
        blocks,
    })
}

/// Replaces block `α` by `G'_{α,k} = Σ_j O_{kj} G_{α,j}` for a real
/// orthogonal `O`.
pub fn rotate_block(
    p: &BasisPartition,
    alpha: usize,
    orthogonal: &RealMatrix,
) -> Result<BasisPartition> {
    let block = p.block(alpha)?;
    let n = block.len();
    if orthogonal.rows() != n || orthogonal.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: orthogonal.rows(),
        });
    }
    let residual = orthogonal.orthogonality_residual();
    if residual > ORTHONORMALITY_TOLERANCE {
        return Err(Error::NotOrthogonal(residual));
    }
    let rotated: Vec<HermitianOperator> = (0..n)
        .map(|k| {
            HermitianOperator::linear_combination(
                block
                    .iter()
                    .enumerate()
                    .map(|(j, g)| (orthogonal[(k, j)], g)),
            )
        })
        .collect();
    let mut out = p.clone();
    out.blocks[alpha] = rotated;
    Ok(out)
}

/// Applies a random orthogonal rotation to the whole Gell-Mann basis before
/// partitioning, so every block mixes operators of all kinds.
pub fn random_partition<R: Rng + ?Sized>(
    d: usize,
    block_sizes: &[usize],
    rng: &mut R,
) -> Result<BasisPartition> {
    let basis = gell_mann_basis(d)?;
    let o = random_orthogonal(basis.len(), rng);
    let rotated: Vec<HermitianOperator> = (0..basis.len())
        .map(|k| {
            HermitianOperator::linear_combination(
                basis.iter().enumerate().map(|(j, g)| (o[(k, j)], g)),
            )
        })
        .collect();
    partition_basis(&rotated, block_sizes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::random::{random_density_matrix_with, seeded_rng};
    use alloc::vec;

    fn gram(ops: &[HermitianOperator]) -> Vec<Vec<f64>> {
        ops.iter()
            .map(|a| ops.iter().map(|b| hs_inner(a, b).unwrap()).collect())
            .collect()
    }

    fn assert_identity_gram(ops: &[HermitianOperator], tol: f64) {
        for (i, row) in gram(ops).iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                assert!((v - target).abs() <= tol, "gram[{i}][{j}] = {v}");
            }
        }
    }

    #[test]
    fn qubit_basis_is_scaled_pauli() {
        let b = gell_mann_basis(2).unwrap();
        let s = core::f64::consts::FRAC_1_SQRT_2;
        let c = |re, im| Complex64::new(re, im);
        let sx =
            ComplexMatrix::from_rows(&[vec![c(0.0, 0.0), c(s, 0.0)], vec![c(s, 0.0), c(0.0, 0.0)]])
                .unwrap();
        let sy = ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(0.0, -s)],
            vec![c(0.0, s), c(0.0, 0.0)],
        ])
        .unwrap();
        let sz = ComplexMatrix::from_real_diagonal(&[s, -s]);
        assert!(b[0].matrix().max_abs_diff(&sx) < 1e-15);
        assert!(b[1].matrix().max_abs_diff(&sy) < 1e-15);
        assert!(b[2].matrix().max_abs_diff(&sz) < 1e-15);
    }

    #[test]
    fn gram_is_identity() {
        for d in 2..=6 {
            let b = gell_mann_basis(d).unwrap();
            assert_eq!(b.len(), d * d - 1);
            assert_identity_gram(&b, 1e-14);
            check_orthonormal(&b).unwrap();
        }
        assert!(gell_mann_basis(1).is_err());
    }

    #[test]
    fn completeness_with_identity() {
        let mut rng = seeded_rng(5);
        for d in 2..=4 {
            let mut full = gell_mann_basis(d).unwrap();
            full.push(HermitianOperator::identity(d).scale(1.0 / libm::sqrt(d as f64)));
            let a = random_density_matrix_with(d, d, &mut rng).unwrap();
            let a = a.operator();
            let rebuilt = HermitianOperator::linear_combination(
                full.iter().map(|b| (hs_inner(a, b).unwrap(), b)),
            );
            assert!(rebuilt.matrix().max_abs_diff(a.matrix()) < 1e-9);
        }
    }

    #[test]
    fn partition_layouts() {
        let b = gell_mann_basis(2).unwrap();
        let p = partition_basis(&b, &[2, 3]).unwrap();
        assert_eq!(
            p.blocks().iter().map(Vec::len).collect::<Vec<_>>(),
            vec![1, 2]
        );
        assert!(p.is_complete());
        let sic = partition_basis(&b, &[4]).unwrap();
        assert_eq!(sic.block(0).unwrap().len(), 3);
        let mub = partition_basis(&b, &[2, 2, 2]).unwrap();
        assert_eq!(
            mub.blocks().iter().map(Vec::len).collect::<Vec<_>>(),
            vec![1, 1, 1]
        );
    }

    #[test]
    fn partition_errors() {
        let b = gell_mann_basis(2).unwrap();
        assert!(matches!(
            partition_basis(&b, &[3, 3]),
            Err(Error::PartitionOverflow { .. })
        ));
        assert!(matches!(
            partition_basis(&b, &[1]),
            Err(Error::BlockTooSmall { .. })
        ));
        let mut bad = b.clone();
        bad[1] = bad[1].scale(2.0);
        assert!(matches!(
            partition_basis(&bad, &[4]),
            Err(Error::NotOrthonormal { .. })
        ));
    }

    #[test]
    fn block_sums_are_orthogonal() {
        let mut rng = seeded_rng(9);
        let p = random_partition(3, &[3, 4, 4], &mut rng).unwrap();
        for a in 0..3 {
            let ga = p.block_sum(a).unwrap();
            for b in 0..3 {
                let gb = p.block_sum(b).unwrap();
                let expected = if a == b {
                    (p.block_sizes()[a] - 1) as f64
                } else {
                    0.0
                };
                assert!((hs_inner(&ga, &gb).unwrap() - expected).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn rotations() {
        let b = gell_mann_basis(3).unwrap();
        let p = partition_basis(&b, &[3, 3]).unwrap();
        assert_eq!(rotate_block(&p, 0, &RealMatrix::identity(2)).unwrap(), p);

        let quarter = RealMatrix::from_rows(&[vec![0.0, 1.0], vec![-1.0, 0.0]]).unwrap();
        let r = rotate_block(&p, 1, &quarter).unwrap();
        let (orig, rot) = (p.block(1).unwrap(), r.block(1).unwrap());
        assert!(rot[0].matrix().max_abs_diff(orig[1].matrix()) < 1e-15);
        assert!(rot[1].matrix().max_abs_diff(orig[0].scale(-1.0).matrix()) < 1e-15);

        let mut rng = seeded_rng(1);
        let o = random_orthogonal(2, &mut rng);
        let r = rotate_block(&p, 0, &o).unwrap();
        let all: Vec<HermitianOperator> = r.operators().cloned().collect();
        assert_identity_gram(&all, 1e-10);

        let skew = RealMatrix::from_rows(&[vec![1.0, 0.1], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(
            rotate_block(&p, 0, &skew),
            Err(Error::NotOrthogonal(_))
        ));
        assert!(matches!(
            rotate_block(&p, 5, &quarter),
            Err(Error::BlockIndex { .. })
        ));
    }
}
