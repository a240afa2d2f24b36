use alloc::vec::Vec;

use crate::algebra::DensityMatrix;
use crate::error::{Error, Result};
use crate::measurement::{classify, ClassKind, GeneralizedSymmetricMeasurement};

/// Largest accepted deviation of a block sum from one.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-10;

/// Most negative probability accepted before clipping to zero.
pub const CLIP_TOLERANCE: f64 = 1e-12;

/// Outcome probabilities `p_{α,k}`, one row per POVM.
#[derive(Clone, Debug, PartialEq)]
pub struct ProbabilityTable {
    blocks: Vec<Vec<f64>>,
}

impl ProbabilityTable {
    /// Validates normalization and clips rounding-level negatives.
    pub fn new(blocks: Vec<Vec<f64>>) -> Result<Self> {
        let mut blocks = blocks;
        for (alpha, block) in blocks.iter_mut().enumerate() {
            let sum: f64 = block.iter().sum();
            if (sum - 1.0).abs() > NORMALIZATION_TOLERANCE {
                return Err(Error::NotNormalized { alpha, sum });
            }
            for p in block.iter_mut() {
                if *p < -CLIP_TOLERANCE || !p.is_finite() {
                    return Err(Error::InvalidArgument(alloc::format!(
                        "probability {p} in block {alpha}"
                    )));
                }
                *p = p.max(0.0);
            }
        }
        Ok(Self { blocks })
    }

    pub fn blocks(&self) -> &[Vec<f64>] {
        &self.blocks
    }

    pub fn n_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Shannon entropy `−Σ p log p` of block `α`.
    pub fn shannon(&self, alpha: usize) -> f64 {
        -self.blocks[alpha]
            .iter()
            .filter(|&&p| p > 0.0)
            .map(|&p| p * libm::log(p))
            .sum::<f64>()
    }

    /// Rényi-2 entropy `−log Σ p²` of block `α`.
    pub fn renyi2(&self, alpha: usize) -> f64 {
        -libm::log(self.blocks[alpha].iter().map(|p| p * p).sum())
    }
}

/// `p_{α,k} = Tr(ρ E_{α,k})`.
pub fn probabilities(
    g: &GeneralizedSymmetricMeasurement,
    rho: &DensityMatrix,
) -> Result<ProbabilityTable> {
    if rho.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: rho.dim(),
        });
    }
    let blocks = g
        .blocks()
        .iter()
        .map(|block| {
            block
                .iter()
                .map(|e| rho.matrix().trace_of_product(e.matrix()).re)
                .collect()
        })
        .collect();
    ProbabilityTable::new(blocks)
}

/// `C = Σ_{α,k} p_{α,k}²`.
pub fn index_of_coincidence(t: &ProbabilityTable) -> f64 {
    t.blocks().iter().flatten().map(|p| p * p).sum()
}

/// `C_max = (d−1) r/d + μ`; only defined for r-class measurements.
pub fn c_max(g: &GeneralizedSymmetricMeasurement) -> Result<f64> {
    let tags = classify(g);
    match tags.r {
        Some(r) if tags.contains(ClassKind::RClass) => {
            let d = g.dim() as f64;
            Ok((d - 1.0) * r / d + g.mu())
        }
        _ => Err(Error::NotRClass),
    }
}

/// `Tr ρ² = 1/d + Σ_α (Σ_k p²_{α,k} − 1/M_α)/(x_α − y_α)`; holds for every
/// informationally complete measurement.
pub fn purity_from_probabilities(g: &GeneralizedSymmetricMeasurement, t: &ProbabilityTable) -> f64 {
    let diffs = g.params().differences();
    1.0 / g.dim() as f64
        + t.blocks()
            .iter()
            .zip(g.block_sizes())
            .zip(diffs)
            .map(|((block, &m), r)| (block.iter().map(|p| p * p).sum::<f64>() - 1.0 / m as f64) / r)
            .sum::<f64>()
}

/// r-class form of [`purity_from_probabilities`]: `(C − μ)/r + 1/d`.
pub fn purity_from_coincidence(c: f64, r: f64, mu: f64, d: usize) -> f64 {
    (c - mu) / r + 1.0 / d as f64
}
