use alloc::vec::Vec;

use super::probability::ProbabilityTable;
use crate::algebra::HermitianOperator;
use crate::error::{Error, Result};
use crate::measurement::{is_informationally_complete, GeneralizedSymmetricMeasurement};

/// Dual frame `F_{α,k} = a_α E_{α,k} − b_α I` with
/// `a_α = 1/(x_α − y_α)` and `b_α = w_α/(d(x_α − y_α)) − 1/(dN)`, so that
/// `ρ = Σ p_{α,k} F_{α,k}`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualFrame {
    pub blocks: Vec<Vec<HermitianOperator>>,
    pub a: Vec<f64>,
    pub b: Vec<f64>,
}

impl DualFrame {
    /// `Σ p_{α,k} F_{α,k}`.
    pub fn reconstruct(&self, t: &ProbabilityTable) -> Result<HermitianOperator> {
        let shape: Vec<usize> = self.blocks.iter().map(Vec::len).collect();
        let got: Vec<usize> = t.blocks().iter().map(Vec::len).collect();
        if shape != got {
            return Err(Error::InvalidArgument(alloc::format!(
                "probability shape {got:?} does not match frame shape {shape:?}"
            )));
        }
        Ok(HermitianOperator::linear_combination(
            t.blocks()
                .iter()
                .flatten()
                .copied()
                .zip(self.blocks.iter().flatten()),
        ))
    }
}

/// Fails with the rank evidence when `g` is not informationally complete.
pub fn dual_frame(g: &GeneralizedSymmetricMeasurement) -> Result<DualFrame> {
    let ic = is_informationally_complete(g);
    if !ic.informationally_complete() {
        return Err(ic.to_error());
    }
    let d = g.dim() as f64;
    let n = g.n_povms() as f64;
    let p = g.params();
    let id = HermitianOperator::identity(g.dim());
    let mut a = Vec::with_capacity(g.n_povms());
    let mut b = Vec::with_capacity(g.n_povms());
    let mut blocks = Vec::with_capacity(g.n_povms());
    for (alpha, block) in g.blocks().iter().enumerate() {
        let diff = p.x[alpha] - p.y[alpha];
        let (aa, bb) = (1.0 / diff, p.w[alpha] / (d * diff) - 1.0 / (d * n));
        blocks.push(
            block
                .iter()
                .map(|e| HermitianOperator::linear_combination([(aa, e), (-bb, &id)]))
                .collect(),
        );
        a.push(aa);
        b.push(bb);
    }
    Ok(DualFrame { blocks, a, b })
}
