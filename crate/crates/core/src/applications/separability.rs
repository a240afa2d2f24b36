use alloc::vec::Vec;

use super::probability::c_max;
use crate::algebra::{trace_norm, DensityMatrix, RealMatrix};
use crate::error::{Error, Result};
use crate::measurement::GeneralizedSymmetricMeasurement;

/// Joint probabilities `𝒫_{(α,k),(β,ℓ)} = Tr[ρ (E^A_{α,k} ⊗ E^B_{β,ℓ})]`,
/// rows and columns flattened in block order.
#[derive(Clone, Debug, PartialEq)]
pub struct CorrelationMatrix {
    pub matrix: RealMatrix,
    pub block_sizes_a: Vec<usize>,
    pub block_sizes_b: Vec<usize>,
}

impl CorrelationMatrix {
    pub fn trace(&self) -> f64 {
        self.matrix.trace()
    }

    pub fn trace_norm(&self) -> f64 {
        trace_norm(&self.matrix.to_complex())
    }

    pub fn is_square(&self) -> bool {
        self.matrix.rows() == self.matrix.cols()
    }

    /// Sum of all entries; `N_A N_B` for a state.
    pub fn total(&self) -> f64 {
        self.matrix.as_slice().iter().sum()
    }
}

pub fn correlation_matrix(
    ga: &GeneralizedSymmetricMeasurement,
    gb: &GeneralizedSymmetricMeasurement,
    rho: &DensityMatrix,
) -> Result<CorrelationMatrix> {
    let (da, db) = (ga.dim(), gb.dim());
    if rho.dim() != da * db {
        return Err(Error::DimensionMismatch {
            expected: da * db,
            found: rho.dim(),
        });
    }
    let a: Vec<_> = ga.operators().collect();
    let b: Vec<_> = gb.operators().collect();
    let r = rho.matrix();
    // Tr[ρ (A⊗B)] = Σ ρ[(i,k),(j,l)] A[j,i] B[l,k]
    let mut data = Vec::with_capacity(a.len() * b.len());
    for ea in &a {
        let am = ea.matrix();
        for eb in &b {
            let bm = eb.matrix();
            let mut acc = num_complex::Complex64::new(0.0, 0.0);
            for i in 0..da {
                for j in 0..da {
                    let aji = am[(j, i)];
                    if aji.norm_sqr() == 0.0 {
                        continue;
                    }
                    for k in 0..db {
                        for l in 0..db {
                            acc += r[(i * db + k, j * db + l)] * aji * bm[(l, k)];
                        }
                    }
                }
            }
            data.push(acc.re);
        }
    }
    Ok(CorrelationMatrix {
        matrix: RealMatrix::new(a.len(), b.len(), data)?,
        block_sizes_a: ga.block_sizes().to_vec(),
        block_sizes_b: gb.block_sizes().to_vec(),
    })
}

/// A quantity compared against its separable-state bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundCheck {
    pub value: f64,
    pub bound: f64,
}

impl BoundCheck {
    /// Positive when the bound is exceeded.
    pub fn margin(&self) -> f64 {
        self.value - self.bound
    }

    pub fn violated(&self, tol: f64) -> bool {
        self.margin() > tol
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Entangled,
    Inconclusive,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Entangled => "ENTANGLED",
            Verdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SeparabilityReport {
    pub c_max_a: f64,
    pub c_max_b: f64,
    /// `Tr 𝒫 ≤ (C_A + C_B)/2`; only when `d_A = d_B` and `𝒫` is square.
    pub trace: Option<BoundCheck>,
    /// `‖𝒫‖_Tr ≤ √(C_A C_B)`.
    pub trace_norm: BoundCheck,
    pub tolerance: f64,
    pub verdict: Verdict,
}

/// Screens `ρ` with both correlation-matrix criteria. Separable states never
/// violate them, so the verdict is either entangled or inconclusive.
pub fn separability_test(
    ga: &GeneralizedSymmetricMeasurement,
    gb: &GeneralizedSymmetricMeasurement,
    rho: &DensityMatrix,
    tol: f64,
) -> Result<SeparabilityReport> {
    let (ca, cb) = (c_max(ga)?, c_max(gb)?);
    let p = correlation_matrix(ga, gb, rho)?;
    let trace = (ga.dim() == gb.dim() && p.is_square()).then(|| BoundCheck {
        value: p.trace(),
        bound: 0.5 * (ca + cb),
    });
    let trace_norm = BoundCheck {
        value: p.trace_norm(),
        bound: libm::sqrt(ca * cb),
    };
    let entangled = trace_norm.violated(tol) || trace.is_some_and(|c| c.violated(tol));
    Ok(SeparabilityReport {
        c_max_a: ca,
        c_max_b: cb,
        trace,
        trace_norm,
        tolerance: tol,
        verdict: if entangled {
            Verdict::Entangled
        } else {
            Verdict::Inconclusive
        },
    })
}
