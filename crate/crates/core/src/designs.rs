//! Conical 2-design certification.
//!
//! A set of positive operators is a conical 2-design when
//! `S = Σ E ⊗ E = κ₊ I⊗I + κ₋ F` with `κ₊ ≥ κ₋ > 0`. Equivalently the channel
//! sum `Φ = Σ_α Φ_α`, `Φ_α[X] = Σ_k E_{α,k} Tr(X E_{α,k})`, satisfies
//! `Φ[X] = κ₋ X + κ₊ I Tr X`. Both forms are checked and cross-validated
//! through the Choi matrix of `Φ ∘ T`.
//!
//! `κ±` are obtained by projecting `S` onto `span{I⊗I, F}` under the
//! Hilbert–Schmidt inner product. The two spanning operators are not
//! orthogonal, so this solves
//!
//! ```text
//! [ d²  d  ] [κ₊]   [ Tr S   ]
//! [ d   d² ] [κ₋] = [ Tr S F ]
//! ```

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::algebra::{flip_operator, max_entangled_projector, ComplexMatrix, HermitianOperator};
use crate::basis::gell_mann_basis;
use crate::error::{Error, Result};
use crate::measurement::{classify, ClassKind, GeneralizedSymmetricMeasurement};

/// Residual and consistency tolerance for certification.
pub const DESIGN_TOLERANCE: f64 = 1e-8;

fn channel_on_matrix(block: &[HermitianOperator], x: &ComplexMatrix, weight: f64) -> ComplexMatrix {
    let d = x.rows();
    let mut out = ComplexMatrix::zeros(d, d);
    for e in block {
        out.add_scaled(x.trace_of_product(e.matrix()) * weight, e.matrix());
    }
    out
}

fn block_weight(g: &GeneralizedSymmetricMeasurement, alpha: usize, weighted: bool) -> f64 {
    if weighted {
        1.0 / g.params().w[alpha]
    } else {
        1.0
    }
}

/// `Φ_α[X] = Σ_k E_{α,k} Tr(X E_{α,k})`, divided by `w_α` when `weighted`.
pub fn apply_measurement_channel(
    g: &GeneralizedSymmetricMeasurement,
    alpha: usize,
    x: &HermitianOperator,
    weighted: bool,
) -> Result<HermitianOperator> {
    let block = g.block(alpha)?;
    if x.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: x.dim(),
        });
    }
    let out = channel_on_matrix(block, x.matrix(), block_weight(g, alpha, weighted));
    HermitianOperator::new(out)
}

/// `Σ_α Φ_α[X]`.
pub fn apply_channel_sum(
    g: &GeneralizedSymmetricMeasurement,
    x: &HermitianOperator,
    weighted: bool,
) -> Result<HermitianOperator> {
    let terms = (0..g.n_povms())
        .map(|alpha| apply_measurement_channel(g, alpha, x, weighted))
        .collect::<Result<Vec<_>>>()?;
    Ok(HermitianOperator::linear_combination(
        terms.iter().map(|t| (1.0, t)),
    ))
}

/// The maximally depolarizing channel `Φ₀[X] = I Tr(X)/d`.
pub fn depolarizing_channel(x: &HermitianOperator) -> HermitianOperator {
    let d = x.dim();
    HermitianOperator::identity(d).scale(x.trace() / d as f64)
}

/// `Σ_{α,k} c_α E_{α,k} ⊗ E_{α,k}` with `c_α = 1` or `1/w_α`.
pub fn tensor_square_sum(g: &GeneralizedSymmetricMeasurement, weighted: bool) -> ComplexMatrix {
    let d = g.dim();
    let mut s = ComplexMatrix::zeros(d * d, d * d);
    for (alpha, block) in g.blocks().iter().enumerate() {
        let c = Complex64::new(block_weight(g, alpha, weighted), 0.0);
        for e in block {
            s.add_scaled(c, &e.matrix().kron(e.matrix()));
        }
    }
    s
}

/// Choi matrix of `Φ ∘ T`, built as `(id ⊗ Φ∘T)[d P₊]`.
pub fn choi_of_channel_sum(g: &GeneralizedSymmetricMeasurement) -> ComplexMatrix {
    let d = g.dim();
    let p = max_entangled_projector(d).expect("d >= 2");
    let scaled = p.matrix().scale(d as f64);
    let mut out = ComplexMatrix::zeros(d * d, d * d);
    for m in 0..d {
        for n in 0..d {
            // block (m, n) of d P₊ on the second factor, transposed, through Φ
            let input =
                ComplexMatrix::from_fn(d, d, |i, j| scaled[(m * d + i, n * d + j)]).transpose();
            let mut image = ComplexMatrix::zeros(d, d);
            for block in g.blocks() {
                image.add_scaled(
                    Complex64::new(1.0, 0.0),
                    &channel_on_matrix(block, &input, 1.0),
                );
            }
            for i in 0..d {
                for j in 0..d {
                    out[(m * d + i, n * d + j)] = image[(i, j)];
                }
            }
        }
    }
    out
}

/// Least-squares `(κ₊, κ₋)` and max-entry residual of `s ≈ κ₊ I + κ₋ F`.
pub fn fit_identity_flip(s: &ComplexMatrix, d: usize) -> (f64, f64, f64) {
    let f = flip_operator(d).expect("d >= 2");
    let df = d as f64;
    let a = s.trace().re;
    let b = s.trace_of_product(f.matrix()).re;
    let det = df * df * (df * df - 1.0);
    let kp = (df * df * a - df * b) / det;
    let km = (df * df * b - df * a) / det;
    let mut model = ComplexMatrix::identity(d * d).scale(kp);
    model.add_scaled(Complex64::new(km, 0.0), f.matrix());
    (kp, km, s.max_abs_diff(&model))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DesignKind {
    Conical2Design,
    WeightedIdentityOnly,
    None,
}

impl DesignKind {
    pub fn name(self) -> &'static str {
        match self {
            DesignKind::Conical2Design => "CONICAL_2_DESIGN",
            DesignKind::WeightedIdentityOnly => "WEIGHTED_IDENTITY_ONLY",
            DesignKind::None => "NONE",
        }
    }
}

/// Outcome of [`certify_design`].
#[derive(Clone, Debug, PartialEq)]
pub struct DesignCertificate {
    pub kind: DesignKind,
    /// Operator-level fit of `Σ E⊗E`.
    pub kappa_plus: f64,
    pub kappa_minus: f64,
    /// Map-level fit of `Σ Φ_α`.
    pub kappa_plus_map: f64,
    pub kappa_minus_map: f64,
    /// Fit of `Σ (1/w_α) E⊗E`.
    pub weighted_kappa_plus: f64,
    pub weighted_kappa_minus: f64,
    pub r: Option<f64>,
    pub s: Option<f64>,
    pub mu: f64,
    pub residual_operator: f64,
    pub residual_map: f64,
    pub residual_weighted: f64,
    /// `max |C(Φ∘T) − Σ E⊗E|`.
    pub choi_deviation: f64,
    /// `|Σ_α M_α w_α² − (κ₊ d² + κ₋ d)|`.
    pub trace_identity_deviation: f64,
    /// Both certification paths agree within [`DESIGN_TOLERANCE`].
    pub consistent: bool,
}

impl DesignCertificate {
    /// `(μ − r/d, r)` for r-class inputs.
    pub fn expected_kappas(&self, d: usize) -> Option<(f64, f64)> {
        self.r.map(|r| (self.mu - r / d as f64, r))
    }

    /// `((N − s)/d, s)` for s-class inputs.
    pub fn expected_weighted_kappas(&self, d: usize, n: usize) -> Option<(f64, f64)> {
        self.s.map(|s| ((n as f64 - s) / d as f64, s))
    }
}

/// Runs the operator-level, map-level, weighted and Choi checks.
pub fn certify_design(g: &GeneralizedSymmetricMeasurement) -> DesignCertificate {
    let d = g.dim();
    let df = d as f64;
    let tags = classify(g);

    let s = tensor_square_sum(g, false);
    let (kp, km, residual_operator) = fit_identity_flip(&s, d);
    let (wkp, wkm, residual_weighted) = fit_identity_flip(&tensor_square_sum(g, true), d);

    // Φ[G] = κ₋ G on traceless G, and Tr Φ[I] = κ₊ d² + κ₋ d.
    let basis = gell_mann_basis(d).expect("d >= 2");
    let images: Vec<HermitianOperator> = basis
        .iter()
        .map(|b| apply_channel_sum(g, b, false).expect("dimensions match"))
        .collect();
    let id = HermitianOperator::identity(d);
    let image_id = apply_channel_sum(g, &id, false).expect("dimensions match");
    let km_map = basis
        .iter()
        .zip(&images)
        .map(|(b, im)| im.hs_inner(b).expect("dimensions match"))
        .sum::<f64>()
        / basis.len() as f64;
    let kp_map = (image_id.trace() - km_map * df) / (df * df);
    let mut residual_map = image_id
        .matrix()
        .max_abs_diff(&ComplexMatrix::identity(d).scale(km_map + kp_map * df));
    for (b, im) in basis.iter().zip(&images) {
        residual_map = residual_map.max(im.matrix().max_abs_diff(&b.matrix().scale(km_map)));
    }

    let choi_deviation = choi_of_channel_sum(g).max_abs_diff(&s);
    let trace_s: f64 = g
        .block_sizes()
        .iter()
        .zip(&g.params().w)
        .map(|(&m, w)| m as f64 * w * w)
        .sum();
    let trace_identity_deviation = (trace_s - (kp * df * df + km * df)).abs();
    let consistent = (kp - kp_map).abs() <= DESIGN_TOLERANCE
        && (km - km_map).abs() <= DESIGN_TOLERANCE
        && choi_deviation <= DESIGN_TOLERANCE;

    let kind = if residual_operator <= DESIGN_TOLERANCE
        && residual_map <= DESIGN_TOLERANCE
        && km > DESIGN_TOLERANCE
        && kp >= km - DESIGN_TOLERANCE
    {
        DesignKind::Conical2Design
    } else if residual_weighted <= DESIGN_TOLERANCE && wkm > DESIGN_TOLERANCE {
        DesignKind::WeightedIdentityOnly
    } else {
        DesignKind::None
    };

    DesignCertificate {
        kind,
        kappa_plus: kp,
        kappa_minus: km,
        kappa_plus_map: kp_map,
        kappa_minus_map: km_map,
        weighted_kappa_plus: wkp,
        weighted_kappa_minus: wkm,
        r: tags.contains(ClassKind::RClass).then_some(tags.r).flatten(),
        s: tags.contains(ClassKind::SClass).then_some(tags.s).flatten(),
        mu: g.mu(),
        residual_operator,
        residual_map,
        residual_weighted,
        choi_deviation,
        trace_identity_deviation,
        consistent,
    }
}
