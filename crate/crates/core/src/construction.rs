//! Measurement blocks from a basis partition.
//!
//! For block `α` with `M = M_α` and `G_α = Σ_k G_{α,k}` there are two
//! families of traceless operators,
//!
//! ```text
//! unprimed:  H_k  = G_α − √M(1+√M) G_k   (k < M),   H_M  = (1+√M) G_α
//! primed:    H'_k = G_α + √M(1−√M) G_k   (k < M),   H'_M = (1−√M) G_α
//! ```
//!
//! both summing to zero, and `E_k = I/M + t H_k`. With the sign of `t` this
//! gives four variants per block. The strength `t` is related to the purity
//! `x = Tr E_k²` through `t² = (M²x − d) / (M²(M−1)(1±√M)²)`, so the sign of
//! `t` is not recoverable from `x` and must always be supplied.

use alloc::vec::Vec;

use crate::algebra::HermitianOperator;
use crate::basis::{check_orthonormal, BasisPartition};
use crate::error::{Error, Result};

/// Eigenvalues down to this are accepted as nonnegative.
pub const POSITIVITY_TOLERANCE: f64 = 1e-10;

/// Entrywise tolerance when matching elements of two POVMs.
pub const MATCH_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn of(t: f64) -> Self {
        if t < 0.0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

/// One of the four constructions: `H` or `H'` with `t > 0` or `t < 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VariantTag {
    pub primed: bool,
    pub sign: Sign,
}

impl VariantTag {
    pub const ALL: [VariantTag; 4] = [
        VariantTag::new(false, Sign::Plus),
        VariantTag::new(false, Sign::Minus),
        VariantTag::new(true, Sign::Plus),
        VariantTag::new(true, Sign::Minus),
    ];

    pub const fn new(primed: bool, sign: Sign) -> Self {
        Self { primed, sign }
    }
}

/// `1 + √M` for the unprimed family, `1 − √M` for the primed one.
fn family_factor(m: usize, primed: bool) -> f64 {
    let sq = libm::sqrt(m as f64);
    if primed {
        1.0 - sq
    } else {
        1.0 + sq
    }
}

/// The `M_α` operators `H_{α,k}` (or `H'_{α,k}`) of block `α`.
pub fn build_h_operators(
    p: &BasisPartition,
    alpha: usize,
    primed: bool,
) -> Result<Vec<HermitianOperator>> {
    let block = p.block(alpha)?;
    let m = block.len() + 1;
    let sq = libm::sqrt(m as f64);
    let g_sum = p.block_sum(alpha)?;
    // unprimed: −√M(1+√M); primed: +√M(1−√M)
    let coeff = if primed {
        sq * (1.0 - sq)
    } else {
        -sq * (1.0 + sq)
    };
    let mut out: Vec<HermitianOperator> = block
        .iter()
        .map(|g| HermitianOperator::linear_combination([(1.0, &g_sum), (coeff, g)]))
        .collect();
    out.push(g_sum.scale(family_factor(m, primed)));
    Ok(out)
}

/// Closed interval of admissible construction strengths.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TRange {
    pub lo: f64,
    pub hi: f64,
}

impl TRange {
    pub fn contains(&self, t: f64) -> bool {
        t >= self.lo && t <= self.hi
    }

    /// Largest `t > 0` for which both `±t` are admissible.
    pub fn t_star(&self) -> f64 {
        self.hi.min(-self.lo)
    }

    /// Extreme admissible value in the direction of `sign`.
    pub fn extreme(&self, sign: Sign) -> f64 {
        match sign {
            Sign::Plus => self.hi,
            Sign::Minus => self.lo,
        }
    }
}

/// `[−1/(M λ_max), 1/(M |λ_min|)]` over the spectra of all operators in
/// `h_ops`; `E = I/M + tH` is positive exactly on this interval.
pub fn t_range(h_ops: &[HermitianOperator], m: usize) -> Result<TRange> {
    if h_ops.is_empty() {
        return Err(Error::DegenerateBlock);
    }
    let (mut lmin, mut lmax) = (f64::INFINITY, f64::NEG_INFINITY);
    for h in h_ops {
        let e = h.eigh();
        lmin = lmin.min(e.min());
        lmax = lmax.max(e.max());
    }
    let scale = lmax.abs().max(lmin.abs());
    if !(scale > 1e-14) || lmax <= 0.0 || lmin >= 0.0 {
        return Err(Error::DegenerateBlock);
    }
    let m = m as f64;
    Ok(TRange {
        lo: -1.0 / (m * lmax),
        hi: 1.0 / (m * lmin.abs()),
    })
}

/// Admissible strengths for block `α` of the given family.
pub fn block_t_range(p: &BasisPartition, alpha: usize, primed: bool) -> Result<TRange> {
    let h = build_h_operators(p, alpha, primed)?;
    t_range(&h, h.len())
}

/// Purity `x = Tr E_k²` produced by strength `t`.
pub fn x_from_t(t: f64, m: usize, d: usize, primed: bool) -> f64 {
    let f = family_factor(m, primed);
    let mf = m as f64;
    (d as f64 + t * t * mf * mf * (mf - 1.0) * f * f) / (mf * mf)
}

/// Signed strength producing purity `x` for the given variant.
pub fn t_from_x(x: f64, m: usize, d: usize, variant: VariantTag) -> Result<f64> {
    let mf = m as f64;
    let df = d as f64;
    let lo = df / (mf * mf);
    let hi = (df * df / (mf * mf)).min(df / mf);
    if !(x > lo) || x > hi * (1.0 + 1e-12) {
        return Err(Error::InfeasibleX { x, lo, hi });
    }
    let f = family_factor(m, variant.primed);
    let t2 = (mf * mf * x - df) / (mf * mf * (mf - 1.0) * f * f);
    Ok(variant.sign.value() * libm::sqrt(t2))
}

/// Signed strength giving `x_α − y_α = r`; uses `x − y = t² M (1±√M)²`.
pub fn t_for_r(r: f64, m: usize, variant: VariantTag) -> f64 {
    let f = family_factor(m, variant.primed);
    variant.sign.value() * libm::sqrt(r / (m as f64 * f * f))
}

/// `x_α − y_α = t² M (1±√M)²` produced by strength `t`.
pub fn r_for_t(t: f64, m: usize, primed: bool) -> f64 {
    let f = family_factor(m, primed);
    t * t * m as f64 * f * f
}

/// Largest common `r = x_α − y_α` reachable with one variant per block.
pub fn max_common_r(p: &BasisPartition, variants: &[VariantTag]) -> Result<f64> {
    if variants.len() != p.n_blocks() {
        return Err(Error::DimensionMismatch {
            expected: p.n_blocks(),
            found: variants.len(),
        });
    }
    let mut r = f64::INFINITY;
    for (alpha, v) in variants.iter().enumerate() {
        let range = block_t_range(p, alpha, v.primed)?;
        r = r.min(r_for_t(
            range.extreme(v.sign),
            p.block_sizes()[alpha],
            v.primed,
        ));
    }
    Ok(r)
}

/// Variant and strength giving block `α` its largest admissible purity
/// `min{d²/M², d/M}`, i.e. rank-deficient extremal elements.
pub fn projective_choice(p: &BasisPartition, alpha: usize) -> Result<(VariantTag, f64)> {
    let m = p
        .block_sizes()
        .get(alpha)
        .copied()
        .ok_or(Error::BlockIndex {
            alpha,
            count: p.n_blocks(),
        })?;
    let d = p.dim();
    let (df, mf) = (d as f64, m as f64);
    let target = (df * df / (mf * mf)).min(df / mf);
    let mut best = (f64::NEG_INFINITY, VariantTag::ALL[0], 0.0);
    for v in VariantTag::ALL {
        let t = block_t_range(p, alpha, v.primed)?.extreme(v.sign);
        let x = x_from_t(t, m, d, v.primed);
        if x > best.0 {
            best = (x, v, t);
        }
    }
    if (best.0 - target).abs() > 1e-9 {
        return Err(Error::InfeasibleX {
            x: target,
            lo: df / (mf * mf),
            hi: best.0,
        });
    }
    Ok((best.1, best.2))
}

/// Per-block construction choice with its derived quantities.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConstructionParams {
    pub variant: VariantTag,
    pub t: f64,
    pub x: f64,
    pub t_range: TRange,
}

impl ConstructionParams {
    pub fn new(p: &BasisPartition, alpha: usize, variant: VariantTag, t: f64) -> Result<Self> {
        check_strength(variant, t)?;
        let t_range = block_t_range(p, alpha, variant.primed)?;
        if !t_range.contains(t) {
            return Err(Error::OutOfRange {
                t,
                lo: t_range.lo,
                hi: t_range.hi,
            });
        }
        let m = p.block_sizes()[alpha];
        Ok(Self {
            variant,
            t,
            x: x_from_t(t, m, p.dim(), variant.primed),
            t_range,
        })
    }
}

fn check_strength(variant: VariantTag, t: f64) -> Result<()> {
    if t == 0.0 || !t.is_finite() {
        return Err(Error::ZeroStrength);
    }
    if Sign::of(t) != variant.sign {
        return Err(Error::SignMismatch { t });
    }
    Ok(())
}

/// `E_{α,k} = I/M_α + t H_{α,k}` (or the primed family).
///
/// Fails with [`Error::Positivity`] naming the element with the most negative
/// eigenvalue when `t` lies outside the admissible range.
pub fn build_measurement_block(
    p: &BasisPartition,
    alpha: usize,
    variant: VariantTag,
    t: f64,
) -> Result<Vec<HermitianOperator>> {
    check_strength(variant, t)?;
    let h = build_h_operators(p, alpha, variant.primed)?;
    let m = h.len();
    let id = HermitianOperator::identity(p.dim());
    let ops: Vec<HermitianOperator> = h
        .iter()
        .map(|hk| HermitianOperator::linear_combination([(1.0 / m as f64, &id), (t, hk)]))
        .collect();
    let worst = ops
        .iter()
        .enumerate()
        .map(|(k, e)| (k, e.eigh().min()))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("nonempty block");
    if worst.1 < -POSITIVITY_TOLERANCE {
        return Err(Error::Positivity {
            alpha,
            k: worst.0,
            eigenvalue: worst.1,
        });
    }
    Ok(ops)
}

/// Builds every block of a measurement from per-block `(variant, t)`.
pub fn build_measurement(
    p: &BasisPartition,
    choices: &[(VariantTag, f64)],
) -> Result<Vec<Vec<HermitianOperator>>> {
    if choices.len() != p.n_blocks() {
        return Err(Error::DimensionMismatch {
            expected: p.n_blocks(),
            found: choices.len(),
        });
    }
    choices
        .iter()
        .enumerate()
        .map(|(alpha, &(v, t))| build_measurement_block(p, alpha, v, t))
        .collect()
}

/// Inverts the construction: recovers `G_{α,1..M−1}` from a block built with
/// `(variant, t)`.
///
/// ```text
/// unprimed:  G_k = [I + √M E_M − √M(1+√M) E_k] / (t M (1+√M)²)
/// primed:    G_k = [I − √M E'_M + √M(1−√M) E'_k] / (t' M (1−√M)²)
/// ```
pub fn recover_basis_block(
    e_ops: &[HermitianOperator],
    t: f64,
    variant: VariantTag,
) -> Result<Vec<HermitianOperator>> {
    check_strength(variant, t)?;
    let m = e_ops.len();
    if m < 2 {
        return Err(Error::BlockTooSmall { alpha: 0, size: m });
    }
    let d = e_ops[0].dim();
    if let Some(bad) = e_ops.iter().find(|e| e.dim() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: bad.dim(),
        });
    }
    let sq = libm::sqrt(m as f64);
    let f = family_factor(m, variant.primed);
    let norm = 1.0 / (t * m as f64 * f * f);
    let (last_coeff, k_coeff) = if variant.primed {
        (-sq, sq * (1.0 - sq))
    } else {
        (sq, -sq * (1.0 + sq))
    };
    let id = HermitianOperator::identity(d);
    let last = &e_ops[m - 1];
    let recovered: Vec<HermitianOperator> = e_ops[..m - 1]
        .iter()
        .map(|ek| {
            HermitianOperator::linear_combination([
                (norm, &id),
                (norm * last_coeff, last),
                (norm * k_coeff, ek),
            ])
        })
        .collect();
    match check_orthonormal(&recovered) {
        Ok(()) => Ok(recovered),
        Err(Error::NotOrthonormal { deviation, .. }) => Err(Error::RecoveryFailed(deviation)),
        Err(Error::NotTraceless { trace, .. }) => Err(Error::RecoveryFailed(trace.abs())),
        Err(e) => Err(e),
    }
}

/// Largest purity reachable by both the unprimed `t > 0` and the primed
/// `t' < 0` construction of block `α`.
pub fn max_common_x(p: &BasisPartition, alpha: usize) -> Result<f64> {
    let m = p
        .block_sizes()
        .get(alpha)
        .copied()
        .ok_or(Error::BlockIndex {
            alpha,
            count: p.n_blocks(),
        })?;
    let d = p.dim();
    let plain = block_t_range(p, alpha, false)?;
    let primed = block_t_range(p, alpha, true)?;
    Ok(x_from_t(plain.hi, m, d, false).min(x_from_t(primed.lo, m, d, true)))
}

/// Outcome of comparing the unprimed (`t > 0`) and primed (`t' < 0`) POVMs
/// of one block at equal purity.
#[derive(Clone, Debug)]
pub struct CoincidenceReport {
    pub x: f64,
    pub t: f64,
    pub t_primed: f64,
    pub unprimed: Vec<HermitianOperator>,
    pub primed: Vec<HermitianOperator>,
    /// `pairing[k] = ℓ` when `E_k = E'_ℓ`; present only for equal sets.
    pub pairing: Option<Vec<usize>>,
    /// Largest entrywise distance from each `E_k` to its nearest `E'_ℓ`.
    pub max_mismatch: f64,
}

impl CoincidenceReport {
    pub fn equal_sets(&self) -> bool {
        self.pairing.is_some()
    }
}

/// Builds `E` (unprimed, `t > 0`) and `E'` (primed, `t' < 0`) at purity `x`
/// and reports whether they coincide as sets.
pub fn variant_coincidence(p: &BasisPartition, alpha: usize, x: f64) -> Result<CoincidenceReport> {
    let m = p
        .block_sizes()
        .get(alpha)
        .copied()
        .ok_or(Error::BlockIndex {
            alpha,
            count: p.n_blocks(),
        })?;
    let d = p.dim();
    let plain_variant = VariantTag::new(false, Sign::Plus);
    let primed_variant = VariantTag::new(true, Sign::Minus);
    let t = t_from_x(x, m, d, plain_variant)?;
    let t_primed = t_from_x(x, m, d, primed_variant)?;
    let unprimed = build_measurement_block(p, alpha, plain_variant, t)?;
    let primed = build_measurement_block(p, alpha, primed_variant, t_primed)?;

    let mut pairing = Vec::with_capacity(m);
    let mut max_mismatch: f64 = 0.0;
    for e in &unprimed {
        let (best, dist) = primed
            .iter()
            .enumerate()
            .map(|(l, ep)| (l, e.matrix().max_abs_diff(ep.matrix())))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("nonempty block");
        max_mismatch = max_mismatch.max(dist);
        pairing.push(best);
    }
    let mut seen = alloc::vec![false; m];
    let bijective = pairing
        .iter()
        .all(|&l| !core::mem::replace(&mut seen[l], true));
    let pairing = (bijective && max_mismatch <= MATCH_TOLERANCE).then_some(pairing);
    Ok(CoincidenceReport {
        x,
        t,
        t_primed,
        unprimed,
        primed,
        pairing,
        max_mismatch,
    })
}
