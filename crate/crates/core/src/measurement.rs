//! Verification, informational completeness and symmetry classes of
//! generalized symmetric measurements.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{hs_inner, singular_values, ComplexMatrix, HermitianOperator};
use crate::basis::BasisPartition;
use crate::construction::{build_measurement, VariantTag};
use crate::error::{Error, Result};
use num_complex::Complex64;

/// Default tolerance for trace conditions and class fits.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Most negative eigenvalue accepted for a POVM element.
pub const POSITIVITY_TOLERANCE: f64 = 1e-10;

/// Relative singular-value cutoff for the numerical rank.
pub const RANK_TOLERANCE: f64 = 1e-8;

/// `(w_α, x_α, y_α, z_αβ)` of a generalized symmetric measurement.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetryParameters {
    pub w: Vec<f64>,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    /// `z[α][β]`; the diagonal holds `d/M_α²`.
    pub z: Vec<Vec<f64>>,
}

impl SymmetryParameters {
    /// Parameters implied by `d`, the sizes `M_α` and the purities `x_α`.
    pub fn from_purities(d: usize, block_sizes: &[usize], x: &[f64]) -> Self {
        let df = d as f64;
        let w = block_sizes.iter().map(|&m| df / m as f64).collect();
        let y = block_sizes
            .iter()
            .zip(x)
            .map(|(&m, &x)| {
                let m = m as f64;
                (df - m * x) / (m * (m - 1.0))
            })
            .collect();
        let z = block_sizes
            .iter()
            .map(|&a| block_sizes.iter().map(|&b| df / (a * b) as f64).collect())
            .collect();
        Self {
            w,
            x: x.to_vec(),
            y,
            z,
        }
    }

    /// `x_α − y_α` per block.
    pub fn differences(&self) -> Vec<f64> {
        self.x.iter().zip(&self.y).map(|(x, y)| x - y).collect()
    }
}

/// Admissible purity interval `(d/M², min{d²/M², d/M}]`.
pub fn purity_bounds(d: usize, m: usize) -> (f64, f64) {
    let (df, mf) = (d as f64, m as f64);
    (df / (mf * mf), (df * df / (mf * mf)).min(df / mf))
}

/// A verified collection of `N` POVMs satisfying the symmetry conditions.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralizedSymmetricMeasurement {
    dim: usize,
    block_sizes: Vec<usize>,
    blocks: Vec<Vec<HermitianOperator>>,
    params: SymmetryParameters,
    max_deviation: f64,
}

impl GeneralizedSymmetricMeasurement {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n_povms(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    pub fn blocks(&self) -> &[Vec<HermitianOperator>] {
        &self.blocks
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

    pub fn params(&self) -> &SymmetryParameters {
        &self.params
    }

    /// Largest deviation of any measured trace from its parameter.
    pub fn max_deviation(&self) -> f64 {
        self.max_deviation
    }

    /// `Σ_α M_α`.
    pub fn total_elements(&self) -> usize {
        self.block_sizes.iter().sum()
    }

    /// `μ = Σ_α 1/M_α`.
    pub fn mu(&self) -> f64 {
        self.block_sizes.iter().map(|&m| 1.0 / m as f64).sum()
    }

    /// All elements in block order.
    pub fn operators(&self) -> impl Iterator<Item = &HermitianOperator> {
        self.blocks.iter().flatten()
    }

    pub fn into_blocks(self) -> Vec<Vec<HermitianOperator>> {
        self.blocks
    }
}

/// A single broken condition found by [`verify_gsm`].
#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    NoBlocks,
    BlockTooSmall {
        alpha: usize,
        size: usize,
    },
    Dimension {
        alpha: usize,
        k: usize,
        found: usize,
    },
    /// `‖Σ_k E_{α,k} − I‖_max`.
    Normalization {
        alpha: usize,
        deviation: f64,
    },
    Positivity {
        alpha: usize,
        k: usize,
        eigenvalue: f64,
    },
    Trace {
        alpha: usize,
        k: usize,
        value: f64,
        expected: f64,
    },
    Purity {
        alpha: usize,
        k: usize,
        value: f64,
        expected: f64,
    },
    Overlap {
        alpha: usize,
        k: usize,
        l: usize,
        value: f64,
        expected: f64,
    },
    Cross {
        alpha: usize,
        k: usize,
        beta: usize,
        l: usize,
        value: f64,
        expected: f64,
    },
    /// A fitted parameter disagreeing with its closed form.
    Parameter {
        name: &'static str,
        alpha: usize,
        beta: usize,
        value: f64,
        expected: f64,
    },
    PurityRange {
        alpha: usize,
        x: f64,
        lo: f64,
        hi: f64,
    },
}

impl Violation {
    /// Magnitude of the violation where one is defined.
    pub fn magnitude(&self) -> f64 {
        match *self {
            Violation::Normalization { deviation, .. } => deviation,
            Violation::Positivity { eigenvalue, .. } => -eigenvalue,
            Violation::Trace {
                value, expected, ..
            }
            | Violation::Purity {
                value, expected, ..
            }
            | Violation::Overlap {
                value, expected, ..
            }
            | Violation::Cross {
                value, expected, ..
            }
            | Violation::Parameter {
                value, expected, ..
            } => (value - expected).abs(),
            Violation::PurityRange { x, lo, hi, .. } => {
                if x <= lo {
                    lo - x
                } else {
                    x - hi
                }
            }
            _ => f64::INFINITY,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::NoBlocks => write!(f, "no POVMs given"),
            Violation::BlockTooSmall { alpha, size } => {
                write!(f, "POVM {alpha} has {size} element(s), need at least 2")
            }
            Violation::Dimension { alpha, k, found } => {
                write!(f, "E[{alpha}][{k}] has dimension {found}")
            }
            Violation::Normalization { alpha, deviation } => {
                write!(
                    f,
                    "POVM {alpha} does not sum to identity (deviation {deviation:e})"
                )
            }
            Violation::Positivity {
                alpha,
                k,
                eigenvalue,
            } => {
                write!(f, "E[{alpha}][{k}] has eigenvalue {eigenvalue:e}")
            }
            Violation::Trace {
                alpha,
                k,
                value,
                expected,
            } => {
                write!(f, "Tr E[{alpha}][{k}] = {value}, expected w = {expected}")
            }
            Violation::Purity {
                alpha,
                k,
                value,
                expected,
            } => {
                write!(f, "Tr E[{alpha}][{k}]^2 = {value}, expected x = {expected}")
            }
            Violation::Overlap {
                alpha,
                k,
                l,
                value,
                expected,
            } => write!(
                f,
                "Tr E[{alpha}][{k}] E[{alpha}][{l}] = {value}, expected y = {expected}"
            ),
            Violation::Cross {
                alpha,
                k,
                beta,
                l,
                value,
                expected,
            } => write!(
                f,
                "Tr E[{alpha}][{k}] E[{beta}][{l}] = {value}, expected z = {expected}"
            ),
            Violation::Parameter {
                name,
                alpha,
                beta,
                value,
                expected,
            } => {
                write!(
                    f,
                    "{name}[{alpha}][{beta}] = {value}, closed form {expected}"
                )
            }
            Violation::PurityRange { alpha, x, lo, hi } => {
                write!(f, "x[{alpha}] = {x} outside ({lo}, {hi}]")
            }
        }
    }
}

/// Every condition a candidate failed, with the parameters fitted so far.
#[derive(Clone, Debug, PartialEq)]
pub struct ViolationReport {
    pub dim: usize,
    pub violations: Vec<Violation>,
    pub params: Option<SymmetryParameters>,
}

impl fmt::Display for ViolationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violation(s)", self.violations.len())?;
        for v in &self.violations {
            write!(f, "\n  {v}")?;
        }
        Ok(())
    }
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

/// Checks the symmetry conditions on a candidate set of POVMs.
///
/// Parameters are fitted by averaging the measured traces; each individual
/// trace is then compared with its fitted value, and the fitted values with
/// their closed forms, all within `tol`. Positivity uses the fixed
/// [`POSITIVITY_TOLERANCE`]. The report lists every violation found.
pub fn verify_gsm(
    blocks: Vec<Vec<HermitianOperator>>,
    d: usize,
    tol: f64,
) -> core::result::Result<GeneralizedSymmetricMeasurement, ViolationReport> {
    let mut violations = Vec::new();
    let fail = |violations, params| {
        Err(ViolationReport {
            dim: d,
            violations,
            params,
        })
    };
    if blocks.is_empty() {
        return fail(alloc::vec![Violation::NoBlocks], None);
    }
    for (alpha, block) in blocks.iter().enumerate() {
        if block.len() < 2 {
            violations.push(Violation::BlockTooSmall {
                alpha,
                size: block.len(),
            });
        }
        for (k, e) in block.iter().enumerate() {
            if e.dim() != d {
                violations.push(Violation::Dimension {
                    alpha,
                    k,
                    found: e.dim(),
                });
            }
        }
    }
    if !violations.is_empty() {
        return fail(violations, None);
    }

    let n = blocks.len();
    let sizes: Vec<usize> = blocks.iter().map(Vec::len).collect();
    let identity = ComplexMatrix::identity(d);
    let mut max_dev: f64 = 0.0;

    for (alpha, block) in blocks.iter().enumerate() {
        let sum = HermitianOperator::linear_combination(block.iter().map(|e| (1.0, e)));
        let deviation = sum.matrix().max_abs_diff(&identity);
        if deviation > tol {
            violations.push(Violation::Normalization { alpha, deviation });
        }
        for (k, e) in block.iter().enumerate() {
            let eigenvalue = e.eigh().min();
            if eigenvalue < -POSITIVITY_TOLERANCE {
                violations.push(Violation::Positivity {
                    alpha,
                    k,
                    eigenvalue,
                });
            }
        }
    }

    // Gram matrix of all elements, indexed by flattened (α, k).
    let offsets: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &m| {
            let o = *acc;
            *acc += m;
            Some(o)
        })
        .collect();
    let flat: Vec<&HermitianOperator> = blocks.iter().flatten().collect();
    let total = flat.len();
    let mut gram = alloc::vec![0.0; total * total];
    for i in 0..total {
        for j in i..total {
            let v = hs_inner(flat[i], flat[j]).expect("dimensions checked");
            gram[i * total + j] = v;
            gram[j * total + i] = v;
        }
    }
    let at =
        |a: usize, k: usize, b: usize, l: usize| gram[(offsets[a] + k) * total + offsets[b] + l];

    let mut w = Vec::with_capacity(n);
    let mut x = Vec::with_capacity(n);
    let mut y = Vec::with_capacity(n);
    for (alpha, block) in blocks.iter().enumerate() {
        let m = block.len();
        let traces: Vec<f64> = block.iter().map(HermitianOperator::trace).collect();
        let purities: Vec<f64> = (0..m).map(|k| at(alpha, k, alpha, k)).collect();
        let overlaps: Vec<(usize, usize, f64)> = (0..m)
            .flat_map(|k| (0..m).filter(move |&l| l != k).map(move |l| (k, l)))
            .map(|(k, l)| (k, l, at(alpha, k, alpha, l)))
            .collect();
        let (wa, xa) = (mean(&traces), mean(&purities));
        let ya = overlaps.iter().map(|o| o.2).sum::<f64>() / overlaps.len() as f64;
        for (k, &value) in traces.iter().enumerate() {
            max_dev = max_dev.max((value - wa).abs());
            if (value - wa).abs() > tol {
                violations.push(Violation::Trace {
                    alpha,
                    k,
                    value,
                    expected: wa,
                });
            }
        }
        for (k, &value) in purities.iter().enumerate() {
            max_dev = max_dev.max((value - xa).abs());
            if (value - xa).abs() > tol {
                violations.push(Violation::Purity {
                    alpha,
                    k,
                    value,
                    expected: xa,
                });
            }
        }
        for &(k, l, value) in &overlaps {
            max_dev = max_dev.max((value - ya).abs());
            if k < l && (value - ya).abs() > tol {
                violations.push(Violation::Overlap {
                    alpha,
                    k,
                    l,
                    value,
                    expected: ya,
                });
            }
        }
        w.push(wa);
        x.push(xa);
        y.push(ya);
    }

    let mut z = alloc::vec![alloc::vec![0.0; n]; n];
    for alpha in 0..n {
        z[alpha][alpha] = d as f64 / (sizes[alpha] * sizes[alpha]) as f64;
        for beta in (alpha + 1)..n {
            let mut acc = 0.0;
            for k in 0..sizes[alpha] {
                for l in 0..sizes[beta] {
                    acc += at(alpha, k, beta, l);
                }
            }
            let zab = acc / (sizes[alpha] * sizes[beta]) as f64;
            for k in 0..sizes[alpha] {
                for l in 0..sizes[beta] {
                    let value = at(alpha, k, beta, l);
                    max_dev = max_dev.max((value - zab).abs());
                    if (value - zab).abs() > tol {
                        violations.push(Violation::Cross {
                            alpha,
                            k,
                            beta,
                            l,
                            value,
                            expected: zab,
                        });
                    }
                }
            }
            z[alpha][beta] = zab;
            z[beta][alpha] = zab;
        }
    }

    let closed = SymmetryParameters::from_purities(d, &sizes, &x);
    let mut check = |name, alpha, beta, value: f64, expected: f64| {
        max_dev = max_dev.max((value - expected).abs());
        if (value - expected).abs() > tol {
            violations.push(Violation::Parameter {
                name,
                alpha,
                beta,
                value,
                expected,
            });
        }
    };
    for alpha in 0..n {
        check("w", alpha, alpha, w[alpha], closed.w[alpha]);
        check("y", alpha, alpha, y[alpha], closed.y[alpha]);
        for beta in (alpha + 1)..n {
            check("z", alpha, beta, z[alpha][beta], closed.z[alpha][beta]);
        }
    }
    for alpha in 0..n {
        let (lo, hi) = purity_bounds(d, sizes[alpha]);
        if x[alpha] <= lo + tol || x[alpha] > hi + tol {
            violations.push(Violation::PurityRange {
                alpha,
                x: x[alpha],
                lo,
                hi,
            });
        }
    }

    let params = SymmetryParameters { w, x, y, z };
    if !violations.is_empty() {
        return fail(violations, Some(params));
    }
    Ok(GeneralizedSymmetricMeasurement {
        dim: d,
        block_sizes: sizes,
        blocks,
        params,
        max_deviation: max_dev,
    })
}

/// Builds every block from `(variant, t)` choices and verifies the result.
pub fn construct_gsm(
    p: &BasisPartition,
    choices: &[(VariantTag, f64)],
    tol: f64,
) -> Result<GeneralizedSymmetricMeasurement> {
    let blocks = build_measurement(p, choices)?;
    verify_gsm(blocks, p.dim(), tol).map_err(|r| Error::SymmetryViolated(r.violations.len()))
}

/// Real coordinates of a Hermitian operator in an orthonormal basis of the
/// `d²`-dimensional real operator space: diagonal entries, then `√2 Re` and
/// `√2 Im` of the strict upper triangle.
pub fn vectorize(op: &HermitianOperator) -> Vec<f64> {
    let d = op.dim();
    let m = op.matrix();
    let s = core::f64::consts::SQRT_2;
    let mut v: Vec<f64> = (0..d).map(|i| m[(i, i)].re).collect();
    for i in 0..d {
        for j in (i + 1)..d {
            v.push(s * m[(i, j)].re);
            v.push(s * m[(i, j)].im);
        }
    }
    v
}

/// Evidence for or against informational completeness.
#[derive(Clone, Debug, PartialEq)]
pub struct IcReport {
    /// `Σ_α M_α`.
    pub count: usize,
    /// `d² + N − 1`.
    pub needed: usize,
    /// Numerical rank of `{I, E_{α,k}: k < M_α}`.
    pub rank: usize,
    /// `d²`.
    pub full: usize,
    /// Singular values of the vectorized set, descending.
    pub singular_values: Vec<f64>,
}

impl IcReport {
    pub fn count_ok(&self) -> bool {
        self.count == self.needed
    }

    pub fn rank_ok(&self) -> bool {
        self.rank == self.full
    }

    pub fn informationally_complete(&self) -> bool {
        self.count_ok() && self.rank_ok()
    }

    pub fn to_error(&self) -> Error {
        Error::NotInformationallyComplete {
            count: self.count,
            needed: self.needed,
            rank: self.rank,
            full: self.full,
        }
    }
}

/// Counts elements against `d² + N − 1` and computes the rank of the
/// identity together with all but the last element of every POVM.
pub fn is_informationally_complete(g: &GeneralizedSymmetricMeasurement) -> IcReport {
    let d = g.dim();
    let mut rows: Vec<Vec<f64>> = alloc::vec![vectorize(&HermitianOperator::identity(d))];
    for block in g.blocks() {
        rows.extend(block[..block.len() - 1].iter().map(vectorize));
    }
    let cols = d * d;
    let m = ComplexMatrix::from_fn(rows.len(), cols, |i, j| Complex64::new(rows[i][j], 0.0));
    let sv = singular_values(&m);
    let smax = sv.first().copied().unwrap_or(0.0);
    let rank = sv.iter().filter(|&&s| s > RANK_TOLERANCE * smax).count();
    IcReport {
        count: g.total_elements(),
        needed: cols + g.n_povms() - 1,
        rank,
        full: cols,
        singular_values: sv,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassKind {
    RClass,
    SClass,
    ConstantX,
    ConstantY,
    Equinumerous,
    Generic,
}

impl ClassKind {
    pub fn name(self) -> &'static str {
        match self {
            ClassKind::RClass => "R_CLASS",
            ClassKind::SClass => "S_CLASS",
            ClassKind::ConstantX => "CONSTANT_X",
            ClassKind::ConstantY => "CONSTANT_Y",
            ClassKind::Equinumerous => "EQUINUMEROUS",
            ClassKind::Generic => "GENERIC",
        }
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Symmetry classes a measurement belongs to, with the fitted constants.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassTags {
    pub kinds: Vec<ClassKind>,
    /// Constant `x_α − y_α` when in the r-class.
    pub r: Option<f64>,
    /// Constant `(x_α − y_α)/w_α` when in the s-class.
    pub s: Option<f64>,
}

impl ClassTags {
    pub fn contains(&self, kind: ClassKind) -> bool {
        self.kinds.contains(&kind)
    }

    pub fn names(&self) -> Vec<String> {
        self.kinds.iter().map(|k| format!("{k}")).collect()
    }
}

/// Fits `values` to a constant; returns the mean when every entry is within
/// `tol` of it.
fn constant_fit(values: &[f64], tol: f64) -> Option<f64> {
    let m = mean(values);
    values.iter().all(|v| (v - m).abs() <= tol).then_some(m)
}

/// Largest admissible `r = x_α − y_α` for the given sizes.
pub fn r_upper_bound(d: usize, block_sizes: &[usize]) -> f64 {
    let df = d as f64;
    block_sizes
        .iter()
        .map(|&m| {
            let mf = m as f64;
            (df / mf).min(df * (df - 1.0) / (mf * (mf - 1.0)))
        })
        .fold(f64::INFINITY, f64::min)
}

/// Largest admissible `s = (x_α − y_α)/w_α` for the given sizes.
pub fn s_upper_bound(d: usize, block_sizes: &[usize]) -> f64 {
    block_sizes
        .iter()
        .map(|&m| 1.0f64.min((d as f64 - 1.0) / (m as f64 - 1.0)))
        .fold(f64::INFINITY, f64::min)
}

/// [`classify_with_tolerance`] at [`DEFAULT_TOLERANCE`].
pub fn classify(g: &GeneralizedSymmetricMeasurement) -> ClassTags {
    classify_with_tolerance(g, DEFAULT_TOLERANCE)
}

/// Tags every symmetry class that applies. `GENERIC` is used when none of
/// the r-, s-, constant-x or constant-y classes does.
pub fn classify_with_tolerance(g: &GeneralizedSymmetricMeasurement, tol: f64) -> ClassTags {
    let p = g.params();
    let d = g.dim();
    let diffs = p.differences();
    let scaled: Vec<f64> = diffs.iter().zip(&p.w).map(|(v, w)| v / w).collect();
    let r = constant_fit(&diffs, tol)
        .filter(|&r| r > tol && r <= r_upper_bound(d, g.block_sizes()) + tol);
    let s = constant_fit(&scaled, tol)
        .filter(|&s| s > tol && s <= s_upper_bound(d, g.block_sizes()) + tol);

    let mut kinds = Vec::new();
    if r.is_some() {
        kinds.push(ClassKind::RClass);
    }
    if s.is_some() {
        kinds.push(ClassKind::SClass);
    }
    if constant_fit(&p.x, tol).is_some() {
        kinds.push(ClassKind::ConstantX);
    }
    if constant_fit(&p.y, tol).is_some() {
        kinds.push(ClassKind::ConstantY);
    }
    if kinds.is_empty() {
        kinds.push(ClassKind::Generic);
    }
    if g.block_sizes().iter().all(|&m| m == g.block_sizes()[0]) {
        kinds.push(ClassKind::Equinumerous);
    }
    ClassTags { kinds, r, s }
}

/// Real interval with explicit endpoint closedness.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    /// `(lo, hi]`.
    pub fn left_open(lo: f64, hi: f64) -> Self {
        Self {
            lo,
            hi,
            lo_closed: false,
            hi_closed: true,
        }
    }

    pub fn is_empty(&self) -> bool {
        if self.lo_closed && self.hi_closed {
            !(self.hi >= self.lo)
        } else {
            !(self.hi > self.lo)
        }
    }

    pub fn contains(&self, v: f64) -> bool {
        let above = if self.lo_closed {
            v >= self.lo
        } else {
            v > self.lo
        };
        let below = if self.hi_closed {
            v <= self.hi
        } else {
            v < self.hi
        };
        above && below
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = if self.lo_closed { '[' } else { '(' };
        let r = if self.hi_closed { ']' } else { ')' };
        write!(f, "{l}{}, {}{r}", self.lo, self.hi)
    }
}

/// Admissible parameter intervals for the special symmetry classes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FeasibleRanges {
    /// Common `x` for all POVMs: `(max d/M_α², min{d/M_α, d²/M_α²}]`.
    pub constant_x: Interval,
    /// Common `y`: `[max{0, d(M_α−d)/(M_α²(M_α−1))}, min d/M_α²)`. The
    /// upper end forces `x_α = d/M_α²` for the largest block, which the
    /// purity range excludes, while the lower end gives the maximal `x_α`.
    pub constant_y: Interval,
    /// `r = x_α − y_α`: `(0, min{d/M_α, d(d−1)/(M_α(M_α−1))}]`.
    pub r: Interval,
    /// `s = (x_α − y_α)/w_α`: `(0, min{1, (d−1)/(M_α−1)}]`.
    pub s: Interval,
}

pub fn feasible_parameter_ranges(d: usize, block_sizes: &[usize]) -> Result<FeasibleRanges> {
    if d < 2 {
        return Err(Error::DimensionTooSmall(d));
    }
    if block_sizes.is_empty() {
        return Err(Error::InvalidArgument("no block sizes".into()));
    }
    if let Some((alpha, &size)) = block_sizes.iter().enumerate().find(|(_, &m)| m < 2) {
        return Err(Error::BlockTooSmall { alpha, size });
    }
    let df = d as f64;
    let fold_max = |f: &dyn Fn(f64) -> f64| {
        block_sizes
            .iter()
            .map(|&m| f(m as f64))
            .fold(f64::NEG_INFINITY, f64::max)
    };
    let fold_min = |f: &dyn Fn(f64) -> f64| {
        block_sizes
            .iter()
            .map(|&m| f(m as f64))
            .fold(f64::INFINITY, f64::min)
    };
    Ok(FeasibleRanges {
        constant_x: Interval::left_open(
            fold_max(&|m| df / (m * m)),
            fold_min(&|m| (df / m).min(df * df / (m * m))),
        ),
        constant_y: Interval {
            lo: fold_max(&|m| (df * (m - df) / (m * m * (m - 1.0))).max(0.0)),
            hi: fold_min(&|m| df / (m * m)),
            lo_closed: true,
            hi_closed: false,
        },
        r: Interval::left_open(0.0, r_upper_bound(d, block_sizes)),
        s: Interval::left_open(0.0, s_upper_bound(d, block_sizes)),
    })
}
