use alloc::string::String;

/// Errors raised by constructors and operations in this crate.
///
/// Symmetry violations found by [`crate::verify_gsm`] are not errors; they
/// are reported as data in a [`crate::measurement::ViolationReport`].
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("malformed matrix: {0}")]
    Malformed(String),

    #[error("operator is not Hermitian (residual {0:e})")]
    NotHermitian(f64),

    #[error("not a density matrix: {0}")]
    InvalidState(String),

    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),

    #[error("rank {rank} outside 1..={dim}")]
    InvalidRank { rank: usize, dim: usize },

    #[error("block {alpha} has {size} elements; every POVM needs at least 2")]
    BlockTooSmall { alpha: usize, size: usize },

    #[error("partition needs {needed} basis operators but only {available} are available")]
    PartitionOverflow { needed: usize, available: usize },

    #[error("basis operators {i} and {j} are not orthonormal (deviation {deviation:e})")]
    NotOrthonormal { i: usize, j: usize, deviation: f64 },

    #[error("basis operator {index} is not traceless (trace {trace:e})")]
    NotTraceless { index: usize, trace: f64 },

    #[error("block index {alpha} out of range for {count} blocks")]
    BlockIndex { alpha: usize, count: usize },

    #[error("rotation is not orthogonal (residual {0:e})")]
    NotOrthogonal(f64),

    #[error("degenerate block: every H operator vanishes")]
    DegenerateBlock,

    #[error("construction strength t must be nonzero")]
    ZeroStrength,

    #[error("sign of t = {t} disagrees with the requested variant sign")]
    SignMismatch { t: f64 },

    #[error("t = {t} is outside the admissible range [{lo}, {hi}]")]
    OutOfRange { t: f64, lo: f64, hi: f64 },

    #[error("element E_{{{alpha},{k}}} is not positive: eigenvalue {eigenvalue:e}")]
    Positivity {
        alpha: usize,
        k: usize,
        eigenvalue: f64,
    },

    #[error("x = {x} is infeasible: admissible range is ({lo}, {hi}]")]
    InfeasibleX { x: f64, lo: f64, hi: f64 },

    #[error("recovered basis operators are not orthonormal (deviation {0:e})")]
    RecoveryFailed(f64),

    #[error(
        "measurement is not in the r-class; the coincidence bound is not analytically available"
    )]
    NotRClass,

    #[error("measurement is not informationally complete: {count} elements (need {needed}), rank {rank} of {full}")]
    NotInformationallyComplete {
        count: usize,
        needed: usize,
        rank: usize,
        full: usize,
    },

    #[error("probability block {alpha} sums to {sum}")]
    NotNormalized { alpha: usize, sum: f64 },

    #[error("candidate violates {0} symmetry condition(s)")]
    SymmetryViolated(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = core::result::Result<T, Error>;
