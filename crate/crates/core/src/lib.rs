//! Generalized symmetric measurements.
//!
//! A generalized symmetric measurement is a collection of `N` POVMs
//! `{E_{α,k}; k = 1..M_α}` on a `d`-dimensional Hilbert space whose element
//! counts `M_α` may differ, subject to pairwise Hilbert–Schmidt symmetry
//! conditions
//!
//! ```text
//! Tr E_{α,k}          = w_α
//! Tr E_{α,k}²         = x_α
//! Tr E_{α,k} E_{α,ℓ}  = y_α       (ℓ ≠ k)
//! Tr E_{α,k} E_{β,ℓ}  = z_{αβ}    (β ≠ α)
//! ```
//!
//! This crate builds such measurements from traceless orthonormal Hermitian
//! operator bases ([`basis`], [`construction`]), verifies and classifies them
//! ([`measurement`]), certifies conical 2-designs ([`designs`]) and applies
//! them to state reconstruction, index-of-coincidence bounds, entropic
//! uncertainty relations and bipartite separability screening
//! ([`applications`]).
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the
//! command line live in the companion `gsm-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod applications;
pub mod basis;
pub mod construction;
pub mod designs;
mod error;
pub mod measurement;

pub use algebra::{
    eigh, flip_operator, hs_inner, kron, max_entangled_projector, random_density_matrix,
    singular_values, trace_norm, ComplexMatrix, DensityMatrix, Eigh, HermitianOperator, RealMatrix,
};
pub use basis::{gell_mann_basis, partition_basis, rotate_block, BasisPartition};
pub use construction::{
    build_h_operators, build_measurement, build_measurement_block, recover_basis_block, t_range,
    variant_coincidence, x_from_t, Sign, TRange, VariantTag,
};
pub use error::{Error, Result};
pub use measurement::{
    classify, construct_gsm, feasible_parameter_ranges, is_informationally_complete, verify_gsm,
    ClassKind, ClassTags, GeneralizedSymmetricMeasurement, SymmetryParameters, ViolationReport,
};
pub use num_complex::Complex64;
