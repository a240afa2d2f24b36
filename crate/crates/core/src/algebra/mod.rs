//! Dense complex linear algebra: matrices, Hermitian operators, spectra,
//! tensor products, norms and state sampling.

mod eigen;
mod hermitian;
mod matrix;
pub mod random;

pub use eigen::{eigh, singular_values, trace_norm, Eigh};
pub use hermitian::{
    flip_operator, hs_inner, kron, max_entangled_projector, DensityMatrix, HermitianOperator,
};
pub use matrix::{ComplexMatrix, RealMatrix};
pub use random::random_density_matrix;
