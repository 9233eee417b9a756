//! Exact linear algebra over F_p, Q, Q(√D) and Z.

pub mod dense;
pub mod integer;
pub mod modp;
pub mod reconstruct;
pub mod text;

use thiserror::Error;

pub use dense::{vec_mat, Matrix};
pub use integer::{
    hermite_rows, hermite_with_transform, integer_left_kernel, is_lll_reduced_approx,
    is_lll_reduced_exact, lattice_basis_size, lll_reduce, HermiteResult, IntMatrix,
};
pub use modp::{nullspace_mod, rank_mod, rcf_mod, EchelonBasis, Modulus, DEFAULT_PRIME};
pub use reconstruct::{primitive_integer_vector, rational_reconstruct, reconstruct_integer_vector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("integer entries exceeded the safe 62-bit range")]
    Overflow,
    #[error("LLL parameter must lie strictly between 1/4 and 1")]
    InvalidDelta,
    #[error("zero vector in a lattice basis")]
    ZeroVector,
    #[error("rational reconstruction failed verification")]
    ReconstructionFailed,
    #[error("matrix dimensions do not match")]
    DimensionMismatch,
    #[error("matrix parse error: {0}")]
    Parse(String),
}
