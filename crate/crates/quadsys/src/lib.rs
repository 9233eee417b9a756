//! Polynomial identities of the tetrad `{a,b,c,d} = abcd + dcba` and the
//! anti-tetrad `[a,b,c,d] = abcd − dcba`, and universal associative
//! envelopes of (anti-)Jordan quadruple systems.
//!
//! The crate is organised bottom-up:
//!
//! - [`scalar`] and [`linalg`]: exact arithmetic and linear algebra.
//! - [`symmetric_group`]: partitions, tableaux, representation matrices.
//! - [`free_algebra`]: quaternary monomials, straightening, expansion.
//! - [`identities`]: identity spaces and their isotypic decomposition.
//! - [`ncgroebner`]: noncommutative Gröbner bases.
//! - [`envelope`]: envelopes and their Wedderburn analysis.

pub mod free_algebra;
pub mod identities;
pub mod envelope;
pub mod linalg;
pub mod ncgroebner;
pub mod scalar;
pub mod symmetric_group;

pub use linalg::{IntMatrix, Matrix};
pub use scalar::{Field, Fp, QuadNumber, Rational};

/// Dense matrix over Q.
pub type RatMatrix = Matrix<Rational>;
/// Dense matrix over a quadratic extension of Q.
pub type QuadMatrix = Matrix<QuadNumber>;
/// The default working prime field.
pub type F101 = Fp<101>;
/// Dense matrix over F_101.
pub type F101Matrix = Matrix<F101>;
