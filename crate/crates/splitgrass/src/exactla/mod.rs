//! Exact linear algebra over the rationals and prime fields: scalars,
//! matrices with deterministic elimination, and canonical subspaces.

mod mat;
mod scalar;
mod subspace;

pub use mat::Mat;
pub use scalar::{is_prime_u64, FieldSpec, Scalar, DEFAULT_PRIME};
pub use subspace::VecSubspace;
