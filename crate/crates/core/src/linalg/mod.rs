//! Exact linear algebra over the rationals, with word-sized prime fields
//! for the multimodular fast paths.

pub mod echelon;
pub mod field;
pub mod matrix;
pub mod modular;
pub mod scalar;
pub mod subspace;

pub use echelon::Echelon;
pub use field::{Field, PrimeField, Rationals};
pub use matrix::Matrix;
pub use modular::{multimodular_rank, multimodular_rank_certified, prime_sequence, RankCertificate, PRIMES};
pub use scalar::Scalar;
pub use subspace::{CoordinateSystem, Subspace};

/// Exact rank over the rationals.
pub fn rank(m: &Matrix) -> usize {
    m.rank()
}
