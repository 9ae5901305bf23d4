//! Exact composite Hurwitz numbers for the hypergeometric 2D Toda
//! tau-functions with parameters `(q, w_1..w_l, z_1..z_m)`.
//!
//! The coefficient `F^c_d(mu, nu)` of `q^n w^c z^d P_mu(t) P_nu(s)` is
//! available by three independent routes:
//!
//! * the spectral sum over characters and content symmetric functions
//!   ([`coefficient::f_coefficient`]),
//! * the signed assembly of Frobenius-formula Hurwitz numbers
//!   ([`coefficient::signed_hurwitz_sum`]),
//! * brute-force enumeration of multimonotonic transposition paths in the
//!   Cayley graph of `S_n` ([`cayley::count_monotone_pairs`]),
//!
//! plus a fourth by coefficient extraction from the truncated tau-function
//! expansion ([`series::tau_expand`]).
//!
//! Parameter-dependent code is generic over [`Scalar`]; [`Rational`] is the
//! exact instance every identity is checked with.

pub mod cayley;
pub mod character;
pub mod coefficient;
pub mod content;
pub mod error;
pub mod partition;
pub mod scalar;
pub mod selftest;
pub mod series;

pub use cayley::{BandSpec, CenterElement, Perm};
pub use character::{character, character_table, CharacterEngine, CharacterTable};
pub use coefficient::CoefficientKey;
pub use content::HypergeometricParams;
pub use error::{Error, Result};
pub use partition::{partitions_of, Partition, RamificationData};
pub use scalar::Scalar;
pub use series::{DegreeCaps, PowerSumTable, TruncatedSeries};

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;

/// Exact parameters `(q, w, z)`.
pub type ExactParams = HypergeometricParams<Rational>;

/// Floating-point parameters, for quick numeric evaluation.
pub type FloatParams = HypergeometricParams<f64>;

/// Exact truncated series.
pub type ExactSeries = TruncatedSeries<Rational>;

/// Exact power-sum coefficient table.
pub type ExactTable = PowerSumTable<Rational>;
