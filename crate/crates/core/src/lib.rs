//! Exact enumeration of partial S-Motzkin paths.
//!
//! An S-Motzkin path is a Motzkin path with equally many up, level and down
//! steps whose non-down steps spell `huhu...hu`; complete paths are counted
//! by the ternary numbers C(3m, m) / (2m + 1). This crate computes the four
//! partial-path counting families (forward a/b, reverse c/d) by four
//! independent routes and checks them against each other:
//!
//! * [`path`]: exhaustive generation with pruning, the ground-truth oracle;
//! * [`recurrence`]: dynamic programming over the coupled recurrences;
//! * [`genfun`]: exact truncated power series built from the inversion of
//!   x = t(1-t)^2, including the Binet/Girard-Waring polynomials;
//! * [`closed_form`]: binomial formulas from coefficient extraction;
//! * [`determinant`]: the band-matrix determinants whose Cramer quotients
//!   reproduce the generating functions at finite truncation size.
//!
//! The arithmetic kernels ([`poly::Poly`], [`series::TruncSeries`]) are
//! generic over the coefficient scalar; the crate-level aliases fix the
//! exact instantiations used by the enumeration routines.

pub mod closed_form;
pub mod determinant;
pub mod error;
pub mod genfun;
pub mod path;
pub mod poly;
pub mod recurrence;
pub mod scalar;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use path::{classify, is_valid_forward, is_valid_reverse, oracle_counts};
pub use path::{Direction, FamilyTag, LatticePath, Step, ORACLE_MAX_N};
pub use recurrence::{ab_tables, cd_tables, smotzkin_count, CountTable};

/// Integer polynomial in the length marker z.
pub type ZPoly = poly::Poly<num_bigint::BigInt>;

/// Integer polynomial in the auxiliary variable t of the substitution
/// z^3 = t(1-t)^2.
pub type TPoly = poly::Poly<num_bigint::BigInt>;

/// Truncated series with exact rational coefficients.
pub type QSeries = series::TruncSeries<num_rational::BigRational>;

/// Root and Binet-weight data evaluated in f64.
pub type RootData64 = determinant::RootData<f64>;
