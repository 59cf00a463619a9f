use std::fmt::Debug;
use std::ops::{Div, Neg, Sub};

use num_traits::{One, Zero};

/// Coefficient ring for polynomials and truncated series.
///
/// Satisfied by the exact types used throughout the crate (`BigInt`,
/// `BigRational`) as well as the machine floats, so the same arithmetic
/// kernels serve both exact and numeric callers.
pub trait Scalar:
    Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone + PartialEq + Debug + Zero + One + Neg<Output = T> + Sub<Output = T>
{
}

/// Scalar with exact division by nonzero elements; required for series
/// division and anything that inverts a unit constant term.
pub trait FieldScalar: Scalar + Div<Output = Self> {}

impl<T> FieldScalar for T where T: Scalar + Div<Output = T> {}
