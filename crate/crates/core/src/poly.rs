//! Dense univariate polynomials with exact coefficients.
//!
//! The same representation is used for polynomials in `z` (determinants,
//! tau terms) and in `t` (Binet and Girard-Waring expansions); the variable
//! is a convention of the call site, not part of the type.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Polynomial stored as `coeffs[i]` = coefficient of the i-th power.
/// Invariant: no trailing zero coefficient; the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// `c * x^exp`
    pub fn monomial(c: T, exp: usize) -> Self {
        let mut coeffs = vec![T::zero(); exp + 1];
        coeffs[exp] = c;
        Poly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of the n-th power (zero beyond the stored degree).
    pub fn coeff(&self, n: usize) -> T {
        self.coeffs.get(n).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::new(out)
    }

    pub fn neg(&self) -> Self {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by `x^j`.
    pub fn shift_up(&self, j: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); j];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Horner evaluation at a scalar point.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Horner composition `self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(other).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// For a polynomial supported on exponents divisible by 3, return `q`
    /// with `self(z) = q(z^3)`. Errors if any other exponent carries a
    /// nonzero coefficient.
    pub fn compress3(&self) -> Result<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len() / 3 + 1);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % 3 == 0 {
                out.push(c.clone());
            } else if !c.is_zero() {
                return Err(Error::NonTernaryExponent(i));
            }
        }
        Ok(Poly::new(out))
    }

    pub fn map_coeffs<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Scalar + Integer> Poly<T> {
    /// Exact polynomial division; `None` unless `rhs` divides `self` in the
    /// coefficient ring. Used by the fraction-free determinant, where every
    /// division is exact by construction.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let dd = rhs.degree().expect("nonzero divisor");
        let dn = self.degree().expect("nonzero dividend");
        if dn < dd {
            return None;
        }
        let lead = rhs.coeffs.last().expect("nonzero divisor").clone();
        let mut rem = self.clone();
        let mut quot = vec![T::zero(); dn - dd + 1];
        while let Some(dr) = rem.degree() {
            if dr < dd {
                return None;
            }
            let (q, r) = rem.coeffs.last().expect("nonzero remainder").div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            let shift = dr - dd;
            rem = rem.sub(&rhs.shift_up(shift).scale(&q));
            quot[shift] = q;
            if rem.is_zero() {
                return Some(Poly::new(quot));
            }
        }
        Some(Poly::new(quot))
    }
}
