//! Truncated power series with exact coefficients.
//!
//! Two variables occur: `z` (the path-length marker) and `x = z^3`. Keeping
//! the variable on the series value catches accidental mixing; conversions
//! between the two happen only through [`TruncSeries::from_x_with_shift`],
//! which carries the explicit exponent offset used for the `z^-s` prefactors
//! of the generating functions.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{FieldScalar, Scalar};

/// Series variable tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    Z,
    X,
}

/// Truncated series: coefficients of powers `0..=order` are exact, higher
/// powers are unknown. Arithmetic never pretends to know more than that:
/// combining two series truncates to the smaller order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries<T> {
    var: Var,
    order: usize,
    coeffs: Vec<T>,
}

impl<T: Scalar> TruncSeries<T> {
    pub fn from_coeffs(var: Var, order: usize, mut coeffs: Vec<T>) -> Self {
        coeffs.resize(order + 1, T::zero());
        TruncSeries { var, order, coeffs }
    }

    pub fn zeros(var: Var, order: usize) -> Self {
        TruncSeries::from_coeffs(var, order, Vec::new())
    }

    pub fn one(var: Var, order: usize) -> Self {
        TruncSeries::from_coeffs(var, order, vec![T::one()])
    }

    pub fn monomial(var: Var, order: usize, exp: usize, c: T) -> Self {
        let mut s = TruncSeries::zeros(var, order);
        if exp <= order {
            s.coeffs[exp] = c;
        }
        s
    }

    pub fn from_poly(p: &Poly<T>, var: Var, order: usize) -> Self {
        TruncSeries::from_coeffs(var, order, p.coeffs().to_vec())
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, n: usize) -> &T {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        TruncSeries::from_coeffs(self.var, order, self.coeffs[..=order].to_vec())
    }

    fn check_var(&self, rhs: &Self) -> Result<()> {
        if self.var != rhs.var {
            return Err(Error::VarMismatch(self.var, rhs.var));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_var(rhs)?;
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order)
            .map(|n| self.coeffs[n].clone() + rhs.coeffs[n].clone())
            .collect();
        Ok(TruncSeries { var: self.var, order, coeffs })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_var(rhs)?;
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order)
            .map(|n| self.coeffs[n].clone() - rhs.coeffs[n].clone())
            .collect();
        Ok(TruncSeries { var: self.var, order, coeffs })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_var(rhs)?;
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![T::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Ok(TruncSeries { var: self.var, order, coeffs })
    }

    pub fn scale(&self, c: &T) -> Self {
        TruncSeries {
            var: self.var,
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            var: self.var,
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| -a.clone()).collect(),
        }
    }

    /// Multiply by `var^j`; the top `j` coefficients fall off the truncation.
    pub fn shift_up(&self, j: usize) -> Self {
        let mut coeffs = vec![T::zero(); j.min(self.order + 1)];
        coeffs.extend(self.coeffs.iter().take(self.order + 1 - coeffs.len()).cloned());
        TruncSeries { var: self.var, order: self.order, coeffs }
    }

    /// Divide by `var^j`; requires the low `j` coefficients to vanish.
    /// The result is only known to order `order - j`.
    pub fn shift_down(&self, j: usize) -> Result<Self> {
        for n in 0..j.min(self.order + 1) {
            if !self.coeffs[n].is_zero() {
                return Err(Error::NegativeExponent(n as i64 - j as i64));
            }
        }
        assert!(j <= self.order, "shift below the truncation order");
        Ok(TruncSeries {
            var: self.var,
            order: self.order - j,
            coeffs: self.coeffs[j..].to_vec(),
        })
    }

    pub fn pow(&self, e: usize) -> Result<Self> {
        let mut acc = TruncSeries::one(self.var, self.order);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Reinterpret an `x`-series as a `z`-series via `x = z^3`, dividing by
    /// `z^shift`: coefficient of `x^m` lands on `z^{3m - shift}`. Errors if a
    /// nonzero coefficient would land on a negative exponent.
    pub fn from_x_with_shift(xs: &Self, shift: i64, z_order: usize) -> Result<Self> {
        assert_eq!(xs.var, Var::X, "source series must be in x");
        let needed = (z_order as i64 + shift).div_euclid(3);
        assert!(
            xs.order as i64 >= needed,
            "x-series order {} too small for z-order {} with shift {}",
            xs.order,
            z_order,
            shift
        );
        let mut out = TruncSeries::zeros(Var::Z, z_order);
        for (m, c) in xs.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = 3 * m as i64 - shift;
            if e < 0 {
                return Err(Error::NegativeExponent(e));
            }
            if e <= z_order as i64 {
                out.coeffs[e as usize] = c.clone();
            }
        }
        Ok(out)
    }

    pub fn map_coeffs<U: Scalar>(&self, f: impl Fn(&T) -> U) -> TruncSeries<U> {
        TruncSeries {
            var: self.var,
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl<T: FieldScalar> TruncSeries<T> {
    /// Series division by a unit (nonzero constant term).
    pub fn div_unit(&self, rhs: &Self) -> Result<Self> {
        self.check_var(rhs)?;
        if rhs.coeffs[0].is_zero() {
            return Err(Error::NonUnitDivisor);
        }
        let order = self.order.min(rhs.order);
        let mut q = vec![T::zero(); order + 1];
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for j in 1..=n {
                acc = acc - rhs.coeffs[j].clone() * q[n - j].clone();
            }
            q[n] = acc / rhs.coeffs[0].clone();
        }
        Ok(TruncSeries { var: self.var, order, coeffs: q })
    }
}

/// Dispatching form of the ring operations, for callers that select the
/// operation at runtime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Mul,
    DivUnit,
}

pub fn series_arith<T: FieldScalar>(
    a: &TruncSeries<T>,
    b: &TruncSeries<T>,
    op: SeriesOp,
) -> Result<TruncSeries<T>> {
    match op {
        SeriesOp::Add => a.add(b),
        SeriesOp::Mul => a.mul(b),
        SeriesOp::DivUnit => a.div_unit(b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn s(order: usize, coeffs: &[i64]) -> TruncSeries<BigRational> {
        TruncSeries::from_coeffs(
            Var::X,
            order,
            coeffs.iter().map(|&c| BigRational::from(BigInt::from(c))).collect(),
        )
    }

    #[test]
    fn ring_identities() {
        let one_plus = s(2, &[1, 1]);
        let one_minus = s(2, &[1, -1]);
        assert_eq!(one_plus.mul(&one_minus).unwrap(), s(2, &[1, 0, -1]));

        let geom = TruncSeries::one(Var::X, 3).div_unit(&s(3, &[1, -1])).unwrap();
        assert_eq!(geom, s(3, &[1, 1, 1, 1]));

        let shifted = s(3, &[0, 1, 2]).mul(&s(3, &[0, 1])).unwrap();
        assert_eq!(shifted, s(3, &[0, 0, 1, 2]));
    }

    #[test]
    fn var_mismatch_is_rejected() {
        let a = s(2, &[1]);
        let z = TruncSeries::<BigRational>::one(Var::Z, 2);
        assert_eq!(a.add(&z).unwrap_err(), Error::VarMismatch(Var::X, Var::Z));
        assert_eq!(
            series_arith(&a, &z, SeriesOp::Mul).unwrap_err(),
            Error::VarMismatch(Var::X, Var::Z)
        );
    }

    #[test]
    fn non_unit_divisor_is_rejected() {
        let a = s(2, &[1, 1]);
        let b = s(2, &[0, 1]);
        assert_eq!(a.div_unit(&b).unwrap_err(), Error::NonUnitDivisor);
    }

    #[test]
    fn shifts() {
        let a = s(3, &[1, 2, 3, 4]);
        assert_eq!(a.shift_up(2), s(3, &[0, 0, 1, 2]));
        let b = s(3, &[0, 0, 5, 6]);
        let down = b.shift_down(2).unwrap();
        assert_eq!(down.order(), 1);
        assert_eq!(down.coeffs(), s(1, &[5, 6]).coeffs());
        assert!(s(3, &[1]).shift_down(1).is_err());
    }

    #[test]
    fn x_to_z_conversion_tracks_offsets() {
        // x + 2x^2 divided by z^2 -> z + 2z^4
        let xs = s(2, &[0, 1, 2]);
        let zs = TruncSeries::from_x_with_shift(&xs, 2, 4).unwrap();
        assert_eq!(zs.var(), Var::Z);
        let expect: Vec<i64> = vec![0, 1, 0, 0, 2];
        for (n, want) in expect.iter().enumerate() {
            assert_eq!(zs.coeff(n), &BigRational::from(BigInt::from(*want)));
        }
        // dividing x + ... by z^4 would need z^-1
        assert!(TruncSeries::from_x_with_shift(&s(2, &[0, 1]), 4, 2).is_err());
    }

    fn arb_series(order: usize) -> impl Strategy<Value = TruncSeries<BigRational>> {
        prop::collection::vec(-9i64..9, 0..=order + 1)
            .prop_map(move |v| s(order, &v))
    }

    proptest! {
        #[test]
        fn mul_then_div_roundtrips(a in arb_series(8), mut b in arb_series(8)) {
            // force b to be a unit
            b = b.add(&TruncSeries::one(Var::X, 8)).unwrap();
            prop_assume!(!b.coeff(0).is_zero());
            let prod = a.mul(&b).unwrap();
            prop_assert_eq!(prod.div_unit(&b).unwrap(), a);
        }

        #[test]
        fn mul_commutes(a in arb_series(6), b in arb_series(6)) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        }
    }
}
