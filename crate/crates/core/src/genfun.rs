//! Generating functions of the four families, built from the series
//! inversion of x = t(1-t)^2.
//!
//! Everything is computed in the x-variable first and reinterpreted as a
//! z-series (x = z^3) with an explicit exponent offset for the z^-s
//! prefactors. The square root W = sqrt(4t - 3t^2) never appears: the
//! Binet quotient (mu3^k - mu2^k)/(mu3 - mu2) is the polynomial S_k(t)
//! generated radical-free by S_k = (2-t) S_{k-1} - (1-t)^2 S_{k-2}, since
//! mu2 + mu3 = 2 - t and mu2 mu3 = (1-t)^2.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::closed_form::binom;
use crate::error::Result;
use crate::poly::Poly;
use crate::series::{TruncSeries, Var};
use crate::{QSeries, TPoly};

fn rat_int(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

/// The series t(x) with t(0) = 0 solving x = t(1-t)^2, by the coefficient
/// formula [x^n] t = C(3n-2, n-1) / n.
pub fn ternary_tree_series(order: usize) -> QSeries {
    let mut coeffs = vec![BigRational::zero(); order + 1];
    for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
        *c = BigRational::new(binom(3 * n as u64 - 2, n as u64 - 1), BigInt::from(n));
    }
    TruncSeries::from_coeffs(Var::X, order, coeffs)
}

/// The same series by fixed-point iteration t <- x / (1-t)^2; an
/// implementation-independent construction used to cross-check
/// [`ternary_tree_series`].
pub fn ternary_tree_series_fixed_point(order: usize) -> Result<QSeries> {
    let x = TruncSeries::monomial(Var::X, order, 1, BigRational::from(BigInt::from(1)));
    let one = QSeries::one(Var::X, order);
    let mut t = TruncSeries::zeros(Var::X, order);
    loop {
        let denom = one.sub(&t)?.pow(2)?;
        let next = x.mul(&one.div_unit(&denom)?)?;
        if next == t {
            return Ok(t);
        }
        t = next;
    }
}

/// [x^n] t^k = (k/n) C(3n-k-1, n-k), extended by [x^0] t^k = [k=0].
pub fn coeff_t_pow(n: u64, k: u64) -> BigRational {
    if n == 0 || k == 0 {
        return rat_int(i64::from(n == 0 && k == 0));
    }
    if k > n {
        return BigRational::zero();
    }
    BigRational::new(BigInt::from(k) * binom(3 * n - k - 1, n - k), BigInt::from(n))
}

/// t^k / (1-t) as an x-series.
fn t_pow_over_one_minus_t(k: usize, order: usize) -> Result<QSeries> {
    let t = ternary_tree_series(order);
    let one = QSeries::one(Var::X, order);
    t.pow(k)?.div_unit(&one.sub(&t)?)
}

/// Generating function of the a-family: f_k = t^k / (z^k (1-t)), with
/// [z^n] f_k = a(n,k); the support lies on n = 2k (mod 3).
pub fn f_series(k: usize, order: usize) -> Result<QSeries> {
    let xorder = (order + k).div_euclid(3);
    let fx = t_pow_over_one_minus_t(k, xorder)?;
    TruncSeries::from_x_with_shift(&fx, k as i64, order)
}

/// Generating function of the b-family: g_k = t^(k+1) / z^(k+2), with
/// [z^n] g_k = b(n,k); support on n = 2k+1 (mod 3).
pub fn g_series(k: usize, order: usize) -> Result<QSeries> {
    let xorder = (order + k + 2).div_euclid(3);
    let gx = ternary_tree_series(xorder).pow(k + 1)?;
    TruncSeries::from_x_with_shift(&gx, k as i64 + 2, order)
}

/// S_k(t) = (mu3^k - mu2^k) / (mu3 - mu2) as a polynomial in t.
pub fn binet_poly(k: usize) -> TPoly {
    let two_minus_t = Poly::new(vec![BigInt::from(2), BigInt::from(-1)]);
    let one_minus_t_sq = Poly::new(vec![BigInt::from(1), BigInt::from(-1)]).pow(2);
    let mut prev = TPoly::zero();
    let mut cur = TPoly::one();
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = two_minus_t.mul(&cur).sub(&one_minus_t_sq.mul(&prev));
        prev = cur;
        cur = next;
    }
    cur
}

/// The Girard-Waring expansion of S_(k+1):
/// sum over i of (-1)^(i+k) C(k-i, i) (t-2)^(k-2i) (t-1)^(2i), expanded.
pub fn girard_waring_poly(k: usize) -> TPoly {
    let t_minus_2 = Poly::new(vec![BigInt::from(-2), BigInt::from(1)]);
    let t_minus_1 = Poly::new(vec![BigInt::from(-1), BigInt::from(1)]);
    let mut acc = TPoly::zero();
    for i in 0..=k / 2 {
        let sign = if (i + k) % 2 == 0 { 1 } else { -1 };
        let coeff = BigInt::from(sign) * binom((k - i) as u64, i as u64);
        let term = t_minus_2.pow(k - 2 * i).mul(&t_minus_1.pow(2 * i)).scale(&coeff);
        acc = acc.add(&term);
    }
    acc
}

/// Evaluate an integer polynomial in t at the t-series (Horner).
pub fn tpoly_on_series(p: &TPoly, t: &QSeries) -> Result<QSeries> {
    let mut acc = TruncSeries::zeros(t.var(), t.order());
    for c in p.coeffs().iter().rev() {
        let c = TruncSeries::from_coeffs(t.var(), t.order(), vec![BigRational::from(c.clone())]);
        acc = acc.mul(t)?.add(&c)?;
    }
    Ok(acc)
}

/// Generating function of the d-family:
/// psi_k = t^(k+1) / (z^(2k+1) (1-t)) * S_(k+1)(t), with [z^n] psi_k = d(n,k);
/// support on n = k-1 (mod 3).
pub fn psi_series(k: usize, order: usize) -> Result<QSeries> {
    let xorder = (order + 2 * k + 1).div_euclid(3);
    let base = t_pow_over_one_minus_t(k + 1, xorder)?;
    let s = tpoly_on_series(&binet_poly(k + 1), &ternary_tree_series(xorder))?;
    TruncSeries::from_x_with_shift(&base.mul(&s)?, 2 * k as i64 + 1, order)
}

/// Generating function of the c-family: phi_0 = 1/(1-t) = f_0,
/// phi_1 = psi_0 / z, and phi_k = psi_(k-1)/z - psi_(k-2) for k >= 2;
/// [z^n] phi_k = c(n,k), support on n = k (mod 3).
pub fn phi_series(k: usize, order: usize) -> Result<QSeries> {
    match k {
        0 => f_series(0, order),
        1 => psi_series(0, order + 1)?.shift_down(1),
        _ => {
            let lead = psi_series(k - 1, order + 1)?.shift_down(1)?;
            lead.sub(&psi_series(k - 2, order)?)
        }
    }
}
