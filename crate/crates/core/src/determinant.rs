//! Band matrices of the two linear systems, their exact determinants, and
//! the Cramer quotients that realize the generating functions at finite
//! truncation size.
//!
//! The determinant polynomials D_h satisfy
//! D_h - D_(h-1) + 2 z^3 D_(h-2) - z^6 D_(h-3) = 0 with D_0 = D_1 = 1,
//! D_2 = 1 - 2z^3; [`det_exact`] recomputes them independently by
//! fraction-free elimination so the recursion can be checked rather than
//! assumed. The bordered determinants of the transposed system reduce to
//! the tau polynomials via
//! D_(n,i) = z^(i-1) tau_i D_(n-i) - z^(i+2) tau_(i-1) D_(n-i-1).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Float, One, ToPrimitive};

use crate::closed_form::binom;
use crate::error::{Error, Result};
use crate::genfun::f_series;
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::series::{TruncSeries, Var};
use crate::{QSeries, ZPoly};

/// Which of the band stencils to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BandKind {
    /// Rows (-z^2, 1, -2z, z^2) everywhere, first row starting (1, -2z, z^2).
    FirstSystem,
    /// As `FirstSystem` but with first row (1, -z, 0, ...).
    FirstSystemStar,
    /// The transpose of `FirstSystem`: rows (z^2, -2z, 1, -z^2).
    Transposed,
}

/// A concrete h-by-h matrix description.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BandMatrixSpec {
    pub kind: BandKind,
    pub size: usize,
}

impl BandMatrixSpec {
    pub fn new(kind: BandKind, size: usize) -> Self {
        assert!(size >= 1, "band matrices have at least one row");
        BandMatrixSpec { kind, size }
    }

    /// Materialize the entries as integer polynomials in z.
    pub fn entries(&self) -> Vec<Vec<ZPoly>> {
        let h = self.size;
        let entry = |i: usize, j: usize| -> ZPoly {
            let (di, dj) = (i as i64, j as i64);
            match self.kind {
                BandKind::FirstSystem | BandKind::FirstSystemStar => {
                    if self.kind == BandKind::FirstSystemStar && i == 0 {
                        return match j {
                            0 => Poly::one(),
                            1 => Poly::monomial(BigInt::from(-1), 1),
                            _ => Poly::zero(),
                        };
                    }
                    match dj - di {
                        -1 => Poly::monomial(BigInt::from(-1), 2),
                        0 => Poly::one(),
                        1 => Poly::monomial(BigInt::from(-2), 1),
                        2 => Poly::monomial(BigInt::from(1), 2),
                        _ => Poly::zero(),
                    }
                }
                BandKind::Transposed => match dj - di {
                    -2 => Poly::monomial(BigInt::from(1), 2),
                    -1 => Poly::monomial(BigInt::from(-2), 1),
                    0 => Poly::one(),
                    1 => Poly::monomial(BigInt::from(-1), 2),
                    _ => Poly::zero(),
                },
            }
        };
        (0..h).map(|i| (0..h).map(|j| entry(i, j)).collect()).collect()
    }
}

/// Fraction-free (Bareiss) determinant over an integral coefficient ring;
/// every interior division is exact, so no rational functions appear. Row
/// pivoting handles the zero corners of bordered matrices.
pub fn det_bareiss<T: Scalar + Integer>(mut m: Vec<Vec<Poly<T>>>) -> Poly<T> {
    let n = m.len();
    assert!(n >= 1 && m.iter().all(|row| row.len() == n), "square matrix required");
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Poly::zero();
            };
            m.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("fraction-free elimination divides exactly");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// Exact determinant of a band matrix.
pub fn det_exact(spec: &BandMatrixSpec) -> ZPoly {
    det_bareiss(spec.entries())
}

/// D_0 .. D_h by the third-order recursion.
pub fn d_sequence(h_max: usize) -> Vec<ZPoly> {
    let mut ds = Vec::with_capacity(h_max + 1);
    ds.push(ZPoly::one());
    if h_max >= 1 {
        ds.push(ZPoly::one());
    }
    if h_max >= 2 {
        ds.push(Poly::new(vec![
            BigInt::one(),
            BigInt::ZERO,
            BigInt::ZERO,
            BigInt::from(-2),
        ]));
    }
    for k in 3..=h_max {
        let prev = ds[k - 1].clone();
        let two_z3 = ds[k - 2].shift_up(3).scale(&BigInt::from(2));
        let z6 = ds[k - 3].shift_up(6);
        ds.push(prev.sub(&two_z3).add(&z6));
    }
    ds
}

/// D*_h = D_(h-1) - z^3 D_(h-2), the determinant with the (1, -z) first row.
pub fn d_star(h: usize) -> ZPoly {
    assert!(h >= 2, "the starred determinant needs at least two rows");
    let ds = d_sequence(h - 1);
    ds[h - 1].sub(&ds[h - 2].shift_up(3))
}

/// tau_0 .. tau_i by tau_i = 2 tau_(i-1) - tau_(i-2) + z^3 tau_(i-3),
/// the coefficients of w / (1 - 2w + w^2 - z^3 w^3).
pub fn tau_sequence(i_max: usize) -> Vec<ZPoly> {
    let base = [ZPoly::zero(), ZPoly::one(), Poly::constant(BigInt::from(2))];
    let mut taus: Vec<ZPoly> = base.into_iter().take(i_max + 1).collect();
    for i in taus.len()..=i_max {
        let a = taus[i - 1].scale(&BigInt::from(2));
        let b = taus[i - 2].clone();
        let c = taus[i - 3].shift_up(3);
        taus.push(a.sub(&b).add(&c));
    }
    taus
}

/// Explicit form tau_i = sum over l of C(i-l, 2l+1) z^(3l); used only to
/// cross-check the recursion.
pub fn tau_explicit(i: usize) -> ZPoly {
    if i == 0 {
        return ZPoly::zero();
    }
    let mut acc = ZPoly::zero();
    for l in 0..=(i - 1) / 3 {
        let c = binom((i - l) as u64, (2 * l + 1) as u64);
        acc = acc.add(&Poly::monomial(c, 3 * l));
    }
    acc
}

/// The transposed-system matrix of size n with row 1 and column i cleared
/// except for a single 1 at (1, i); indices are 1-based.
pub fn bordered_matrix(n: usize, i: usize) -> Result<Vec<Vec<ZPoly>>> {
    if i == 0 || i > n {
        return Err(Error::BorderIndex { index: i, size: n });
    }
    let mut m = BandMatrixSpec::new(BandKind::Transposed, n).entries();
    let col = i - 1;
    for (r, row) in m.iter_mut().enumerate() {
        if r == 0 {
            row.fill(ZPoly::zero());
        } else {
            row[col] = ZPoly::zero();
        }
    }
    m[0][col] = ZPoly::one();
    Ok(m)
}

/// Determinant of the bordered matrix, by honest elimination.
pub fn bordered_det(n: usize, i: usize) -> Result<ZPoly> {
    Ok(det_bareiss(bordered_matrix(n, i)?))
}

fn poly_series(p: &ZPoly, order: usize) -> QSeries {
    TruncSeries::from_poly(&p.map_coeffs(|c| BigRational::from(c.clone())), Var::Z, order)
}

/// Finite-size Cramer solution for the a-family generating function:
/// z^(2i) D_(h-i-1) / D*_h as a z-series. For h large enough the first
/// `order`+1 coefficients agree with [`f_series`].
pub fn cramer_f(i: usize, h: usize, order: usize) -> Result<QSeries> {
    assert!(i + 2 <= h, "the h-row system solves for f_0 .. f_(h-1) only");
    let ds = d_sequence(h - 1);
    let num = ds[h - i - 1].shift_up(2 * i);
    let den = ds[h - 1].sub(&ds[h - 2].shift_up(3));
    poly_series(&num, order).div_unit(&poly_series(&den, order))
}

/// Finite-size Cramer solution for the d-family generating function:
/// (z^2 / (1 - t)) * D_(n,i+1) / D_n as a z-series. The prefactor is the
/// right-hand side of the first row of the psi system; the index shift
/// reflects that column j of the solution vector is psi_(j-1).
pub fn cramer_psi(i: usize, n: usize, order: usize) -> Result<QSeries> {
    assert!(i + 1 <= n, "the n-row system solves for psi_0 .. psi_(n-1) only");
    let num = bordered_det(n, i + 1)?;
    let den = d_sequence(n).pop().expect("nonempty sequence");
    let quotient = poly_series(&num, order).div_unit(&poly_series(&den, order))?;
    let prefactor = f_series(0, order)?.shift_up(2);
    prefactor.mul(&quotient)
}

/// Result of a stabilization scan: the smallest size from which the
/// truncated Cramer quotient stops changing, and the stable series.
#[derive(Debug, Clone)]
pub struct Stabilization {
    pub threshold: usize,
    pub limit: QSeries,
}

/// Scan h downward from `h_max` and report where the first `order`+1
/// coefficients of the f-quotient stabilize.
pub fn f_stabilization(i: usize, order: usize, h_max: usize) -> Result<Stabilization> {
    let limit = cramer_f(i, h_max, order)?;
    let mut threshold = i + 2;
    for h in (i + 2..h_max).rev() {
        if cramer_f(i, h, order)? != limit {
            threshold = h + 1;
            break;
        }
    }
    Ok(Stabilization { threshold, limit })
}

/// Same scan for the psi-quotient.
pub fn psi_stabilization(i: usize, order: usize, n_max: usize) -> Result<Stabilization> {
    let limit = cramer_psi(i, n_max, order)?;
    let mut threshold = i + 1;
    for n in (i + 1..n_max).rev() {
        if cramer_psi(i, n, order)? != limit {
            threshold = n + 1;
            break;
        }
    }
    Ok(Stabilization { threshold, limit })
}

/// Numeric data at a sample point 0 < t < 1/3: the substitution value
/// z = (t(1-t)^2)^(1/3), the discriminant W = sqrt(4t - 3t^2), the three
/// characteristic roots, the quadratic pair mu2 <= mu3, and the Binet
/// weights a + b + c = 1. W >= 0 fixes the branch, so r2 >= r3.
#[derive(Debug, Clone, Copy)]
pub struct RootData<F> {
    pub t: F,
    pub z: F,
    pub w: F,
    pub r1: F,
    pub r2: F,
    pub r3: F,
    pub mu2: F,
    pub mu3: F,
    pub a: F,
    pub b: F,
    pub c: F,
}

impl<F: Float> RootData<F> {
    pub fn new(t: F) -> Result<Self> {
        let one = F::one();
        let two = F::from(2).expect("small integer fits any float");
        let three = F::from(3).expect("small integer fits any float");
        let four = F::from(4).expect("small integer fits any float");
        if !(t > F::zero() && three * t < one) {
            return Err(Error::TOutOfRange(t.to_f64().unwrap_or(f64::NAN)));
        }
        let z = (t * (one - t).powi(2)).cbrt();
        let w = (four * t - three * t * t).sqrt();
        let r1 = (t - one).powi(2);
        let r2 = t * (two - t + w) / two;
        let r3 = t * (two - t - w) / two;
        let mu2 = (two - t - w) / two;
        let mu3 = (two - t + w) / two;
        let a = (t - one) / (three * t - one);
        let den = (three * t - one) * (three * t - four);
        let b = (three * t * t - four * t - w) / den;
        let c = (three * t * t - four * t + w) / den;
        Ok(RootData { t, z, w, r1, r2, r3, mu2, mu3, a, b, c })
    }
}

/// Relative residual of the Binet decomposition
/// D_h(z) = a r1^h + b r2^h + c r3^h at a sample point. The left side is
/// evaluated exactly (D_h is a polynomial in z^3 = t(1-t)^2, which is
/// rational for the binary-rational t handed in) and rounded once; the right
/// side is straight float arithmetic.
pub fn binet_numeric(t: f64, h: usize) -> Result<f64> {
    let roots = RootData::<f64>::new(t)?;
    let t_exact = BigRational::from_float(t).ok_or(Error::TOutOfRange(t))?;
    let one = BigRational::one();
    let z3 = &t_exact * (&one - &t_exact) * (&one - &t_exact);
    let dh = d_sequence(h).pop().expect("nonempty sequence");
    let exact = dh
        .compress3()
        .expect("determinants are polynomials in z^3")
        .map_coeffs(|c| BigRational::from(c.clone()))
        .eval(&z3)
        .to_f64()
        .expect("determinant value fits in f64");
    let ih = h as i32;
    let binet = roots.a * roots.r1.powi(ih) + roots.b * roots.r2.powi(ih) + roots.c * roots.r3.powi(ih);
    Ok((exact - binet).abs() / exact.abs().max(1.0))
}
