//! Dynamic-programming evaluation of the four counting families.
//!
//! Row n at height k depends on row n-1 at height k+1, so rows are computed
//! on a trapezoid that is widest at n = 0 and shrinks by one column per row;
//! this makes every published entry exact without an infinite table. All
//! arithmetic is arbitrary precision: the counts grow like 6.75^(n/3).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::closed_form::binom;
use crate::path::FamilyTag;

/// Triangular table of exact counts `entries[n][k]` for `0 <= k <= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    family: FamilyTag,
    rows: Vec<Vec<BigInt>>,
}

impl CountTable {
    pub(crate) fn from_rows(family: FamilyTag, rows: Vec<Vec<BigInt>>) -> Self {
        for (n, row) in rows.iter().enumerate() {
            debug_assert_eq!(row.len(), n + 1);
        }
        CountTable { family, rows }
    }

    pub fn family(&self) -> FamilyTag {
        self.family
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// Entry at (n, k); zero for k > n. Panics if n exceeds the table.
    pub fn get(&self, n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::ZERO;
        }
        self.rows[n][k].clone()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }
}

/// Shared trapezoidal fill. `seed_first` is the (0,0) entry of the first
/// table; `step` computes the pair of entries at (n, k) from slices holding
/// row n-1 of both tables (indexable at k-1, k, k+1 with k-1 guarded).
fn fill_pair(
    n_max: usize,
    families: (FamilyTag, FamilyTag),
    step: impl Fn(&[BigInt], &[BigInt], usize) -> (BigInt, BigInt),
) -> (CountTable, CountTable) {
    let width = |n: usize| 2 * n_max - n + 1;
    let mut prev_first = vec![BigInt::ZERO; width(0)];
    let mut prev_second = vec![BigInt::ZERO; width(0)];
    prev_first[0] = BigInt::one();

    let mut rows_first = vec![vec![BigInt::one()]];
    let mut rows_second = vec![vec![BigInt::ZERO]];
    for n in 1..=n_max {
        let mut cur_first = Vec::with_capacity(width(n));
        let mut cur_second = Vec::with_capacity(width(n));
        for k in 0..width(n) {
            let (f, s) = step(&prev_first, &prev_second, k);
            cur_first.push(f);
            cur_second.push(s);
        }
        rows_first.push(cur_first[..=n].to_vec());
        rows_second.push(cur_second[..=n].to_vec());
        prev_first = cur_first;
        prev_second = cur_second;
    }
    (
        CountTable::from_rows(families.0, rows_first),
        CountTable::from_rows(families.1, rows_second),
    )
}

/// Forward families from a(0,0)=1, b(0,0)=0 and
/// a(n,k) = b(n-1,k-1) + a(n-1,k+1), b(n,k) = a(n-1,k) + b(n-1,k+1).
pub fn ab_tables(n_max: usize) -> (CountTable, CountTable) {
    fill_pair(n_max, (FamilyTag::A, FamilyTag::B), |pa, pb, k| {
        let bm = if k == 0 { BigInt::ZERO } else { pb[k - 1].clone() };
        let a = bm + &pa[k + 1];
        let b = pa[k].clone() + &pb[k + 1];
        (a, b)
    })
}

/// Reverse families from c(0,0)=1, d(0,0)=0 and
/// c(n,k) = c(n-1,k-1) + d(n-1,k), d(n,k) = d(n-1,k-1) + c(n-1,k+1).
pub fn cd_tables(n_max: usize) -> (CountTable, CountTable) {
    fill_pair(n_max, (FamilyTag::C, FamilyTag::D), |pc, pd, k| {
        let cm = if k == 0 { BigInt::ZERO } else { pc[k - 1].clone() };
        let dm = if k == 0 { BigInt::ZERO } else { pd[k - 1].clone() };
        let c = cm + &pd[k];
        let d = dm + &pc[k + 1];
        (c, d)
    })
}

/// Number of complete S-Motzkin paths with m steps of each kind:
/// C(3m, m) / (2m + 1), always an exact integer (the ternary numbers).
pub fn smotzkin_count(m: u64) -> BigInt {
    let (q, r) = binom(3 * m, m).div_rem(&BigInt::from(2 * m + 1));
    debug_assert!(r.is_zero(), "C(3m,m) is divisible by 2m+1");
    q
}
