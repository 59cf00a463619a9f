//! Partial S-Motzkin paths and the exhaustive enumeration oracle.
//!
//! An S-Motzkin path is a Motzkin path whose non-down steps, read left to
//! right, spell `huhu...hu`. A partial path is any prefix of one; it may end
//! at any height `k >= 0`. Read from right to left, suffixes give the
//! "reverse" partial paths: those are characterized intrinsically by heights
//! staying non-negative and the non-up steps spelling a prefix of `dhdh...`.
//!
//! Counts are split into four families by the kind of the last non-down
//! (forward) or non-up (reverse) step; the empty path counts as family A
//! forward and family C reverse.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::recurrence::CountTable;

/// A single step, with height deltas +1 / 0 / -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Level,
    Down,
}

impl Step {
    pub fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Level => 0,
            Step::Down => -1,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Step::Up => 'u',
            Step::Level => 'h',
            Step::Down => 'd',
        }
    }

    pub fn from_char(c: char) -> Option<Step> {
        match c {
            'u' => Some(Step::Up),
            'h' => Some(Step::Level),
            'd' => Some(Step::Down),
            _ => None,
        }
    }
}

/// Traversal direction: forward reads prefixes, reverse reads suffixes
/// right to left.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Reverse,
}

/// Family of a partial path. A/B classify forward paths by the kind of the
/// last non-down step (up / level); C/D classify reverse paths by the last
/// non-up step (level-or-absent / down).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    A,
    B,
    C,
    D,
}

impl FamilyTag {
    pub fn letter(self) -> char {
        match self {
            FamilyTag::A => 'a',
            FamilyTag::B => 'b',
            FamilyTag::C => 'c',
            FamilyTag::D => 'd',
        }
    }
}

impl FromStr for FamilyTag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "a" | "A" => Ok(FamilyTag::A),
            "b" | "B" => Ok(FamilyTag::B),
            "c" | "C" => Ok(FamilyTag::C),
            "d" | "D" => Ok(FamilyTag::D),
            other => Err(format!("unknown family {other:?} (expected a, b, c or d)")),
        }
    }
}

/// A lattice path as an ordered step sequence; heights are derived.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    pub fn empty() -> Self {
        LatticePath::default()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Height after the last step (0 for the empty path).
    pub fn final_height(&self) -> i64 {
        self.steps.iter().map(|s| s.delta()).sum()
    }

    /// Heights after each prefix, starting from height(0) = 0.
    pub fn heights(&self) -> impl Iterator<Item = i64> + '_ {
        self.steps.iter().scan(0i64, |h, s| {
            *h += s.delta();
            Some(*h)
        })
    }
}

impl FromStr for LatticePath {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        s.chars()
            .map(|c| Step::from_char(c).ok_or_else(|| format!("unknown step {c:?}")))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(LatticePath::new)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

/// Forward validity: heights never negative, and the non-down subsequence is
/// a prefix of `huhu...`.
pub fn is_valid_forward(path: &LatticePath) -> bool {
    let mut height = 0i64;
    let mut expect_level = true;
    for &s in path.steps() {
        height += s.delta();
        if height < 0 {
            return false;
        }
        match s {
            Step::Level => {
                if !expect_level {
                    return false;
                }
                expect_level = false;
            }
            Step::Up => {
                if expect_level {
                    return false;
                }
                expect_level = true;
            }
            Step::Down => {}
        }
    }
    true
}

/// Reverse validity: heights never negative, and the non-up subsequence is a
/// prefix of `dhdh...`.
pub fn is_valid_reverse(path: &LatticePath) -> bool {
    let mut height = 0i64;
    let mut expect_down = true;
    for &s in path.steps() {
        height += s.delta();
        if height < 0 {
            return false;
        }
        match s {
            Step::Down => {
                if !expect_down {
                    return false;
                }
                expect_down = false;
            }
            Step::Level => {
                if expect_down {
                    return false;
                }
                expect_down = true;
            }
            Step::Up => {}
        }
    }
    true
}

/// Family of a valid partial path. Forward: A if the last non-down step is
/// up or absent, B if level. Reverse: C if the last non-up step is level or
/// absent, D if down.
pub fn classify(path: &LatticePath, direction: Direction) -> Result<FamilyTag> {
    match direction {
        Direction::Forward => {
            if !is_valid_forward(path) {
                return Err(Error::InvalidPath(direction));
            }
            let last = path.steps().iter().rev().find(|s| **s != Step::Down);
            Ok(match last {
                Some(Step::Level) => FamilyTag::B,
                _ => FamilyTag::A,
            })
        }
        Direction::Reverse => {
            if !is_valid_reverse(path) {
                return Err(Error::InvalidPath(direction));
            }
            let last = path.steps().iter().rev().find(|s| **s != Step::Up);
            Ok(match last {
                Some(Step::Down) => FamilyTag::D,
                _ => FamilyTag::C,
            })
        }
    }
}

/// Hard cap for the exhaustive oracle; the pruned search tree at 16 is still
/// only a few hundred thousand nodes.
pub const ORACLE_MAX_N: usize = 16;

/// Count valid partial paths of every length `n <= n_max` and final height
/// `k`, split by family, by depth-first generation with pruning on both
/// validity conditions. Returns (A, B) tables forward and (C, D) reverse.
pub fn oracle_counts(direction: Direction, n_max: usize) -> Result<(CountTable, CountTable)> {
    if n_max > ORACLE_MAX_N {
        return Err(Error::OracleBound { requested: n_max, limit: ORACLE_MAX_N });
    }
    let mut first = vec![vec![BigInt::ZERO; n_max + 1]; n_max + 1];
    let mut second = vec![vec![BigInt::ZERO; n_max + 1]; n_max + 1];

    // State carried down the tree: depth, height, whether the alternating
    // word expects its first-of-pair character next, and whether the current
    // node belongs to the first family of the pair.
    struct Dfs<'a> {
        n_max: usize,
        direction: Direction,
        first: &'a mut Vec<Vec<BigInt>>,
        second: &'a mut Vec<Vec<BigInt>>,
    }

    impl Dfs<'_> {
        fn record(&mut self, n: usize, h: i64, first_family: bool) {
            let k = h as usize;
            debug_assert!(k <= n, "height cannot exceed length");
            let table = if first_family { &mut *self.first } else { &mut *self.second };
            table[n][k] += BigInt::one();
        }

        fn walk(&mut self, n: usize, h: i64, expect_first: bool, first_family: bool) {
            self.record(n, h, first_family);
            if n == self.n_max {
                return;
            }
            match self.direction {
                Direction::Forward => {
                    // non-down word huhu...: level when expected first,
                    // up otherwise; down keeps the family.
                    if h >= 1 {
                        self.walk(n + 1, h - 1, expect_first, first_family);
                    }
                    if expect_first {
                        self.walk(n + 1, h, false, false); // level -> family B
                    } else {
                        self.walk(n + 1, h + 1, true, true); // up -> family A
                    }
                }
                Direction::Reverse => {
                    // non-up word dhdh...: down when expected first,
                    // level otherwise; up keeps the family.
                    self.walk(n + 1, h + 1, expect_first, first_family);
                    if expect_first {
                        if h >= 1 {
                            self.walk(n + 1, h - 1, false, false); // down -> family D
                        }
                    } else {
                        self.walk(n + 1, h, true, true); // level -> family C
                    }
                }
            }
        }
    }

    Dfs { n_max, direction, first: &mut first, second: &mut second }.walk(0, 0, true, true);

    // first/second hold (A, B) forward and (C, D) reverse; the empty path
    // starts in the first family either way.
    let (fam1, fam2) = match direction {
        Direction::Forward => (FamilyTag::A, FamilyTag::B),
        Direction::Reverse => (FamilyTag::C, FamilyTag::D),
    };
    let to_table = |family: FamilyTag, grid: Vec<Vec<BigInt>>| {
        let rows = grid
            .into_iter()
            .enumerate()
            .map(|(n, row)| row.into_iter().take(n + 1).collect())
            .collect();
        CountTable::from_rows(family, rows)
    };
    Ok((to_table(fam1, first), to_table(fam2, second)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn path(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    #[test]
    fn forward_validity_hand_cases() {
        assert!(is_valid_forward(&LatticePath::empty()));
        assert!(is_valid_forward(&path("hud")));
        assert!(!is_valid_forward(&path("u")));
        assert!(!is_valid_forward(&path("hd")));
        assert!(is_valid_forward(&path("huhd")));
        assert!(!is_valid_forward(&path("hh")));
        assert!(!is_valid_forward(&path("huu")));
    }

    #[test]
    fn reverse_validity_hand_cases() {
        assert!(is_valid_reverse(&LatticePath::empty()));
        assert!(is_valid_reverse(&path("u")));
        assert!(!is_valid_reverse(&path("h")));
        assert!(!is_valid_reverse(&path("d")));
        assert!(is_valid_reverse(&path("udh")));
        assert!(is_valid_reverse(&path("uud")));
        assert_eq!(path("uud").final_height(), 1);
        assert!(!is_valid_reverse(&path("udd")));
    }

    #[test]
    fn classification() {
        assert_eq!(classify(&LatticePath::empty(), Direction::Forward).unwrap(), FamilyTag::A);
        assert_eq!(classify(&LatticePath::empty(), Direction::Reverse).unwrap(), FamilyTag::C);
        assert_eq!(classify(&path("hud"), Direction::Forward).unwrap(), FamilyTag::A);
        assert_eq!(classify(&path("h"), Direction::Forward).unwrap(), FamilyTag::B);
        assert_eq!(classify(&path("ud"), Direction::Reverse).unwrap(), FamilyTag::D);
        assert_eq!(classify(&path("udh"), Direction::Reverse).unwrap(), FamilyTag::C);
        assert!(classify(&path("u"), Direction::Forward).is_err());
        assert!(classify(&path("h"), Direction::Reverse).is_err());
    }

    #[test]
    fn oracle_forward_small_values() {
        let (a, b) = oracle_counts(Direction::Forward, 4).unwrap();
        assert_eq!(a.get(0, 0), BigInt::from(1));
        assert_eq!(b.get(0, 0), BigInt::ZERO);
        assert_eq!(b.get(1, 0), BigInt::from(1));
        assert_eq!(a.get(2, 1), BigInt::from(1));
        assert_eq!(a.get(3, 0), BigInt::from(1));
        assert_eq!(b.get(4, 0), BigInt::from(2));
        assert_eq!(a.get(4, 2), BigInt::from(1));
    }

    #[test]
    fn oracle_reverse_small_values() {
        let (c, d) = oracle_counts(Direction::Reverse, 3).unwrap();
        assert_eq!(c.get(0, 0), BigInt::from(1));
        assert_eq!(c.get(1, 1), BigInt::from(1));
        assert_eq!(d.get(2, 0), BigInt::from(1));
        assert_eq!(d.get(3, 1), BigInt::from(2));
        assert_eq!(c.get(3, 0), BigInt::from(1));
    }

    #[test]
    fn oracle_bound_guard() {
        assert!(matches!(
            oracle_counts(Direction::Forward, ORACLE_MAX_N + 1),
            Err(Error::OracleBound { .. })
        ));
    }

    /// The pruned DFS must agree with filtering the full 3^n step words
    /// through the validity predicates.
    #[test]
    fn oracle_matches_exhaustive_filter() {
        let n_max = 7;
        for direction in [Direction::Forward, Direction::Reverse] {
            let (t1, t2) = oracle_counts(direction, n_max).unwrap();
            let mut count = vec![vec![vec![BigInt::ZERO; n_max + 1]; n_max + 1]; 2];
            for n in 0..=n_max {
                for code in 0..3usize.pow(n as u32) {
                    let mut c = code;
                    let steps: Vec<Step> = (0..n)
                        .map(|_| {
                            let s = [Step::Up, Step::Level, Step::Down][c % 3];
                            c /= 3;
                            s
                        })
                        .collect();
                    let p = LatticePath::new(steps);
                    let valid = match direction {
                        Direction::Forward => is_valid_forward(&p),
                        Direction::Reverse => is_valid_reverse(&p),
                    };
                    if !valid {
                        continue;
                    }
                    let fam = classify(&p, direction).unwrap();
                    let idx = usize::from(matches!(fam, FamilyTag::B | FamilyTag::D));
                    count[idx][n][p.final_height() as usize] += BigInt::one();
                }
            }
            for n in 0..=n_max {
                for k in 0..=n {
                    assert_eq!(t1.get(n, k), count[0][n][k], "{direction:?} first table at ({n},{k})");
                    assert_eq!(t2.get(n, k), count[1][n][k], "{direction:?} second table at ({n},{k})");
                }
            }
        }
    }

    /// Counting recurrences hold on the oracle tables, with out-of-range
    /// indices read as zero.
    #[test]
    fn oracle_tables_satisfy_recurrences() {
        let n_max = 10;
        let (a, b) = oracle_counts(Direction::Forward, n_max).unwrap();
        for n in 1..=n_max {
            for k in 0..=n {
                let bm = if k == 0 { BigInt::ZERO } else { b.get(n - 1, k - 1) };
                assert_eq!(a.get(n, k), bm + a.get(n - 1, k + 1), "a at ({n},{k})");
                assert_eq!(b.get(n, k), a.get(n - 1, k) + b.get(n - 1, k + 1), "b at ({n},{k})");
            }
        }
        let (c, d) = oracle_counts(Direction::Reverse, n_max).unwrap();
        for n in 1..=n_max {
            for k in 0..=n {
                let cm = if k == 0 { BigInt::ZERO } else { c.get(n - 1, k - 1) };
                let dm = if k == 0 { BigInt::ZERO } else { d.get(n - 1, k - 1) };
                assert_eq!(c.get(n, k), cm + d.get(n - 1, k), "c at ({n},{k})");
                assert_eq!(d.get(n, k), dm + c.get(n - 1, k + 1), "d at ({n},{k})");
            }
        }
        // both diagonals enumerate complete S-Motzkin paths
        for n in 0..=n_max {
            assert_eq!(a.get(n, 0), c.get(n, 0), "a vs c at n={n}");
        }
    }

    /// Counts vanish off their residue classes mod 3.
    #[test]
    fn oracle_residue_classes() {
        let n_max = 10;
        let (a, b) = oracle_counts(Direction::Forward, n_max).unwrap();
        let (c, d) = oracle_counts(Direction::Reverse, n_max).unwrap();
        for n in 0..=n_max {
            for k in 0..=n {
                let (n3, k3) = (n as i64, k as i64);
                if (n3 - 2 * k3).rem_euclid(3) != 0 {
                    assert!(a.get(n, k).is_zero(), "a at ({n},{k})");
                }
                if (n3 - 2 * k3 - 1).rem_euclid(3) != 0 {
                    assert!(b.get(n, k).is_zero(), "b at ({n},{k})");
                }
                if (n3 - k3).rem_euclid(3) != 0 {
                    assert!(c.get(n, k).is_zero(), "c at ({n},{k})");
                }
                if (n3 - k3 + 1).rem_euclid(3) != 0 {
                    assert!(d.get(n, k).is_zero(), "d at ({n},{k})");
                }
            }
        }
    }
}
