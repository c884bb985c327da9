//! Partition counters for the families `A_m`, `B_m`, `B_m^(j)`, `C_m` and
//! `D_m`, computed by dynamic programming over parts. Nothing here touches
//! the series module, so these tables serve as the combinatorial side of
//! every generating-function check.
//!
//! Conventions at `n = 0`: `A_m(0) = B_m(0) = C_m(0) = D_m(0) = 1` and
//! `B_m^(j)(0) = 0`.

mod brute;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::Integer;

pub use brute::{brute_force_count, BRUTE_FORCE_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// Parts repeat fewer than `m` times.
    A,
    /// No part divisible by `m`.
    B,
    /// As `B`, with largest part congruent to `j` modulo `m`.
    Bj,
    /// Largest part `m·j`; parts up to `j` repeat fewer than `m` times.
    C,
    /// Non-negative parts; the smallest occurs exactly `m` times, the others
    /// fewer than `m` times.
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
            Family::Bj => "Bj",
            Family::C => "C",
            Family::D => "D",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "Bj" | "BJ" | "bj" => Ok(Family::Bj),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::Domain(format!("unknown family {other:?}"))),
        }
    }
}

/// A validated family selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    family: Family,
    m: usize,
    j: Option<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, m: usize, j: Option<usize>) -> Result<Self> {
        check_m(m)?;
        match (family, j) {
            (Family::Bj, Some(j)) if (1..m).contains(&j) => {}
            (Family::Bj, Some(j)) => {
                return Err(Error::Domain(format!(
                    "j must lie in [1, {}], got {j}",
                    m - 1
                )))
            }
            (Family::Bj, None) => return Err(Error::Domain("family Bj requires j".into())),
            (_, Some(_)) => return Err(Error::Domain(format!("family {family} does not take j"))),
            (_, None) => {}
        }
        Ok(FamilySpec { family, m, j })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn j(&self) -> Option<usize> {
        self.j
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.j {
            Some(j) => write!(f, "{}_{}^({j})", self.family, self.m),
            None => write!(f, "{}_{}", self.family, self.m),
        }
    }
}

/// Exact counts `0..=n_max` for one family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    spec: FamilySpec,
    counts: Vec<Integer>,
}

impl CountTable {
    pub fn spec(&self) -> FamilySpec {
        self.spec
    }

    pub fn n_max(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[Integer] {
        &self.counts
    }

    pub fn get(&self, n: usize) -> Option<&Integer> {
        self.counts.get(n)
    }
}

fn check_m(m: usize) -> Result<()> {
    if m < 2 {
        Err(Error::Domain(format!("m must be at least 2, got {m}")))
    } else {
        Ok(())
    }
}

/// Counts for `n = 0..=n_max` in one pass.
pub fn count_table(spec: FamilySpec, n_max: usize) -> CountTable {
    let m = spec.m;
    let counts = match spec.family {
        Family::A => bounded_mult_table(m, n_max, 1, None),
        Family::B => regular_table(m, n_max),
        Family::Bj => bj_table(m, spec.j.expect("validated"), n_max),
        Family::C => c_table(m, n_max),
        Family::D => d_table(m, n_max),
    };
    CountTable { spec, counts }
}

/// Fold part `p` into `table` allowing it 0..m-1 times. Runs downwards so
/// every read sees the table from before this part.
fn add_bounded_part(table: &mut [Integer], m: usize, p: usize) {
    for t in (p..table.len()).rev() {
        let (lo, hi) = table.split_at_mut(t);
        for c in 1..m {
            match t.checked_sub(c * p) {
                Some(r) => hi[0] += &lo[r],
                None => break,
            }
        }
    }
}

/// Fold part `p` into `table` with unlimited multiplicity.
fn add_free_part(table: &mut [Integer], p: usize) {
    for t in p..table.len() {
        let (lo, hi) = table.split_at_mut(t);
        hi[0] += &lo[t - p];
    }
}

/// Undo `add_free_part(table, p)`.
fn remove_free_part(table: &mut [Integer], p: usize) {
    for t in (p..table.len()).rev() {
        let (lo, hi) = table.split_at_mut(t);
        hi[0] -= &lo[t - p];
    }
}

fn unit_table(n_max: usize) -> Vec<Integer> {
    let mut t = vec![Integer::zero(); n_max + 1];
    t[0] = Integer::one();
    t
}

/// Partitions into parts in `[min_part, max_part]`, each used fewer than `m` times.
fn bounded_mult_table(
    m: usize,
    n_max: usize,
    min_part: usize,
    max_part: Option<usize>,
) -> Vec<Integer> {
    let mut table = unit_table(n_max);
    let hi = max_part.map_or(n_max, |p| p.min(n_max));
    for p in min_part.max(1)..=hi {
        add_bounded_part(&mut table, m, p);
    }
    table
}

fn regular_table(m: usize, n_max: usize) -> Vec<Integer> {
    let mut table = unit_table(n_max);
    for p in (1..=n_max).filter(|p| p % m != 0) {
        add_free_part(&mut table, p);
    }
    table
}

fn bj_table(m: usize, j: usize, n_max: usize) -> Vec<Integer> {
    let mut out = vec![Integer::zero(); n_max + 1];
    // `below` counts m-regular partitions with parts <= largest.
    let mut below = unit_table(n_max);
    for largest in 1..=n_max {
        if largest % m == 0 {
            continue;
        }
        add_free_part(&mut below, largest);
        if largest % m == j {
            for n in largest..=n_max {
                out[n] += &below[n - largest];
            }
        }
    }
    out
}

fn c_table(m: usize, n_max: usize) -> Vec<Integer> {
    let mut out = vec![Integer::zero(); n_max + 1];
    out[0] = Integer::one();
    // `rest` counts partitions with parts in [1, j] used fewer than m times
    // and parts in [j + 1, mj] unrestricted. Moving from j - 1 to j turns
    // part j from unrestricted to bounded and frees parts up to mj.
    let mut rest = unit_table(n_max);
    let mut j = 1;
    while m * j <= n_max {
        if j > 1 {
            remove_free_part(&mut rest, j);
        }
        add_bounded_part(&mut rest, m, j);
        for p in (m * (j - 1)).max(j) + 1..=m * j {
            add_free_part(&mut rest, p);
        }
        for (n, c) in out.iter_mut().enumerate().skip(m * j) {
            *c += &rest[n - m * j];
        }
        j += 1;
    }
    out
}

fn d_table(m: usize, n_max: usize) -> Vec<Integer> {
    let mut out = vec![Integer::zero(); n_max + 1];
    // `above` counts partitions into parts > s, each fewer than m times.
    let mut above = unit_table(n_max);
    for s in (0..=n_max).rev() {
        if s < n_max {
            add_bounded_part(&mut above, m, s + 1);
        }
        if m * s <= n_max {
            for n in (m * s)..=n_max {
                out[n] += &above[n - m * s];
            }
        }
    }
    out
}

/// Partitions of `n` into parts in `[min_part, max_part]` (unbounded when
/// `None`), each part used at most `m - 1` times.
pub fn count_bounded_mult(
    m: usize,
    n: usize,
    min_part: usize,
    max_part: Option<usize>,
) -> Result<Integer> {
    check_m(m)?;
    if min_part == 0 {
        return Err(Error::Domain("min_part must be positive".into()));
    }
    Ok(bounded_mult_table(m, n, min_part, max_part).swap_remove(n))
}

fn single(spec: FamilySpec, n: usize) -> Integer {
    count_table(spec, n).counts.swap_remove(n)
}

pub fn count_a(m: usize, n: usize) -> Result<Integer> {
    Ok(single(FamilySpec::new(Family::A, m, None)?, n))
}

pub fn count_b(m: usize, n: usize) -> Result<Integer> {
    Ok(single(FamilySpec::new(Family::B, m, None)?, n))
}

pub fn count_bj(m: usize, j: usize, n: usize) -> Result<Integer> {
    Ok(single(FamilySpec::new(Family::Bj, m, Some(j))?, n))
}

pub fn count_c(m: usize, n: usize) -> Result<Integer> {
    Ok(single(FamilySpec::new(Family::C, m, None)?, n))
}

pub fn count_d(m: usize, n: usize) -> Result<Integer> {
    Ok(single(FamilySpec::new(Family::D, m, None)?, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn i(n: i64) -> Integer {
        Integer::from(n)
    }

    #[test]
    fn bounded_multiplicity() {
        assert_eq!(count_bounded_mult(3, 4, 1, None).unwrap(), i(4));
        assert_eq!(count_bounded_mult(2, 5, 1, None).unwrap(), i(3));
        for m in 2..6 {
            assert_eq!(count_bounded_mult(m, 0, 1, None).unwrap(), i(1));
        }
        assert_eq!(count_bounded_mult(2, 5, 2, Some(3)).unwrap(), i(1));
    }

    #[test]
    fn family_a_and_b() {
        assert_eq!(count_a(3, 4).unwrap(), i(4));
        assert_eq!(count_a(2, 5).unwrap(), i(3));
        assert_eq!(count_a(5, 3).unwrap(), i(3));
        assert_eq!(count_b(3, 4).unwrap(), i(4));
        assert_eq!(count_b(2, 5).unwrap(), i(3));
        assert_eq!(count_b(3, 5).unwrap(), i(5));
    }

    #[test]
    fn family_bj() {
        assert_eq!(count_bj(3, 1, 4).unwrap(), i(2));
        assert_eq!(count_bj(3, 2, 4).unwrap(), i(2));
        assert_eq!(count_bj(3, 2, 5).unwrap(), i(3));
        assert_eq!(count_bj(3, 1, 0).unwrap(), i(0));
    }

    #[test]
    fn family_c() {
        assert_eq!(count_c(3, 5).unwrap(), i(2));
        assert_eq!(count_c(3, 6).unwrap(), i(3));
        assert_eq!(count_c(3, 4).unwrap(), i(1));
        assert_eq!(count_c(4, 0).unwrap(), i(1));
    }

    #[test]
    fn family_d() {
        assert_eq!(count_d(3, 3).unwrap(), i(3));
        assert_eq!(count_d(3, 4).unwrap(), i(4));
        assert_eq!(count_d(3, 5).unwrap(), i(6));
        assert_eq!(count_d(2, 0).unwrap(), i(1));
    }

    #[test]
    fn spec_validation() {
        assert!(FamilySpec::new(Family::A, 1, None).is_err());
        assert!(FamilySpec::new(Family::Bj, 3, None).is_err());
        assert!(FamilySpec::new(Family::Bj, 3, Some(3)).is_err());
        assert!(FamilySpec::new(Family::Bj, 3, Some(0)).is_err());
        assert!(FamilySpec::new(Family::C, 3, Some(1)).is_err());
        assert!(FamilySpec::new(Family::Bj, 3, Some(2)).is_ok());
        assert_eq!("Bj".parse::<Family>().unwrap(), Family::Bj);
        assert!("E".parse::<Family>().is_err());
    }

    #[test]
    fn table_prefix_matches_single_counts() {
        let spec = FamilySpec::new(Family::C, 3, None).unwrap();
        let t = count_table(spec, 6);
        let expected: Vec<Integer> = [1, 0, 0, 1, 1, 2, 3].iter().map(|&c| i(c)).collect();
        assert_eq!(t.counts(), expected.as_slice());
        assert_eq!(t.n_max(), 6);
    }
}
