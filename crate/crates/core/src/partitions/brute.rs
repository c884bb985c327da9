//! Literal enumeration of partitions, used as an oracle for the DP tables.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ring::Integer;

use super::{Family, FamilySpec};

pub const BRUTE_FORCE_LIMIT: usize = 40;

/// Visit every partition of `n` as a non-increasing part list.
fn for_each_partition(n: usize, mut visit: impl FnMut(&[usize])) {
    fn go(rem: usize, max: usize, parts: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if rem == 0 {
            visit(parts);
            return;
        }
        for p in (1..=max.min(rem)).rev() {
            parts.push(p);
            go(rem - p, p, parts, visit);
            parts.pop();
        }
    }
    go(n, n, &mut Vec::new(), &mut visit);
}

/// Part -> multiplicity.
fn multiplicities(parts: &[usize]) -> BTreeMap<usize, usize> {
    let mut mult = BTreeMap::new();
    for &p in parts {
        *mult.entry(p).or_insert(0) += 1;
    }
    mult
}

fn is_a(m: usize, mult: &BTreeMap<usize, usize>) -> bool {
    mult.values().all(|&k| k < m)
}

fn is_b(m: usize, mult: &BTreeMap<usize, usize>) -> bool {
    mult.keys().all(|p| p % m != 0)
}

fn is_bj(m: usize, j: usize, mult: &BTreeMap<usize, usize>) -> bool {
    match mult.keys().next_back() {
        Some(&largest) => is_b(m, mult) && largest % m == j,
        None => false,
    }
}

fn is_c(m: usize, mult: &BTreeMap<usize, usize>) -> bool {
    match mult.keys().next_back() {
        Some(&largest) if largest % m == 0 => {
            let j = largest / m;
            mult.range(..=j).all(|(_, &k)| k < m)
        }
        _ => false,
    }
}

/// Smallest part exactly `m` times, every other part fewer than `m` times.
/// Zero is an ordinary key here.
fn is_d(m: usize, mult: &BTreeMap<usize, usize>) -> bool {
    let mut it = mult.iter();
    match it.next() {
        Some((_, &k)) if k == m => it.all(|(_, &k)| k < m),
        _ => false,
    }
}

/// Count partitions of `n` in the family by generating all of them.
/// Refuses `n > 40`.
pub fn brute_force_count(spec: FamilySpec, n: usize) -> Result<Integer> {
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::Guard {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let m = spec.m();
    if spec.family() == Family::C && n == 0 {
        return Ok(Integer::from(1));
    }
    let mut count = 0u64;
    for_each_partition(n, |parts| {
        let mult = multiplicities(parts);
        count += match spec.family() {
            Family::A => is_a(m, &mult) as u64,
            Family::B => is_b(m, &mult) as u64,
            Family::Bj => is_bj(m, spec.j().expect("validated"), &mult) as u64,
            Family::C => is_c(m, &mult) as u64,
            Family::D => {
                // Adjoin 0..=m zero parts and test each extended partition.
                (0..=m)
                    .filter(|&zeros| {
                        let mut ext = mult.clone();
                        if zeros > 0 {
                            ext.insert(0, zeros);
                        }
                        is_d(m, &ext)
                    })
                    .count() as u64
            }
        };
    });
    Ok(Integer::from(count))
}
