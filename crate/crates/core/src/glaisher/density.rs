//! How often `m·C_m(n) = D_m(n)` holds below a bound `x`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::CoeffRing;
use crate::ring::Integers;

use super::check_m;
use super::epsilon::{epsilon, p_polynomial, EpsilonRoute};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityStats {
    pub m: usize,
    pub x: usize,
    /// `#{n < x : E_m(n) != 0}`
    pub nonzero_count: usize,
    /// `#{n < x : m·C_m(n) = D_m(n)}`
    pub n_x: usize,
    /// `(2^{m-1} - m)·(⌊√(2x)⌋ + 1) + |supp P_m|`, saturating.
    pub window_bound: u64,
    pub bound_satisfied: bool,
}

impl DensityStats {
    /// `N(x)/x` as an unreduced fraction string.
    pub fn ratio_fraction(&self) -> String {
        format!("{}/{}", self.n_x, self.x)
    }

    pub fn ratio(&self) -> f64 {
        self.n_x as f64 / self.x as f64
    }
}

/// Exponents `n < x` with `E_m(n) != 0`, from the triangular route.
pub fn nonzero_support(m: usize, x: usize) -> Result<Vec<usize>> {
    check_m(m)?;
    if x == 0 {
        return Err(Error::Domain("scan bound x must be at least 1".into()));
    }
    let eps = epsilon(m, x - 1, EpsilonRoute::Triangular)?;
    Ok(eps
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !Integers.is_zero(c))
        .map(|(n, _)| n)
        .collect())
}

/// `(2^{m-1} - m)·(⌊√(2x)⌋ + 1) + s_m`.
pub fn window_bound(m: usize, x: usize) -> Result<u64> {
    check_m(m)?;
    let per_window = 1u64
        .checked_shl(m as u32 - 1)
        .filter(|_| m <= 64)
        .map_or(u64::MAX, |p| p - m as u64);
    let windows = (2 * x as u64).isqrt() + 1;
    let support = p_polynomial(m)?
        .coeffs()
        .iter()
        .filter(|c| !Integers.is_zero(c))
        .count() as u64;
    Ok(per_window.saturating_mul(windows).saturating_add(support))
}

pub fn density_report(m: usize, x: usize) -> Result<DensityStats> {
    let nonzero_count = nonzero_support(m, x)?.len();
    let window_bound = window_bound(m, x)?;
    Ok(DensityStats {
        m,
        x,
        nonzero_count,
        n_x: x - nonzero_count,
        window_bound,
        bound_satisfied: nonzero_count as u64 <= window_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eps2_has_single_nonzero() {
        let d = density_report(2, 1000).unwrap();
        assert_eq!(d.nonzero_count, 1);
        assert_eq!(d.n_x, 999);
        assert_eq!(d.ratio_fraction(), "999/1000");
        assert!(d.bound_satisfied);
    }

    #[test]
    fn partition_of_range() {
        for m in 2..6 {
            let d = density_report(m, 300).unwrap();
            assert_eq!(d.n_x + d.nonzero_count, d.x);
        }
    }

    #[test]
    fn zero_bound_rejected() {
        assert!(density_report(3, 0).is_err());
    }
}
