//! The correction series `ε_m(q) = Σ E_m(n) q^n`, by five routes.
//!
//! * `Definition`: `Σ_n q^{mn} (q^{n+1};q)_∞ Σ_{j=1}^{m-1} (ζ_m^j q^{n+1};q)_∞`
//!   expanded in `Z[ζ_m]` and mapped back to `Z`.
//! * `Triangular`: `Σ_k (-1)^k χ_m(k) q^{k(k+1)/2} (q^{k+1};q)_{m-1}`.
//! * `QBinomial`: `P_m(q) + Σ_k (-1)^k q^{k(k+1)/2} Σ_j χ_m(k-j) ([m-1, j]_q - 1)`.
//! * `Identity`: `m·C_m(q) - D_m(q)` from the generating functions.
//! * `Closed3` (m = 3 only): `2 - q - 2q^2 + Σ_{n≥2} (-1)^n χ_3(n-1) q^{n(n+1)/2 + 1}`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly;
use crate::ring::{chi_small, Cyclotomic, Integer, Integers};
use crate::series::{map_ring, qbinomial_poly, Series};

use super::check_m;
use super::gf::{gf_c, gf_d};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EpsilonRoute {
    Definition,
    Triangular,
    QBinomial,
    Identity,
    Closed3,
}

impl EpsilonRoute {
    pub const ALL: [EpsilonRoute; 5] = [
        EpsilonRoute::Definition,
        EpsilonRoute::Triangular,
        EpsilonRoute::QBinomial,
        EpsilonRoute::Identity,
        EpsilonRoute::Closed3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EpsilonRoute::Definition => "definition",
            EpsilonRoute::Triangular => "triangular",
            EpsilonRoute::QBinomial => "qbinomial",
            EpsilonRoute::Identity => "identity",
            EpsilonRoute::Closed3 => "closed3",
        }
    }

    pub fn valid_for(self, m: usize) -> bool {
        m >= 2 && (self != EpsilonRoute::Closed3 || m == 3)
    }
}

impl fmt::Display for EpsilonRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EpsilonRoute {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        EpsilonRoute::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown epsilon route {s:?}")))
    }
}

pub(crate) fn triangular(k: usize) -> usize {
    k * (k + 1) / 2
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Add `c · q^offset · p` into `acc`, dropping terms above its precision.
fn add_poly_at(acc: &mut Series, p: &[Integer], offset: usize, c: i64) {
    let s = Series::from_prefix(Integers, p.to_vec(), p.len().saturating_sub(1));
    acc.add_shifted_scaled(&s, offset, &Integer::from(c));
}

pub fn epsilon(m: usize, precision: usize, route: EpsilonRoute) -> Result<Series> {
    check_m(m)?;
    if !route.valid_for(m) {
        return Err(Error::Domain(format!(
            "route {route} is not available for m = {m}"
        )));
    }
    match route {
        EpsilonRoute::Definition => by_definition(m, precision),
        EpsilonRoute::Triangular => Ok(by_triangular(m, precision)),
        EpsilonRoute::QBinomial => by_qbinomial(m, precision),
        EpsilonRoute::Identity => {
            let c = gf_c(m, precision)?.scale(&Integer::from(m));
            c.sub(&gf_d(m, precision)?)
        }
        EpsilonRoute::Closed3 => Ok(closed3(precision)),
    }
}

fn by_definition(m: usize, precision: usize) -> Result<Series> {
    let ring = Cyclotomic::new(m)?;
    let roots: Vec<_> = (1..m as i64).map(|j| ring.root_power(j)).collect();
    // partial[j] = (q^{n+1};q)_∞ (ζ^j q^{n+1};q)_∞, grown as n decreases.
    let mut partial = vec![Series::one(ring.clone(), precision); m - 1];
    let mut total = Series::zero(ring.clone(), precision);
    let one = Integer::one();
    for n in (0..=precision).rev() {
        let k = n + 1;
        if k <= precision {
            for (acc, root) in partial.iter_mut().zip(&roots) {
                acc.mul_one_minus(k);
                acc.mul_linear_factor(root, k);
            }
        }
        if m * n <= precision {
            for acc in &partial {
                total.add_shifted_scaled(acc, m * n, &one);
            }
        }
    }
    map_ring(&total)
}

fn by_triangular(m: usize, precision: usize) -> Series {
    let mut total = Series::zero(Integers, precision);
    let mut k = 0;
    while triangular(k) <= precision {
        let offset = triangular(k);
        let room = precision - offset;
        let mut factor = vec![Integer::one()];
        for i in (k + 1)..(k + m) {
            if i > room {
                break;
            }
            factor = poly::mul(&factor, &one_minus_q_pow(i));
            factor.truncate(room + 1);
        }
        add_poly_at(
            &mut total,
            &factor,
            offset,
            sign(k) * chi_small(m, k as i64),
        );
        k += 1;
    }
    total
}

fn one_minus_q_pow(k: usize) -> Vec<Integer> {
    let mut p = vec![Integer::zero(); k + 1];
    p[0] = Integer::one();
    p[k] = -Integer::one();
    p
}

/// `[m-1 over j]_q` for `j = 0..m`.
fn gaussian_row(m: usize) -> Vec<Vec<Integer>> {
    (0..m)
        .map(|j| qbinomial_poly((m - 1 - j) as i64, j as i64).expect("non-negative arguments"))
        .collect()
}

/// `P_m(q) = -Σ_{j=0}^{m-1} [m-1 over j]_q Σ_{k=0}^{j-1} (-1)^k χ_m(k-j) q^{k(k+1)/2}`
/// as an exact polynomial. The returned series has precision equal to the
/// degree (0 for a constant).
pub fn p_polynomial(m: usize) -> Result<Series> {
    check_m(m)?;
    let mut acc: Vec<Integer> = vec![Integer::zero()];
    for (j, gauss) in gaussian_row(m).iter().enumerate() {
        let mut inner = vec![Integer::zero(); triangular(j.saturating_sub(1)) + 1];
        for k in 0..j {
            inner[triangular(k)] += sign(k) * chi_small(m, k as i64 - j as i64);
        }
        let term = poly::mul(gauss, &inner);
        if acc.len() < term.len() {
            acc.resize(term.len(), Integer::zero());
        }
        for (a, t) in acc.iter_mut().zip(&term) {
            *a -= t;
        }
    }
    poly::trim(&mut acc);
    let degree = acc.len() - 1;
    Ok(Series::from_prefix(Integers, acc, degree))
}

fn by_qbinomial(m: usize, precision: usize) -> Result<Series> {
    let gauss = gaussian_row(m);
    // window[r] = Σ_j χ_m(r - j) ([m-1 over j]_q - 1), depending only on k mod m.
    let windows: Vec<Vec<Integer>> = (0..m)
        .map(|r| {
            let mut w: Vec<Integer> = Vec::new();
            for (j, g) in gauss.iter().enumerate() {
                let c = chi_small(m, r as i64 - j as i64);
                if w.len() < g.len() {
                    w.resize(g.len(), Integer::zero());
                }
                for (d, coef) in g.iter().enumerate() {
                    let shifted = if d == 0 {
                        coef - Integer::one()
                    } else {
                        coef.clone()
                    };
                    w[d] += shifted * c;
                }
            }
            w
        })
        .collect();

    let p = p_polynomial(m)?;
    let mut total = Series::from_prefix(Integers, p.into_coeffs(), precision);
    let mut k = 0;
    while triangular(k) <= precision {
        add_poly_at(&mut total, &windows[k % m], triangular(k), sign(k));
        k += 1;
    }
    Ok(total)
}

fn closed3(precision: usize) -> Series {
    let mut coeffs: Vec<Integer> = [2, -1, -2].into_iter().map(Integer::from).collect();
    coeffs.resize(precision.max(2) + 1, Integer::zero());
    let mut n = 2;
    while triangular(n) < precision {
        coeffs[triangular(n) + 1] += sign(n) * chi_small(3, n as i64 - 1);
        n += 1;
    }
    Series::from_prefix(Integers, coeffs, precision)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EPS3: [i64; 13] = [2, -1, -2, 0, -1, 0, 0, 1, 0, 0, 0, 2, 0];

    #[test]
    fn eps3_every_route() {
        for route in EpsilonRoute::ALL {
            let s = epsilon(3, 12, route).unwrap();
            assert_eq!(s.to_i64s().unwrap(), EPS3, "route {route}");
        }
    }

    #[test]
    fn eps2_is_one() {
        let s = epsilon(2, 20, EpsilonRoute::Triangular).unwrap();
        assert_eq!(s, Series::one(Integers, 20));
    }

    #[test]
    fn closed3_rejected_elsewhere() {
        assert!(matches!(
            epsilon(4, 10, EpsilonRoute::Closed3),
            Err(Error::Domain(_))
        ));
        assert!(epsilon(1, 10, EpsilonRoute::Triangular).is_err());
    }

    #[test]
    fn p_polynomial_small() {
        assert_eq!(p_polynomial(2).unwrap().to_i64s().unwrap(), vec![1]);
        assert_eq!(p_polynomial(3).unwrap().to_i64s().unwrap(), vec![2]);
    }

    #[test]
    fn tiny_precisions() {
        for route in EpsilonRoute::ALL {
            for n in 0..3 {
                let s = epsilon(3, n, route).unwrap();
                assert_eq!(s.to_i64s().unwrap(), EPS3[..=n], "route {route}, N = {n}");
            }
        }
    }

    #[test]
    fn route_names_round_trip() {
        for r in EpsilonRoute::ALL {
            assert_eq!(r.name().parse::<EpsilonRoute>().unwrap(), r);
        }
        assert!("fft".parse::<EpsilonRoute>().is_err());
    }
}
