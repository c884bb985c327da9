//! Generating functions of the partition families as truncated series.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ring::{Integer, Integers};
use crate::series::{inv_pochhammer, pochhammer, Count, PochSpec, Series};

use super::check_m;

/// Which product form of the `m`-regular generating function to expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegularForm {
    /// `Π_{i≥1} (1 + q^i + … + q^{(m-1)i})`
    AProduct,
    /// `Π_{m∤k} 1/(1 - q^k)`
    BProduct,
}

impl fmt::Display for RegularForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RegularForm::AProduct => "A_product",
            RegularForm::BProduct => "B_product",
        })
    }
}

impl FromStr for RegularForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "A_product" => Ok(RegularForm::AProduct),
            "B" | "B_product" => Ok(RegularForm::BProduct),
            _ => Err(Error::Domain(format!("unknown product form {s:?}"))),
        }
    }
}

/// Multiply in place by `1 + q^i + … + q^{(m-1)i}`.
fn mul_geometric_block(s: &mut Series, i: usize, m: usize) {
    let n = s.precision();
    if i > n {
        return;
    }
    let mut c: Vec<Integer> = s.coeffs().to_vec();
    for t in (i..=n).rev() {
        let mut acc = Integer::from(0);
        for k in 1..m {
            match t.checked_sub(k * i) {
                Some(r) => acc += &c[r],
                None => break,
            }
        }
        c[t] += acc;
    }
    *s = Series::from_prefix(Integers, c, n);
}

pub fn gf_regular(m: usize, which: RegularForm, precision: usize) -> Result<Series> {
    check_m(m)?;
    let mut s = Series::one(Integers, precision);
    match which {
        RegularForm::AProduct => {
            for i in 1..=precision {
                mul_geometric_block(&mut s, i, m);
            }
        }
        RegularForm::BProduct => {
            for k in (1..=precision).filter(|k| k % m != 0) {
                s.div_one_minus(k);
            }
        }
    }
    Ok(s)
}

/// `1 + Σ_{n=1}^{n_sum} Σ_{j=1}^{m-1} q^{mn-j} / (Π_{r=1}^{m-j} (q^r;q^m)_n · Π_{r=m-j+1}^{m-1} (q^r;q^m)_{n-1})`.
///
/// With an infinite `n_sum`, terms are added while `mn - (m-1) <= precision`.
///
/// The denominator of the `(n, j)` term is `Π (1 - q^e)` over `e <= mn - j`
/// with `m ∤ e`, so one running product, extended in order of `mn - j`,
/// serves every term.
pub fn gf_bj_lhs(m: usize, n_sum: Count, precision: usize) -> Result<Series> {
    check_m(m)?;
    let mut total = Series::one(Integers, precision);
    let mut den = Series::one(Integers, precision);
    let mut next_e = 1;
    let one = Integer::from(1);
    let mut n = 1;
    loop {
        let past_limit = matches!(n_sum, Count::Finite(limit) if n > limit);
        if past_limit || m * n - (m - 1) > precision {
            break;
        }
        for j in (1..m).rev() {
            let lead = m * n - j;
            if lead > precision {
                break;
            }
            while next_e <= lead {
                if next_e % m != 0 {
                    den.div_one_minus(next_e);
                }
                next_e += 1;
            }
            total.add_shifted_scaled(&den, lead, &one);
        }
        n += 1;
    }
    Ok(total)
}

/// `(q^m;q^m)_{n_sum} / (q;q)_{m·n_sum}`, the finite Glaisher product.
pub fn glaisher_finite_product(m: usize, n_sum: usize, precision: usize) -> Result<Series> {
    check_m(m)?;
    let num = pochhammer(
        &Integers,
        &PochSpec::new(Integer::from(1), m, m, Count::Finite(n_sum))?,
        precision,
    );
    let den = inv_pochhammer(1, 1, Count::Finite(m * n_sum), precision)?;
    num.mul(&den)
}

/// `Σ_{n≥0} (q^m;q^m)_n q^{mn} / (q;q)_{mn}`; constant term 1.
pub fn gf_c(m: usize, precision: usize) -> Result<Series> {
    check_m(m)?;
    let mut term = Series::one(Integers, precision);
    let mut total = term.clone();
    let mut n = 1;
    while m * n <= precision {
        term = term.shift(m);
        term.mul_one_minus(m * n);
        for i in (m * (n - 1) + 1)..=(m * n) {
            term.div_one_minus(i);
        }
        total.add_assign(&term);
        n += 1;
    }
    Ok(total)
}

/// `Σ_{j≥0} q^{mj} Π_{i≥j+1} (1 + q^i + … + q^{(m-1)i})`.
pub fn gf_d(m: usize, precision: usize) -> Result<Series> {
    check_m(m)?;
    let mut total = Series::zero(Integers, precision);
    // tail = Π_{i > j}, built from the top down.
    let mut tail = Series::one(Integers, precision);
    for j in (0..=precision).rev() {
        if j < precision {
            mul_geometric_block(&mut tail, j + 1, m);
        }
        if m * j <= precision {
            total.add_assign(&tail.shift(m * j));
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &Series) -> Vec<i64> {
        s.to_i64s().unwrap()
    }

    #[test]
    fn regular_products() {
        assert_eq!(
            ints(&gf_regular(3, RegularForm::BProduct, 5).unwrap()),
            vec![1, 1, 2, 2, 4, 5]
        );
        assert_eq!(
            ints(&gf_regular(2, RegularForm::BProduct, 5).unwrap()),
            vec![1, 1, 1, 2, 2, 3]
        );
        for m in 2..6 {
            let a = gf_regular(m, RegularForm::AProduct, 40).unwrap();
            let b = gf_regular(m, RegularForm::BProduct, 40).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn bj_lhs_examples() {
        assert_eq!(
            ints(&gf_bj_lhs(2, Count::Finite(1), 6).unwrap()),
            vec![1; 7]
        );
        let lhs = gf_bj_lhs(3, Count::Infinite, 10).unwrap();
        assert_eq!(lhs, gf_regular(3, RegularForm::BProduct, 10).unwrap());
        assert_eq!(
            ints(&gf_bj_lhs(4, Count::Finite(0), 5).unwrap()),
            vec![1, 0, 0, 0, 0, 0]
        );
    }

    #[test]
    fn c_and_d_prefixes() {
        assert_eq!(ints(&gf_c(3, 6).unwrap()), vec![1, 0, 0, 1, 1, 2, 3]);
        assert_eq!(ints(&gf_d(3, 5).unwrap()), vec![1, 1, 2, 3, 4, 6]);
        for m in 2..7 {
            assert_eq!(gf_c(m, 10).unwrap().coeff(1).unwrap(), &Integer::from(0));
            assert_eq!(gf_d(m, 10).unwrap().coeff(0).unwrap(), &Integer::from(1));
        }
    }

    #[test]
    fn m_below_two_rejected() {
        assert!(gf_c(1, 5).is_err());
        assert!(gf_regular(0, RegularForm::AProduct, 5).is_err());
    }
}
