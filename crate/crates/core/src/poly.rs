//! Dense integer polynomials in ascending degree order. Only what the
//! cyclotomic and Gaussian-binomial constructions need.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub(crate) fn trim(p: &mut Vec<BigInt>) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact quotient `num / den`. The divisor's leading coefficient must divide
/// every intermediate leading term and the remainder must vanish.
pub(crate) fn div_exact(num: &[BigInt], den: &[BigInt]) -> Result<Vec<BigInt>> {
    let mut den = den.to_vec();
    trim(&mut den);
    let lead = den
        .last()
        .filter(|c| !c.is_zero())
        .cloned()
        .ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?;
    let mut rem = num.to_vec();
    trim(&mut rem);
    if rem.len() < den.len() {
        return if rem.iter().all(Zero::is_zero) {
            Ok(vec![BigInt::zero()])
        } else {
            Err(Error::InexactDivision)
        };
    }
    let shift_max = rem.len() - den.len();
    let mut quot = vec![BigInt::zero(); shift_max + 1];
    for shift in (0..=shift_max).rev() {
        let top = &rem[shift + den.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(&lead);
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        for (i, d) in den.iter().enumerate() {
            rem[shift + i] -= &q * d;
        }
        quot[shift] = q;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(Error::InexactDivision);
    }
    trim(&mut quot);
    Ok(quot)
}

/// `x^n - 1`
pub(crate) fn x_pow_minus_one(n: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n + 1];
    p[0] = -BigInt::one();
    p[n] = BigInt::one();
    p
}
