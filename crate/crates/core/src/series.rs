//! Truncated dense power series in `q` over a [`CoeffRing`].
//!
//! A series of precision `N` stores exactly the coefficients of
//! `q^0 ..= q^N`. Products drop every term above `N`. Binary operations
//! require equal precision; use [`Series::truncate`] to bring operands
//! down to a common precision first.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly;
use crate::ring::{ArithOp, CoeffRing, CycInt, Cyclotomic, Integer, Integers};

#[derive(Clone)]
pub struct Series<R: CoeffRing = Integers> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: CoeffRing> PartialEq for Series<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.coeffs == other.coeffs
    }
}

impl<R: CoeffRing> fmt::Debug for Series<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series(N={}, {:?})", self.precision(), self.coeffs)
    }
}

impl<R: CoeffRing> fmt::Display for Series<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (n, c) in self.coeffs.iter().enumerate() {
            if self.ring.is_zero(c) {
                continue;
            }
            if wrote {
                f.write_str(" + ")?;
            }
            wrote = true;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})q")?,
                _ => write!(f, "({c})q^{n}")?,
            }
        }
        if !wrote {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.precision() + 1)
    }
}

impl<R: CoeffRing> Series<R> {
    pub fn zero(ring: R, precision: usize) -> Self {
        let coeffs = vec![ring.zero(); precision + 1];
        Series { ring, coeffs }
    }

    pub fn one(ring: R, precision: usize) -> Self {
        let mut s = Self::zero(ring, precision);
        s.coeffs[0] = s.ring.one();
        s
    }

    /// `c · q^exponent`, or zero when the exponent is above precision.
    pub fn monomial(ring: R, c: R::Elem, exponent: usize, precision: usize) -> Self {
        let mut s = Self::zero(ring, precision);
        if exponent <= precision {
            s.coeffs[exponent] = c;
        }
        s
    }

    /// Series whose precision is `coeffs.len() - 1`.
    pub fn from_coeffs(ring: R, coeffs: Vec<R::Elem>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain(
                "a series needs at least one coefficient".into(),
            ));
        }
        Ok(Series { ring, coeffs })
    }

    /// Series of the given precision; missing coefficients are zero and
    /// coefficients above the precision are dropped.
    pub fn from_prefix(ring: R, mut coeffs: Vec<R::Elem>, precision: usize) -> Self {
        coeffs.resize(precision + 1, ring.zero());
        Series { ring, coeffs }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R::Elem> {
        self.coeffs
    }

    /// Coefficient of `q^n`; asking above the precision is an error, never zero.
    pub fn coeff(&self, n: usize) -> Result<&R::Elem> {
        self.coeffs.get(n).ok_or(Error::OutOfRange {
            exponent: n,
            precision: self.precision(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.ring.is_zero(c))
    }

    /// Same series at a lower (or equal) precision.
    pub fn truncate(&self, precision: usize) -> Result<Self> {
        if precision > self.precision() {
            return Err(Error::PrecisionMismatch {
                left: self.precision(),
                right: precision,
            });
        }
        Ok(Series {
            ring: self.ring.clone(),
            coeffs: self.coeffs[..=precision].to_vec(),
        })
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.precision() != other.precision() {
            return Err(Error::PrecisionMismatch {
                left: self.precision(),
                right: other.precision(),
            });
        }
        if !self.ring.same_ring(&other.ring) {
            return Err(Error::Domain(
                "series over different coefficient rings".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            self.ring.sub_assign(a, b);
        }
        Ok(out)
    }

    /// Truncated convolution.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.precision();
        let mut out = Self::zero(self.ring.clone(), n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if self.ring.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !self.ring.is_zero(b) {
                    self.ring.mul_add_assign(&mut out.coeffs[i + j], a, b);
                }
            }
        }
        Ok(out)
    }

    pub fn arith(&self, other: &Self, op: ArithOp) -> Result<Self> {
        match op {
            ArithOp::Add => self.add(other),
            ArithOp::Sub => self.sub(other),
            ArithOp::Mul => self.mul(other),
        }
    }

    /// In-place add of an equal-precision series. Panics on precision mismatch.
    pub(crate) fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            self.ring.add_assign(a, b);
        }
    }

    /// Adds `c · q^k · other` in place; terms above precision are dropped and
    /// `other` may have any precision.
    pub(crate) fn add_shifted_scaled(&mut self, other: &Self, k: usize, c: &Integer) {
        let n = self.precision();
        if k > n {
            return;
        }
        for (i, b) in other.coeffs.iter().take(n - k + 1).enumerate() {
            if !self.ring.is_zero(b) {
                let term = self.ring.scale(b, c);
                self.ring.add_assign(&mut self.coeffs[i + k], &term);
            }
        }
    }

    pub fn neg(&self) -> Self {
        Series {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| self.ring.neg(c)).collect(),
        }
    }

    pub fn scale(&self, k: &Integer) -> Self {
        Series {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| self.ring.scale(c, k)).collect(),
        }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.precision();
        let mut out = Self::zero(self.ring.clone(), n);
        if k <= n {
            out.coeffs[k..].clone_from_slice(&self.coeffs[..=n - k]);
        }
        out
    }

    /// Multiply in place by the factor `1 - u·q^k`, `k >= 1`.
    pub fn mul_linear_factor(&mut self, u: &R::Elem, k: usize) {
        assert!(k >= 1, "linear factor needs a positive exponent");
        let n = self.precision();
        if k > n {
            return;
        }
        for i in (k..=n).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            if !self.ring.is_zero(&lo[i - k]) {
                self.ring.mul_sub_assign(&mut hi[0], u, &lo[i - k]);
            }
        }
    }

    /// Multiply in place by `1 - q^k`.
    pub fn mul_one_minus(&mut self, k: usize) {
        assert!(k >= 1, "linear factor needs a positive exponent");
        let n = self.precision();
        for i in (k..=n).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            self.ring.sub_assign(&mut hi[0], &lo[i - k]);
        }
    }

    /// Multiply in place by `1 / (1 - q^k) = 1 + q^k + q^{2k} + …`.
    pub fn div_one_minus(&mut self, k: usize) {
        assert!(k >= 1, "geometric factor needs a positive exponent");
        let n = self.precision();
        for i in k..=n {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            self.ring.add_assign(&mut hi[0], &lo[i - k]);
        }
    }

    /// Product with an integer series of the same precision.
    pub fn mul_integer_series(&self, other: &Series<Integers>) -> Result<Self> {
        if self.precision() != other.precision() {
            return Err(Error::PrecisionMismatch {
                left: self.precision(),
                right: other.precision(),
            });
        }
        let n = self.precision();
        let mut out = Self::zero(self.ring.clone(), n);
        for (j, b) in other.coeffs.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            for (i, a) in self.coeffs[..=n - j].iter().enumerate() {
                if !self.ring.is_zero(a) {
                    let t = self.ring.scale(a, b);
                    self.ring.add_assign(&mut out.coeffs[i + j], &t);
                }
            }
        }
        Ok(out)
    }

    /// Embed an integer series into this ring.
    pub fn lift(ring: R, s: &Series<Integers>) -> Self {
        let coeffs = s.coeffs.iter().map(|c| ring.embed(c)).collect();
        Series { ring, coeffs }
    }
}

impl Series<Integers> {
    /// Integer series at the given precision from machine integers.
    pub fn from_i64s(coeffs: &[i64], precision: usize) -> Self {
        Self::from_prefix(
            Integers,
            coeffs.iter().map(|&c| Integer::from(c)).collect(),
            precision,
        )
    }

    /// Coefficients as `i64`, when they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(crate::ring::to_i64).collect()
    }
}

impl Series<Cyclotomic> {
    /// Convert to an integer series; fails at the first coefficient outside `Z`.
    pub fn to_integer_series(&self) -> Result<Series<Integers>> {
        map_ring(self)
    }
}

/// Coefficientwise conversion from `Z[ζ_m]` to `Z`.
pub fn map_ring(a: &Series<Cyclotomic>) -> Result<Series<Integers>> {
    let coeffs = a
        .coeffs
        .iter()
        .enumerate()
        .map(|(exponent, c): (usize, &CycInt)| {
            c.as_integer()
                .cloned()
                .ok_or(Error::NotInteger { exponent })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Series {
        ring: Integers,
        coeffs,
    })
}

pub fn series_arith<R: CoeffRing>(a: &Series<R>, b: &Series<R>, op: ArithOp) -> Result<Series<R>> {
    a.arith(b, op)
}

pub fn coeff<R: CoeffRing>(a: &Series<R>, n: usize) -> Result<&R::Elem> {
    a.coeff(n)
}

/// Number of factors in a q-Pochhammer product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Count {
    Finite(usize),
    /// Realized by keeping every factor whose exponent is within precision.
    Infinite,
}

impl Count {
    fn covers(self, i: usize) -> bool {
        match self {
            Count::Finite(c) => i < c,
            Count::Infinite => true,
        }
    }
}

/// The product `Π_i (1 - u·q^{offset + step·i})`.
#[derive(Clone, Debug, PartialEq)]
pub struct PochSpec<E> {
    unit: E,
    offset: usize,
    step: usize,
    count: Count,
}

impl<E> PochSpec<E> {
    pub fn new(unit: E, offset: usize, step: usize, count: Count) -> Result<Self> {
        if offset == 0 || step == 0 {
            return Err(Error::Domain(format!(
                "Pochhammer offset and step must be positive (got {offset}, {step})"
            )));
        }
        Ok(PochSpec {
            unit,
            offset,
            step,
            count,
        })
    }

    pub fn unit(&self) -> &E {
        &self.unit
    }

    /// Exponents of the factors that survive truncation at `precision`.
    fn exponents(&self, precision: usize) -> impl Iterator<Item = usize> + '_ {
        (0..)
            .take_while(move |&i| self.count.covers(i))
            .map(move |i| self.offset + self.step * i)
            .take_while(move |&e| e <= precision)
    }
}

pub fn pochhammer<R: CoeffRing>(ring: &R, spec: &PochSpec<R::Elem>, precision: usize) -> Series<R> {
    let mut out = Series::one(ring.clone(), precision);
    for e in spec.exponents(precision) {
        out.mul_linear_factor(&spec.unit, e);
    }
    out
}

/// `Π_i 1/(1 - q^{offset + step·i})`, the inverse of the unit-1 Pochhammer product.
pub fn inv_pochhammer(
    offset: usize,
    step: usize,
    count: Count,
    precision: usize,
) -> Result<Series> {
    let spec = PochSpec::new((), offset, step, count)?;
    let mut out = Series::one(Integers, precision);
    for e in spec.exponents(precision) {
        out.div_one_minus(e);
    }
    Ok(out)
}

/// Gaussian polynomial `(q)_{a+b} / ((q)_a (q)_b)` truncated at `precision`;
/// the zero series when either argument is negative.
pub fn qbinomial(a: i64, b: i64, precision: usize) -> Series {
    match qbinomial_poly(a, b) {
        Some(p) => Series::from_prefix(Integers, p, precision),
        None => Series::zero(Integers, precision),
    }
}

/// Exact coefficients of the Gaussian polynomial, degree `a·b`.
pub(crate) fn qbinomial_poly(a: i64, b: i64) -> Option<Vec<Integer>> {
    if a < 0 || b < 0 {
        return None;
    }
    let (small, big) = if a <= b {
        (a as usize, b as usize)
    } else {
        (b as usize, a as usize)
    };
    // [big+i choose i] from [big+i-1 choose i-1] · (1 - q^{big+i}) / (1 - q^i).
    let mut acc = vec![Integer::one()];
    for i in 1..=small {
        let num = poly::mul(&acc, &one_minus_q_pow(big + i));
        acc = poly::div_exact(&num, &one_minus_q_pow(i))
            .expect("Gaussian polynomial recurrence divides exactly");
    }
    Some(acc)
}

fn one_minus_q_pow(k: usize) -> Vec<Integer> {
    let mut p = vec![Integer::zero(); k + 1];
    p[0] = Integer::one();
    p[k] = -Integer::one();
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Cyclotomic;

    fn ints(s: &Series) -> Vec<i64> {
        s.to_i64s().unwrap()
    }

    #[test]
    fn product_examples() {
        let a = Series::from_i64s(&[1, 1], 3);
        let b = Series::from_i64s(&[1, -1], 3);
        assert_eq!(ints(&a.mul(&b).unwrap()), vec![1, 0, -1, 0]);

        let f = |k: usize| {
            let mut s = Series::one(Integers, 6);
            s.mul_one_minus(k);
            s
        };
        let p = f(1).mul(&f(2)).unwrap().mul(&f(3)).unwrap();
        assert_eq!(ints(&p), vec![1, -1, -1, 0, 1, 1, -1]);
    }

    #[test]
    fn precision_mismatch_is_error() {
        let a = Series::one(Integers, 3);
        let b = Series::one(Integers, 4);
        assert_eq!(
            a.add(&b),
            Err(Error::PrecisionMismatch { left: 3, right: 4 })
        );
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn pochhammer_examples() {
        let spec = PochSpec::new(Integer::one(), 1, 1, Count::Finite(2)).unwrap();
        assert_eq!(
            ints(&pochhammer(&Integers, &spec, 4)),
            vec![1, -1, -1, 1, 0]
        );

        let r3 = Cyclotomic::new(3).unwrap();
        let spec = PochSpec::new(r3.root_power(1), 2, 1, Count::Finite(1)).unwrap();
        let s = pochhammer(&r3, &spec, 4);
        assert_eq!(s.coeff(0).unwrap(), &r3.one());
        assert_eq!(s.coeff(2).unwrap(), &r3.neg(&r3.root_power(1)));
        assert!(s.coeff(1).unwrap().is_zero() && s.coeff(3).unwrap().is_zero());

        let spec = PochSpec::new(Integer::one(), 1, 1, Count::Infinite).unwrap();
        assert_eq!(
            ints(&pochhammer(&Integers, &spec, 6)),
            vec![1, -1, -1, 0, 0, 1, 0]
        );
    }

    #[test]
    fn pochhammer_rejects_zero_offset() {
        assert!(PochSpec::new((), 0, 1, Count::Infinite).is_err());
        assert!(inv_pochhammer(1, 0, Count::Infinite, 5).is_err());
    }

    #[test]
    fn inverse_pochhammer_examples() {
        assert_eq!(
            ints(&inv_pochhammer(1, 2, Count::Finite(1), 4).unwrap()),
            vec![1; 5]
        );
        assert_eq!(
            ints(&inv_pochhammer(1, 1, Count::Infinite, 5).unwrap()),
            vec![1, 1, 2, 3, 5, 7]
        );
        assert_eq!(
            ints(&inv_pochhammer(2, 3, Count::Finite(2), 7).unwrap()),
            vec![1, 0, 1, 0, 1, 1, 1, 1]
        );
    }

    #[test]
    fn qbinomial_examples() {
        assert_eq!(ints(&qbinomial(1, 1, 10))[..3], [1, 1, 0]);
        assert_eq!(ints(&qbinomial(2, 2, 10))[..6], [1, 1, 2, 1, 1, 0]);
        assert_eq!(ints(&qbinomial(0, 5, 10))[..2], [1, 0]);
        assert!(qbinomial(-1, 3, 10).is_zero());
        assert_eq!(qbinomial_poly(3, 4).unwrap().len(), 13);
    }

    #[test]
    fn coeff_contract() {
        let s = Series::from_i64s(&[1, 0, 3], 2);
        assert_eq!(s.coeff(2).unwrap(), &Integer::from(3));
        assert_eq!(
            s.coeff(3),
            Err(Error::OutOfRange {
                exponent: 3,
                precision: 2
            })
        );
        let p = inv_pochhammer(1, 1, Count::Infinite, 10).unwrap();
        assert_eq!(p.coeff(10).unwrap(), &Integer::from(42));
    }

    #[test]
    fn map_ring_examples() {
        let r3 = Cyclotomic::new(3).unwrap();
        let mut total = Series::zero(r3.clone(), 6);
        for j in 1..=2 {
            let spec = PochSpec::new(r3.root_power(j), 1, 1, Count::Infinite).unwrap();
            total.add_assign(&pochhammer(&r3, &spec, 6));
        }
        // Expanded independently in floating-point complex arithmetic.
        assert_eq!(
            ints(&map_ring(&total).unwrap()),
            vec![2, 1, 1, 0, 0, -1, -3]
        );

        let mut bad = Series::lift(r3.clone(), &Series::from_i64s(&[4, 5], 5));
        bad.coeffs[3] = r3.root_power(1);
        assert_eq!(map_ring(&bad), Err(Error::NotInteger { exponent: 3 }));
    }

    #[test]
    fn shift_and_truncate() {
        let s = Series::from_i64s(&[1, 2, 3], 4);
        assert_eq!(ints(&s.shift(2)), vec![0, 0, 1, 2, 3]);
        assert_eq!(ints(&s.truncate(1).unwrap()), vec![1, 2]);
        assert!(s.truncate(5).is_err());
    }
}
