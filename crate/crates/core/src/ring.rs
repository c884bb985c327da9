//! Exact scalars: big integers, cyclotomic integers `Z[ζ_m]` in the power
//! basis modulo `Φ_m`, and the root-of-unity character `χ_m`.
//!
//! [`CoeffRing`] abstracts over the two coefficient rings so that
//! [`Series`](crate::series::Series) can be used with either.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly;

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// The `m`-th cyclotomic polynomial, ascending coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycPoly {
    m: usize,
    coeffs: Vec<Integer>,
}

impl CycPoly {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    /// Equal to Euler's totient of `m`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

impl fmt::Display for CycPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}x^{k}")?,
            }
        }
        Ok(())
    }
}

fn divisors(m: usize) -> Vec<usize> {
    (1..=m).filter(|d| m.is_multiple_of(*d)).collect()
}

/// `Φ_m`, obtained by dividing `x^m - 1` by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(m: usize) -> Result<CycPoly> {
    if m == 0 {
        return Err(Error::Domain("cyclotomic polynomial of order 0".into()));
    }
    let mut cache: Vec<Option<Vec<Integer>>> = vec![None; m + 1];
    Ok(CycPoly {
        m,
        coeffs: cyclotomic_rec(m, &mut cache),
    })
}

fn cyclotomic_rec(m: usize, cache: &mut Vec<Option<Vec<Integer>>>) -> Vec<Integer> {
    if let Some(c) = &cache[m] {
        return c.clone();
    }
    let mut den = vec![Integer::one()];
    for d in divisors(m).into_iter().filter(|&d| d < m) {
        let phi_d = cyclotomic_rec(d, cache);
        den = poly::mul(&den, &phi_d);
    }
    let phi = poly::div_exact(&poly::x_pow_minus_one(m), &den)
        .expect("x^m - 1 is divisible by the product of its proper cyclotomic factors");
    cache[m] = Some(phi.clone());
    phi
}

/// An element of `Z[ζ_m]` given by its coordinates in the basis
/// `1, ζ, …, ζ^{φ(m)-1}`.
#[derive(Clone)]
pub struct CycInt {
    modulus: Arc<CycPoly>,
    coords: Vec<Integer>,
}

impl CycInt {
    pub fn m(&self) -> usize {
        self.modulus.m
    }

    pub fn coords(&self) -> &[Integer] {
        &self.coords
    }

    /// The rational integer this element equals, if it lies in `Z`.
    pub fn as_integer(&self) -> Option<&Integer> {
        if self.coords[1..].iter().all(Zero::is_zero) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    fn check_same(&self, other: &CycInt) -> Result<()> {
        if self.m() == other.m() {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "cyclotomic orders differ: {} vs {}",
                self.m(),
                other.m()
            )))
        }
    }

    pub fn checked_add(&self, other: &CycInt) -> Result<CycInt> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (a, b) in out.coords.iter_mut().zip(&other.coords) {
            *a += b;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &CycInt) -> Result<CycInt> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (a, b) in out.coords.iter_mut().zip(&other.coords) {
            *a -= b;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &CycInt) -> Result<CycInt> {
        self.check_same(other)?;
        Ok(CycInt {
            modulus: Arc::clone(&self.modulus),
            coords: reduce(&self.modulus, poly::mul(&self.coords, &other.coords)),
        })
    }
}

impl PartialEq for CycInt {
    fn eq(&self, other: &Self) -> bool {
        self.m() == other.m() && self.coords == other.coords
    }
}

impl Eq for CycInt {}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycInt(m={}, {:?})", self.m(), self.coords)
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.as_integer() {
            return write!(f, "{n}");
        }
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let mag = c.abs();
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("z")?,
                (1, false) => write!(f, "{mag}z")?,
                (_, true) => write!(f, "z^{k}")?,
                (_, false) => write!(f, "{mag}z^{k}")?,
            }
        }
        Ok(())
    }
}

/// Reduce an arbitrary-length coordinate vector modulo the monic `Φ_m`,
/// zero-padding to exactly `φ(m)` coordinates.
fn reduce(modulus: &CycPoly, mut p: Vec<Integer>) -> Vec<Integer> {
    let d = modulus.degree();
    for top in (d..p.len()).rev() {
        if p[top].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut p[top]);
        for (i, phi_i) in modulus.coeffs[..d].iter().enumerate() {
            if !phi_i.is_zero() {
                p[top - d + i] -= &c * phi_i;
            }
        }
    }
    p.resize(d, Integer::zero());
    p
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn cyc_arith(a: &CycInt, b: &CycInt, op: ArithOp) -> Result<CycInt> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
    }
}

/// `ζ_m^{e mod m}` in the power basis.
pub fn cyc_root_power(m: usize, e: i64) -> Result<CycInt> {
    Ok(Cyclotomic::new(m)?.root_power(e))
}

/// Euclidean residue of `n` modulo `m`, always in `[0, m)`.
pub(crate) fn modulo(n: i64, m: usize) -> usize {
    n.rem_euclid(m as i64) as usize
}

/// `χ_m(n) = Σ_{j=1}^{m-1} ζ_m^{jn}`: `m - 1` when `m | n`, otherwise `-1`.
pub fn chi(m: usize, n: i64) -> Result<Integer> {
    if m < 2 {
        return Err(Error::Domain(format!("chi requires m >= 2, got {m}")));
    }
    Ok(Integer::from(chi_small(m, n)))
}

pub(crate) fn chi_small(m: usize, n: i64) -> i64 {
    if modulo(n, m) == 0 {
        m as i64 - 1
    } else {
        -1
    }
}

/// The literal sum `Σ_{j=1}^{m-1} ζ_m^{jn}` evaluated in `Z[ζ_m]`.
pub fn chi_root_sum(m: usize, n: i64) -> Result<CycInt> {
    let ring = Cyclotomic::new(m)?;
    let mut acc = ring.zero();
    for j in 1..m as i64 {
        ring.add_assign(&mut acc, &ring.root_power(j * n));
    }
    Ok(acc)
}

/// A commutative coefficient ring for truncated power series.
pub trait CoeffRing: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn embed(&self, n: &Integer) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add_assign(&self, acc: &mut Self::Elem, a: &Self::Elem);
    fn sub_assign(&self, acc: &mut Self::Elem, a: &Self::Elem);
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiply by a rational integer.
    fn scale(&self, a: &Self::Elem, k: &Integer) -> Self::Elem;
    /// Whether two ring handles describe the same ring.
    fn same_ring(&self, other: &Self) -> bool;

    fn mul_add_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let p = self.mul(a, b);
        self.add_assign(acc, &p);
    }

    fn mul_sub_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let p = self.mul(a, b);
        self.sub_assign(acc, &p);
    }
}

/// The rational integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl CoeffRing for Integers {
    type Elem = Integer;

    fn zero(&self) -> Integer {
        Integer::zero()
    }
    fn one(&self) -> Integer {
        Integer::one()
    }
    fn embed(&self, n: &Integer) -> Integer {
        n.clone()
    }
    fn is_zero(&self, a: &Integer) -> bool {
        a.is_zero()
    }
    fn add_assign(&self, acc: &mut Integer, a: &Integer) {
        *acc += a;
    }
    fn sub_assign(&self, acc: &mut Integer, a: &Integer) {
        *acc -= a;
    }
    fn mul(&self, a: &Integer, b: &Integer) -> Integer {
        a * b
    }
    fn neg(&self, a: &Integer) -> Integer {
        -a
    }
    fn scale(&self, a: &Integer, k: &Integer) -> Integer {
        a * k
    }
    fn same_ring(&self, _other: &Self) -> bool {
        true
    }
    fn mul_add_assign(&self, acc: &mut Integer, a: &Integer, b: &Integer) {
        *acc += a * b;
    }
    fn mul_sub_assign(&self, acc: &mut Integer, a: &Integer, b: &Integer) {
        *acc -= a * b;
    }
}

/// The ring `Z[ζ_m]`, `m >= 2`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    modulus: Arc<CycPoly>,
}

impl Cyclotomic {
    pub fn new(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::Domain(format!(
                "cyclotomic integers require m >= 2, got {m}"
            )));
        }
        Ok(Cyclotomic {
            modulus: Arc::new(cyclotomic_polynomial(m)?),
        })
    }

    pub fn m(&self) -> usize {
        self.modulus.m
    }

    pub fn modulus(&self) -> &CycPoly {
        &self.modulus
    }

    /// Element from power-basis coordinates; the vector is reduced, so any
    /// length is accepted.
    pub fn element(&self, coords: Vec<Integer>) -> CycInt {
        CycInt {
            modulus: Arc::clone(&self.modulus),
            coords: reduce(&self.modulus, coords),
        }
    }

    pub fn root_power(&self, e: i64) -> CycInt {
        let k = modulo(e, self.m());
        let mut coords = vec![Integer::zero(); k + 1];
        coords[k] = Integer::one();
        self.element(coords)
    }
}

impl CoeffRing for Cyclotomic {
    type Elem = CycInt;

    fn zero(&self) -> CycInt {
        self.element(Vec::new())
    }
    fn one(&self) -> CycInt {
        self.element(vec![Integer::one()])
    }
    fn embed(&self, n: &Integer) -> CycInt {
        self.element(vec![n.clone()])
    }
    fn is_zero(&self, a: &CycInt) -> bool {
        a.is_zero()
    }
    fn add_assign(&self, acc: &mut CycInt, a: &CycInt) {
        for (x, y) in acc.coords.iter_mut().zip(&a.coords) {
            *x += y;
        }
    }
    fn sub_assign(&self, acc: &mut CycInt, a: &CycInt) {
        for (x, y) in acc.coords.iter_mut().zip(&a.coords) {
            *x -= y;
        }
    }
    fn mul(&self, a: &CycInt, b: &CycInt) -> CycInt {
        CycInt {
            modulus: Arc::clone(&self.modulus),
            coords: reduce(&self.modulus, poly::mul(&a.coords, &b.coords)),
        }
    }
    fn neg(&self, a: &CycInt) -> CycInt {
        CycInt {
            modulus: Arc::clone(&a.modulus),
            coords: a.coords.iter().map(|c| -c).collect(),
        }
    }
    fn scale(&self, a: &CycInt, k: &Integer) -> CycInt {
        CycInt {
            modulus: Arc::clone(&a.modulus),
            coords: a.coords.iter().map(|c| c * k).collect(),
        }
    }
    fn same_ring(&self, other: &Self) -> bool {
        self.m() == other.m()
    }
}

/// Binomial coefficient as a big integer.
pub fn binomial(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    acc
}

/// Euler's totient, by trial division.
pub fn totient(m: usize) -> usize {
    (1..=m).filter(|k| k.gcd(&m) == 1).count()
}

pub(crate) fn to_i64(n: &Integer) -> Option<i64> {
    n.to_i64()
}
