//! Hirzebruch–Jung (minus) continued fractions and 2×2 integer matrices.
//!
//! A sequence `[b1, ..., bs]` stands for `b1 - 1/(b2 - 1/(... - 1/bs))`.
//! Its numerator is the determinant of the tridiagonal matrix with the
//! `b`s on the diagonal and `-1` off it, written `det[b1, ..., bs]` below.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HjError {
    #[error("continued fraction needs 0 < omega < alpha with gcd 1, got alpha={alpha}, omega={omega}")]
    BadFraction { alpha: BigInt, omega: BigInt },
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("empty sequence")]
    Empty,
    #[error("term {0} does not fit in a machine integer")]
    TermOverflow(BigInt),
}

/// Integer 2×2 matrix with rows `(p, q)` and `(r, s)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat2 {
    pub p: BigInt,
    pub q: BigInt,
    pub r: BigInt,
    pub s: BigInt,
}

impl Mat2 {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>, r: impl Into<BigInt>, s: impl Into<BigInt>) -> Self {
        Mat2 { p: p.into(), q: q.into(), r: r.into(), s: s.into() }
    }

    pub fn identity() -> Self {
        Mat2::new(1, 0, 0, 1)
    }

    /// The elementary factor `((b, 1), (-1, 0))`.
    pub fn factor(b: i64) -> Self {
        Mat2::new(b, 1, -1, 0)
    }

    pub fn det(&self) -> BigInt {
        &self.p * &self.s - &self.q * &self.r
    }

    pub fn trace(&self) -> BigInt {
        &self.p + &self.s
    }

    /// Inverse of a determinant-one matrix.
    pub fn inverse_unimodular(&self) -> Option<Mat2> {
        if !self.det().is_one() {
            return None;
        }
        Some(Mat2 {
            p: self.s.clone(),
            q: -&self.q,
            r: -&self.r,
            s: self.p.clone(),
        })
    }

    pub fn neg(&self) -> Mat2 {
        Mat2 { p: -&self.p, q: -&self.q, r: -&self.r, s: -&self.s }
    }

    /// `self^n` for any integer `n`; negative powers need determinant one.
    pub fn pow(&self, n: i64) -> Option<Mat2> {
        let base = if n < 0 { self.inverse_unimodular()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Mat2::identity();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        Some(acc)
    }

    pub fn apply(&self, v: &Vec2) -> Vec2 {
        Vec2 {
            x: &self.p * &v.x + &self.q * &v.y,
            y: &self.r * &v.x + &self.s * &v.y,
        }
    }

    pub fn entries(&self) -> [[BigInt; 2]; 2] {
        [[self.p.clone(), self.q.clone()], [self.r.clone(), self.s.clone()]]
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, o: &Mat2) -> Mat2 {
        Mat2 {
            p: &self.p * &o.p + &self.q * &o.r,
            q: &self.p * &o.q + &self.q * &o.s,
            r: &self.r * &o.p + &self.s * &o.r,
            s: &self.r * &o.q + &self.s * &o.s,
        }
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        &self * &o
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({},{}),({},{}))", self.p, self.q, self.r, self.s)
    }
}

impl Serialize for Mat2 {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let rows = [
            [self.p.to_string(), self.q.to_string()],
            [self.r.to_string(), self.s.to_string()],
        ];
        rows.serialize(ser)
    }
}

/// Integer column vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Vec2 {
    pub x: BigInt,
    pub y: BigInt,
}

impl Vec2 {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Vec2 { x: x.into(), y: y.into() }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn scale(&self, k: &BigInt) -> Vec2 {
        Vec2 { x: &self.x * k, y: &self.y * k }
    }

    pub fn add(&self, o: &Vec2) -> Vec2 {
        Vec2 { x: &self.x + &o.x, y: &self.y + &o.y }
    }

    pub fn sub(&self, o: &Vec2) -> Vec2 {
        Vec2 { x: &self.x - &o.x, y: &self.y - &o.y }
    }

    pub fn neg(&self) -> Vec2 {
        Vec2 { x: -&self.x, y: -&self.y }
    }

    /// `det(self, o)` with `self` and `o` as columns.
    pub fn det(&self, o: &Vec2) -> BigInt {
        &self.x * &o.y - &self.y * &o.x
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl Serialize for Vec2 {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        [self.x.to_string(), self.y.to_string()].serialize(ser)
    }
}

/// A continued fraction together with its value `alpha / omega`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HjFraction {
    pub terms: Vec<i64>,
    pub alpha: BigInt,
    pub omega: BigInt,
}

impl HjFraction {
    pub fn from_terms(terms: &[i64]) -> Result<Self, HjError> {
        if terms.is_empty() {
            return Err(HjError::Empty);
        }
        Ok(HjFraction {
            terms: terms.to_vec(),
            alpha: hj_numerator(terms),
            omega: hj_numerator(&terms[1..]),
        })
    }

    pub fn from_value(alpha: &BigInt, omega: &BigInt) -> Result<Self, HjError> {
        let terms = hj_expand(alpha, omega)?;
        Ok(HjFraction { terms, alpha: alpha.clone(), omega: omega.clone() })
    }
}

/// Expands `alpha/omega` into `[b1, ..., bs]` with every `bi >= 2`.
pub fn hj_expand(alpha: &BigInt, omega: &BigInt) -> Result<Vec<i64>, HjError> {
    let bad = || HjError::BadFraction { alpha: alpha.clone(), omega: omega.clone() };
    if !omega.is_positive() || omega >= alpha || !alpha.gcd(omega).is_one() {
        // [1] = 1/1 is the only admissible fraction with omega = alpha.
        return Err(bad());
    }
    let mut terms = Vec::new();
    let (mut a, mut w) = (alpha.clone(), omega.clone());
    while !w.is_zero() {
        let b = a.div_ceil(&w);
        let next = &b * &w - &a;
        terms.push(b.to_i64().ok_or_else(|| HjError::TermOverflow(b.clone()))?);
        a = w;
        w = next;
    }
    Ok(terms)
}

/// `det[b1, ..., bs]`, with `det[] = 1`.
pub fn hj_numerator(terms: &[i64]) -> BigInt {
    // Right-to-left recursion: d_k = b_k * d_{k+1} - d_{k+2}.
    let mut next = BigInt::one(); // det of the empty tail
    let mut after = BigInt::zero(); // det of a length -1 tail
    for &b in terms.iter().rev() {
        let cur = BigInt::from(b) * &next - &after;
        after = next;
        next = cur;
    }
    next
}

/// `det` of a possibly "negative length" slice `terms[lo..hi]` (1-based,
/// inclusive `lo..=hi`): empty gives 1, length -1 gives 0.
pub fn bracket(terms: &[i64], lo: usize, hi: isize) -> BigInt {
    let len = hi - lo as isize + 1;
    match len {
        l if l < -1 => panic!("bracket called with length {l}"),
        -1 => BigInt::zero(),
        0 => BigInt::one(),
        _ => hj_numerator(&terms[lo - 1..hi as usize]),
    }
}

/// Product of the factors `((ai, 1), (-1, 0))` in order.
pub fn mono_product(terms: &[i64]) -> Mat2 {
    terms.iter().fold(Mat2::identity(), |acc, &b| &acc * &Mat2::factor(b))
}

/// Exponent `det[b_s, ..., b_{i+1}]` with `gamma_i = gamma_s^exponent`
/// along a chain whose last vertex carries `gamma_s`.
pub fn chain_exponent(i: usize, terms: &[i64]) -> Result<BigInt, HjError> {
    let s = terms.len();
    if i == 0 || i > s {
        return Err(HjError::IndexOutOfRange { index: i, len: s });
    }
    let tail: Vec<i64> = terms[i..].iter().rev().copied().collect();
    Ok(hj_numerator(&tail))
}
