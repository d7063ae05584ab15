//! Exact arithmetic in a real quadratic field `Q(sqrt d)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuadError {
    #[error("cannot parse quadratic number `{0}`")]
    Parse(String),
    #[error("mixing elements of Q(sqrt {0}) and Q(sqrt {1})")]
    FieldMismatch(BigInt, BigInt),
    #[error("division by zero")]
    DivByZero,
}

/// Sign of `a + b sqrt(d)` for `d >= 0`, computed without floating point.
pub fn surd_sign(a: &BigRational, b: &BigRational, d: &BigInt) -> Ordering {
    let sa = a.cmp(&BigRational::zero());
    let sb = if d.is_zero() { Ordering::Equal } else { b.cmp(&BigRational::zero()) };
    match (sa, sb) {
        (Ordering::Equal, s) | (s, Ordering::Equal) => s,
        (x, y) if x == y => x,
        // Opposite signs: compare a^2 with d b^2.
        (x, _) => {
            let lhs = a * a;
            let rhs = b * b * BigRational::from_integer(d.clone());
            match lhs.cmp(&rhs) {
                Ordering::Greater => x,
                Ordering::Less => x.reverse(),
                Ordering::Equal => Ordering::Equal,
            }
        }
    }
}

/// Integer version of [`surd_sign`].
pub fn surd_sign_int(a: &BigInt, b: &BigInt, d: &BigInt) -> Ordering {
    surd_sign(
        &BigRational::from_integer(a.clone()),
        &BigRational::from_integer(b.clone()),
        d,
    )
}

/// The element `a + b sqrt(d)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadElement {
    pub a: BigRational,
    pub b: BigRational,
    pub d: BigInt,
}

impl QuadElement {
    pub fn new(a: BigRational, b: BigRational, d: impl Into<BigInt>) -> Self {
        QuadElement { a, b, d: d.into() }
    }

    pub fn from_ints(a: i64, b: i64, d: i64) -> Self {
        QuadElement::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()), d)
    }

    /// `(an/ad) + (bn/bd) sqrt(d)`.
    pub fn from_fracs(an: i64, ad: i64, bn: i64, bd: i64, d: i64) -> Self {
        QuadElement::new(
            BigRational::new(an.into(), ad.into()),
            BigRational::new(bn.into(), bd.into()),
            d,
        )
    }

    pub fn rational(a: BigRational, d: impl Into<BigInt>) -> Self {
        QuadElement::new(a, BigRational::zero(), d)
    }

    pub fn zero(d: impl Into<BigInt>) -> Self {
        QuadElement::rational(BigRational::zero(), d)
    }

    pub fn one(d: impl Into<BigInt>) -> Self {
        QuadElement::rational(BigRational::one(), d)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        QuadElement::new(self.a.clone(), -&self.b, self.d.clone())
    }

    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(self.d.clone())
    }

    pub fn trace(&self) -> BigRational {
        &self.a + &self.a
    }

    /// Sign under the real embedding `sqrt(d) > 0`.
    pub fn sign(&self) -> Ordering {
        surd_sign(&self.a, &self.b, &self.d)
    }

    /// Sign of the conjugate embedding.
    pub fn conj_sign(&self) -> Ordering {
        self.conjugate().sign()
    }

    fn check(&self, o: &Self) -> Result<(), QuadError> {
        // Rational elements are compatible with every field.
        if self.d == o.d || self.b.is_zero() || o.b.is_zero() {
            Ok(())
        } else {
            Err(QuadError::FieldMismatch(self.d.clone(), o.d.clone()))
        }
    }

    fn joint_d(&self, o: &Self) -> BigInt {
        if self.b.is_zero() { o.d.clone() } else { self.d.clone() }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, QuadError> {
        self.check(o)?;
        Ok(QuadElement::new(&self.a + &o.a, &self.b + &o.b, self.joint_d(o)))
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, QuadError> {
        self.try_add(&o.neg())
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, QuadError> {
        self.check(o)?;
        let d = self.joint_d(o);
        let dr = BigRational::from_integer(d.clone());
        Ok(QuadElement::new(
            &self.a * &o.a + &self.b * &o.b * dr,
            &self.a * &o.b + &self.b * &o.a,
            d,
        ))
    }

    pub fn inverse(&self) -> Result<Self, QuadError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(QuadError::DivByZero);
        }
        Ok(QuadElement::new(&self.a / &n, -&self.b / &n, self.d.clone()))
    }

    pub fn try_div(&self, o: &Self) -> Result<Self, QuadError> {
        self.try_mul(&o.inverse()?)
    }

    pub fn neg(&self) -> Self {
        QuadElement::new(-&self.a, -&self.b, self.d.clone())
    }

    /// Floating point value of the two embeddings, for diagnostics only.
    pub fn embeddings_f64(&self) -> (f64, f64) {
        let a = rat_to_f64(&self.a);
        let b = rat_to_f64(&self.b);
        let r = bigint_to_f64(&self.d).sqrt();
        (a + b * r, a - b * r)
    }

    /// Parses `p/q`, `p/q*sqrt`, `p/q+r/s*sqrt` or `p/q-r/s*sqrt` (no spaces).
    pub fn parse(text: &str, d: impl Into<BigInt>) -> Result<Self, QuadError> {
        let d = d.into();
        let err = || QuadError::Parse(text.to_string());
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(err());
        }
        let sqrt_part = |s: &str| -> Result<BigRational, QuadError> {
            let coeff = s.strip_suffix("sqrt").ok_or_else(err)?;
            let coeff = coeff.strip_suffix('*').unwrap_or(coeff);
            match coeff {
                "" | "+" => Ok(BigRational::one()),
                "-" => Ok(-BigRational::one()),
                c => parse_rational(c).ok_or_else(err),
            }
        };
        if !t.ends_with("sqrt") {
            return Ok(QuadElement::rational(parse_rational(&t).ok_or_else(err)?, d));
        }
        // Split at the last sign that is not the leading one.
        let split = t
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        match split {
            Some(i) => {
                let a = parse_rational(&t[..i]).ok_or_else(err)?;
                let b = sqrt_part(&t[i..])?;
                Ok(QuadElement::new(a, b, d))
            }
            None => Ok(QuadElement::new(BigRational::zero(), sqrt_part(&t)?, d)),
        }
    }
}

impl fmt::Display for QuadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}*sqrt{}", self.a, sign, self.b.abs(), self.d)
    }
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n).ok()?;
            let d = BigInt::from_str(d).ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
        None => BigInt::from_str(s).ok().map(BigRational::from_integer),
    }
}

pub fn rat_to_f64(r: &BigRational) -> f64 {
    bigint_to_f64(r.numer()) / bigint_to_f64(r.denom())
}

pub fn bigint_to_f64(n: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    n.to_f64().unwrap_or(f64::NAN)
}
