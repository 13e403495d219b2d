//! Exact rational functions `num/den` over the Laurent ring.
//!
//! Coordinates of r-independent elements are not always Laurent: the
//! difference-quotient terms of the generator multiplication rules and the
//! commutator relation carry denominators like `1 - v^-2`. This type keeps
//! them exact. Canonical form: `den` has no negative exponents, minimal
//! exponent zero, positive leading coefficient, integer content 1, and
//! `gcd(num, den) = 1`, so structural equality is semantic equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{divide_exact, LaurentPoly, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: LaurentPoly, mut den: LaurentPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let mut num = num;
        // polynomial gcd (primitive, unit-normalised)
        let g = poly_gcd(&num, &den);
        if !g.is_one() {
            num = divide_exact(&num, &g).expect("gcd divides numerator");
            den = divide_exact(&den, &g).expect("gcd divides denominator");
        }
        // integer content
        let c = gcd_int(&num.content(), &den.content());
        if !c.is_one() {
            let cpoly = LaurentPoly::int(c);
            num = divide_exact(&num, &cpoly).unwrap();
            den = divide_exact(&den, &cpoly).unwrap();
        }
        // unit normalisation: den a genuine polynomial starting at degree 0
        let shift = den.min_exp().unwrap();
        if shift != 0 {
            den = den.mul_monomial(-shift);
            num = num.mul_monomial(-shift);
        }
        if den.coeff(den.max_exp().unwrap()).is_negative() {
            den = -&den;
            num = -&num;
        }
        RatFunc { num, den }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// The underlying Laurent polynomial, if the denominator is trivial.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        if self.is_laurent() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    pub fn scale(&self, p: &LaurentPoly) -> Self {
        Self::reduced(&self.num * p, self.den.clone())
    }

    pub fn div_poly(&self, p: &LaurentPoly) -> Result<Self, PolyError> {
        if p.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(Self::reduced(self.num.clone(), &self.den * p))
    }

    pub fn inverse(&self) -> Result<Self, PolyError> {
        if self.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc {
            num: p,
            den: LaurentPoly::one(),
        }
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::reduced(num, &self.den * &rhs.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RatFunc::reduced(num, &self.den * &rhs.den)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

// Laurent coefficients serialize in the plain polynomial shape; genuine
// fractions get an explicit {"num","den"} object.
impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.den.is_one() {
            self.num.serialize(serializer)
        } else {
            use serde::ser::SerializeStruct;
            let mut s = serializer.serialize_struct("RatFunc", 2)?;
            s.serialize_field("num", &self.num)?;
            s.serialize_field("den", &self.den)?;
            s.end()
        }
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(deserializer)?;
        let obj = value
            .as_object()
            .ok_or_else(|| D::Error::custom("expected object"))?;
        if obj.contains_key("num") {
            let num: LaurentPoly = serde_json::from_value(obj["num"].clone())
                .map_err(D::Error::custom)?;
            let den: LaurentPoly = serde_json::from_value(
                obj.get("den").cloned().unwrap_or(serde_json::Value::Null),
            )
            .map_err(D::Error::custom)?;
            RatFunc::new(num, den).map_err(D::Error::custom)
        } else {
            let p: LaurentPoly =
                serde_json::from_value(value.clone()).map_err(D::Error::custom)?;
            Ok(RatFunc::from(p))
        }
    }
}

fn gcd_int(a: &BigInt, b: &BigInt) -> BigInt {
    let mut x = a.abs();
    let mut y = b.abs();
    while !y.is_zero() {
        let r = &x % &y;
        x = y;
        y = r;
    }
    x
}

/// Dense polynomial over Z, index = degree.
fn to_dense(p: &LaurentPoly) -> Vec<BigInt> {
    let min = p.min_exp().unwrap();
    let max = p.max_exp().unwrap();
    let mut out = vec![BigInt::zero(); (max - min + 1) as usize];
    for (e, c) in p.iter() {
        out[(e - min) as usize] = c.clone();
    }
    out
}

fn dense_trim(v: &mut Vec<BigInt>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

fn dense_content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        g = gcd_int(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn dense_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let c = dense_content(&v);
    if !c.is_zero() && !c.is_one() {
        for x in &mut v {
            *x = &*x / &c;
        }
    }
    v
}

/// Pseudo-remainder of `a` by `b` (both trimmed, `b` nonempty).
fn dense_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r: Vec<BigInt> = a.to_vec();
    dense_trim(&mut r);
    let db = b.len() - 1;
    let lb = b[db].clone();
    while r.len() >= b.len() && !r.is_empty() {
        let dr = r.len() - 1;
        let lead = r[dr].clone();
        for x in &mut r {
            *x = &*x * &lb;
        }
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = &r[i + shift] - &(&lead * bc);
        }
        dense_trim(&mut r);
    }
    r
}

/// Primitive gcd of two nonzero Laurent polynomials, unit-normalised to a
/// polynomial with minimal exponent 0 and positive leading coefficient.
/// The integer content is deliberately dropped (handled by the caller).
fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let mut p = dense_primitive(to_dense(a));
    let mut q = dense_primitive(to_dense(b));
    dense_trim(&mut p);
    dense_trim(&mut q);
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_empty() {
        let r = dense_primitive(dense_prem(&p, &q));
        p = q;
        q = r;
    }
    let mut g = LaurentPoly::zero();
    for (i, c) in p.iter().enumerate() {
        g.add_term(c, i as i64);
    }
    if g.is_zero() {
        return LaurentPoly::one();
    }
    if g.coeff(g.max_exp().unwrap()).is_negative() {
        g = -&g;
    }
    g
}
