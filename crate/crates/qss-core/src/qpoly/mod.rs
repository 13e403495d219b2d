//! Exact Laurent-polynomial arithmetic in the deformation variable `v`
//! (denoted υ in most of the literature), with `q = v^2` throughout.
//!
//! All quantum scalars used by the algebra layers live here: the bracket
//! integers `[[n]] = 1 + q + ... + q^{n-1}`, the symmetric integers
//! `[n] = (v^n - v^-n)/(v - v^-1)`, their factorials, the Gaussian binomials
//! in both normalisations plus the bar-normalised form, and exact division.
//!
//! The signed variants `q_h = q^{±1}`, `v_h = v^{±1}` are realised by
//! negating exponents on the fly; there is a single canonical ring type.

mod ratfunc;

pub use ratfunc::RatFunc;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as DeError;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Errors from the polynomial layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    /// A division was requested whose remainder is nonzero. In the algebra
    /// layers this always signals a formula-implementation bug, never bad
    /// user data.
    #[error("non-exact division (nonzero remainder)")]
    NonExactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("invalid arguments: {0}")]
    InvalidArgs(String),
}

/// Exponent sign selector for the `q_h`/`v_h` variants: `Plus` is the plain
/// variable, `Minus` substitutes `v -> v^-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarSign {
    Plus,
    Minus,
}

impl VarSign {
    /// `+1` or `-1` as an exponent multiplier.
    pub fn factor(self) -> i64 {
        match self {
            VarSign::Plus => 1,
            VarSign::Minus => -1,
        }
    }

    /// The sign attached to a 1-based row/column index `h` when the first
    /// `m` indices are even: `Plus` for `h <= m`, `Minus` beyond.
    pub fn for_index(h: usize, m: usize) -> VarSign {
        if h <= m {
            VarSign::Plus
        } else {
            VarSign::Minus
        }
    }
}

/// An integer-coefficient Laurent polynomial in `v`.
///
/// Invariant: no stored coefficient is zero, so the zero polynomial is the
/// empty map and structural equality is semantic equality. Iteration is
/// sorted by exponent, which makes serialization deterministic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0)
    }

    /// `v^exp`.
    pub fn monomial(exp: i64) -> Self {
        LaurentPoly::term(BigInt::one(), exp)
    }

    /// `coeff * v^exp`.
    pub fn term(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let c: BigInt = coeff.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        LaurentPoly { coeffs }
    }

    /// The constant polynomial `n`.
    pub fn int(n: impl Into<BigInt>) -> Self {
        LaurentPoly::term(n, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(0).is_one()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, coeff: &BigInt, exp: i64) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    /// Multiply by `v^exp`, i.e. shift every exponent.
    pub fn mul_monomial(&self, exp: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, a)| (e + exp, a.clone())).collect(),
        }
    }

    /// The substitution `v -> v^-1`.
    pub fn substitute_inverse(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, a)| (-e, a.clone())).collect(),
        }
    }

    /// Evaluate at an integer point. Requires all exponents nonnegative;
    /// shift with [`LaurentPoly::mul_monomial`] first when needed.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (e, c) in &self.coeffs {
            assert!(*e >= 0, "eval_int requires nonnegative exponents");
            acc += c * x.pow(*e as u32);
        }
        acc
    }

    /// The gcd of all coefficients (positive), zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.coeffs.values() {
            g = num_integer_gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }
}

fn num_integer_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut x = a.abs();
    let mut y = b.abs();
    while !y.is_zero() {
        let r = &x % &y;
        x = y;
        y = r;
    }
    x
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(c, *e);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(&(-c), *e);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(&(c1 * c2), e1 + e2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // highest exponent first
        for (e, c) in self.coeffs.iter().rev() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let show_coeff = !mag.is_one() || *e == 0;
            if show_coeff {
                write!(f, "{}", mag)?;
            }
            if *e != 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if *e == 1 {
                    write!(f, "v")?;
                } else {
                    write!(f, "v^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

// JSON shape: {"v": {"<exponent>": <integer>, ...}}; zero is {"v": {}}.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut outer = serializer.serialize_struct("LaurentPoly", 1)?;
        outer.serialize_field("v", &CoeffMap(&self.coeffs))?;
        outer.end()
    }
}

struct CoeffMap<'a>(&'a BTreeMap<i64, BigInt>);

impl Serialize for CoeffMap<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (e, c) in self.0 {
            let num = serde_json::Number::from_str(&c.to_string())
                .map_err(serde::ser::Error::custom)?;
            map.serialize_entry(&e.to_string(), &num)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Outer {
            v: BTreeMap<String, serde_json::Number>,
        }
        let outer = Outer::deserialize(deserializer)?;
        let mut out = LaurentPoly::zero();
        for (k, n) in outer.v {
            let exp: i64 = k
                .parse()
                .map_err(|_| D::Error::custom(format!("bad exponent key {k:?}")))?;
            let coeff = BigInt::from_str(&n.to_string())
                .map_err(|_| D::Error::custom(format!("bad integer coefficient {n}")))?;
            out.add_term(&coeff, exp);
        }
        Ok(out)
    }
}

/// Which normalisation of the quantum integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntVariant {
    /// `[[n]] = 1 + q_h + ... + q_h^{n-1}`.
    BracketQ,
    /// `[n] = (v_h^n - v_h^-n)/(v_h - v_h^-1)`.
    SymmetricV,
}

/// The quantum integer `[[n]]` or `[n]` in the signed variable.
pub fn quantum_int(n: u32, variant: IntVariant, sign: VarSign) -> LaurentPoly {
    let sf = sign.factor();
    let mut out = LaurentPoly::zero();
    match variant {
        IntVariant::BracketQ => {
            for i in 0..n as i64 {
                out.add_term(&BigInt::one(), 2 * sf * i);
            }
        }
        IntVariant::SymmetricV => {
            for i in 0..n as i64 {
                out.add_term(&BigInt::one(), sf * (n as i64 - 1 - 2 * i));
            }
        }
    }
    out
}

/// `[[n]]!` or `[n]!` in the signed variable; `[0]! = 1`.
pub fn quantum_factorial(n: u32, variant: IntVariant, sign: VarSign) -> LaurentPoly {
    let mut out = LaurentPoly::one();
    for i in 1..=n {
        out = &out * &quantum_int(i, variant, sign);
    }
    out
}

/// Which normalisation of the Gaussian binomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinomVariant {
    /// `[[N s]] = [[N]]! / ([[s]]! [[N-s]]!)` in `q_h`.
    Bracket,
    /// `[N s] = [N]! / ([s]! [N-s]!)` in `v_h`.
    Symmetric,
    /// `q_h^{-s(N-s)} [[N s]]`, the overlined form.
    Bar,
}

/// Gaussian binomial in the requested normalisation and signed variable.
pub fn gauss_binomial(
    n: u32,
    s: u32,
    variant: BinomVariant,
    sign: VarSign,
) -> Result<LaurentPoly, PolyError> {
    if s > n {
        return Err(PolyError::InvalidArgs(format!(
            "binomial lower index {s} exceeds upper index {n}"
        )));
    }
    let sf = sign.factor();
    let num = quantum_factorial(n, IntVariant::BracketQ, sign);
    let den = &quantum_factorial(s, IntVariant::BracketQ, sign)
        * &quantum_factorial(n - s, IntVariant::BracketQ, sign);
    let bracket = divide_exact(&num, &den)?;
    let shift = (s as i64) * ((n - s) as i64);
    Ok(match variant {
        BinomVariant::Bracket => bracket,
        BinomVariant::Symmetric => bracket.mul_monomial(-sf * shift),
        BinomVariant::Bar => bracket.mul_monomial(-2 * sf * shift),
    })
}

/// Exact quotient in the Laurent ring.
///
/// Fails with [`PolyError::NonExactDivision`] when `den` does not divide
/// `num`; callers in the algebra layers treat that as a bug detector.
pub fn divide_exact(num: &LaurentPoly, den: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
    if den.is_zero() {
        return Err(PolyError::DivisionByZero);
    }
    if num.is_zero() {
        return Ok(LaurentPoly::zero());
    }
    let den_max = den.max_exp().unwrap();
    let den_lead = den.coeff(den_max);
    // any exact quotient has exponents within this window
    let min_quot_exp = num.min_exp().unwrap() - den.min_exp().unwrap();
    let mut rem = num.clone();
    let mut quot = LaurentPoly::zero();
    while !rem.is_zero() {
        let rem_max = rem.max_exp().unwrap();
        let rem_lead = rem.coeff(rem_max);
        let shift = rem_max - den_max;
        if shift < min_quot_exp {
            return Err(PolyError::NonExactDivision);
        }
        let (q, r) = num_integer::div_rem_bigint(&rem_lead, &den_lead);
        if !r.is_zero() {
            return Err(PolyError::NonExactDivision);
        }
        quot.add_term(&q, shift);
        let killer = den.mul_monomial(shift).scale_int(&q);
        rem = &rem - &killer;
    }
    Ok(quot)
}

mod num_integer {
    use num_bigint::BigInt;

    pub fn div_rem_bigint(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        (a / b, a % b)
    }
}
