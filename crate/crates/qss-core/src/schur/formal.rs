//! r-independent coordinates: the uniform elements `A(j,r)`, the basis
//! `{A(j)}` of the realisation space, multiplication by the torus elements
//! `O(j)` and by the raising/lowering generators, truncation back to a fixed
//! degree, and the ordered monomial products.

use std::collections::BTreeMap;

use serde::de::Error as DeError;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::qpoly::{
    gauss_binomial, quantum_factorial, BinomVariant, IntVariant, LaurentPoly, RatFunc, VarSign,
};
use crate::weyl::{
    add_vecs, alpha_vec, beta_vec, enumerate_compositions, matrix_stat, signed_dot,
    triple_sequence, MatrixStat, SuperMatrix, TripleOrder,
};

use super::coeff;
use super::{SchurBasis, SchurElement, SchurError};

/// Which side a torus factor multiplies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A raising or lowering generator, indexed by the 1-based position `h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gen {
    E(usize),
    F(usize),
}

/// A finite coordinate vector over the basis pairs `(A, j)` with `A` a
/// zero-diagonal matrix and `j` an integer vector. Coefficients are exact
/// rational functions: the difference-quotient terms of the generator rules
/// and the commutator right-hand sides genuinely leave the Laurent ring.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FormalCoord {
    pub m: usize,
    pub n: usize,
    terms: BTreeMap<(SuperMatrix, Vec<i64>), RatFunc>,
}

impl FormalCoord {
    pub fn zero(m: usize, n: usize) -> Self {
        FormalCoord {
            m,
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `O(0)`.
    pub fn unit(m: usize, n: usize) -> Self {
        FormalCoord::basis(SuperMatrix::zero(m, n), vec![0; m + n])
    }

    /// The basis element `A(j)`.
    pub fn basis(a: SuperMatrix, j: Vec<i64>) -> Self {
        debug_assert!(a.is_zero_diag());
        debug_assert_eq!(j.len(), a.size());
        let (m, n) = (a.m, a.n);
        let mut out = FormalCoord::zero(m, n);
        out.add_term(a, j, &RatFunc::one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(SuperMatrix, Vec<i64>), &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: &SuperMatrix, j: &[i64]) -> RatFunc {
        self.terms
            .get(&(a.clone(), j.to_vec()))
            .cloned()
            .unwrap_or_else(RatFunc::zero)
    }

    pub fn add_term(&mut self, a: SuperMatrix, j: Vec<i64>, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        debug_assert!(a.is_zero_diag());
        let key = (a, j);
        let entry = self.terms.entry(key.clone()).or_insert_with(RatFunc::zero);
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, rhs: &FormalCoord) -> FormalCoord {
        debug_assert!((self.m, self.n) == (rhs.m, rhs.n));
        let mut out = self.clone();
        for ((a, j), c) in &rhs.terms {
            out.add_term(a.clone(), j.clone(), c);
        }
        out
    }

    pub fn sub(&self, rhs: &FormalCoord) -> FormalCoord {
        let mut out = self.clone();
        for ((a, j), c) in &rhs.terms {
            out.add_term(a.clone(), j.clone(), &-c);
        }
        out
    }

    pub fn scale(&self, c: &RatFunc) -> FormalCoord {
        if c.is_zero() {
            return FormalCoord::zero(self.m, self.n);
        }
        FormalCoord {
            m: self.m,
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.clone(), a * c))
                .collect(),
        }
    }

    pub fn scale_poly(&self, c: &LaurentPoly) -> FormalCoord {
        self.scale(&RatFunc::from(c.clone()))
    }

    /// Divide every coefficient by a polynomial (for divided powers).
    pub fn div_poly(&self, c: &LaurentPoly) -> Result<FormalCoord, SchurError> {
        let mut out = FormalCoord::zero(self.m, self.n);
        for ((a, j), x) in &self.terms {
            out.add_term(a.clone(), j.clone(), &x.div_poly(c)?);
        }
        Ok(out)
    }

    /// The common grading degree of all keys, when uniform.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.keys();
        let first = it.next()?.0.parity();
        for (a, _) in it {
            if a.parity() != first {
                return None;
            }
        }
        Some(first)
    }
}

impl Serialize for FormalCoord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            matrix: &'a SuperMatrix,
            j: &'a Vec<i64>,
            coeff: &'a RatFunc,
        }
        let mut s = serializer.serialize_struct("FormalCoord", 3)?;
        s.serialize_field("m", &self.m)?;
        s.serialize_field("n", &self.n)?;
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|((a, j), c)| Term {
                matrix: a,
                j,
                coeff: c,
            })
            .collect();
        s.serialize_field("terms", &terms)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for FormalCoord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Term {
            matrix: SuperMatrix,
            j: Vec<i64>,
            coeff: RatFunc,
        }
        #[derive(Deserialize)]
        struct Raw {
            m: usize,
            n: usize,
            terms: Vec<Term>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut out = FormalCoord::zero(raw.m, raw.n);
        for term in raw.terms {
            if (term.matrix.m, term.matrix.n) != (raw.m, raw.n) {
                return Err(D::Error::custom("matrix dimensions disagree"));
            }
            if !term.matrix.is_zero_diag() {
                return Err(D::Error::custom("basis matrix must have zero diagonal"));
            }
            if term.j.len() != raw.m + raw.n {
                return Err(D::Error::custom("torus exponent vector has wrong length"));
            }
            SuperMatrix::new(raw.m, raw.n, term.matrix.entries.clone())
                .map_err(D::Error::custom)?;
            out.add_term(term.matrix, term.j, &term.coeff);
        }
        Ok(out)
    }
}

/// The degree-`r` truncation `A(j,r)`: the signed, `v`-weighted sum of
/// `ξ_{A+λ}` over diagonal completions `λ` of degree `r - |A|`; zero when
/// `|A| > r`.
pub fn a_element(a: &SuperMatrix, j: &[i64], r: u32) -> Result<SchurElement, SchurError> {
    if !a.is_zero_diag() {
        return Err(SchurError::NotInM);
    }
    let (m, n) = (a.m, a.n);
    let mut out = SchurElement::zero(m, n, r, SchurBasis::Xi);
    let body = a.total();
    if body > r {
        return Ok(out);
    }
    for lam in enumerate_compositions(m, n, r - body) {
        let full = a.plus_diag(&lam);
        let abar = matrix_stat(&full, MatrixStat::ABar).unwrap();
        let dot = signed_dot(&lam.as_ivec(), j, m)?;
        let mut c = LaurentPoly::monomial(dot);
        if abar % 2 != 0 {
            c = -&c;
        }
        out.add_term(full, &c);
    }
    Ok(out)
}

/// `O(j,r) = (zero matrix)(j,r)`, the invertible torus element at degree `r`.
pub fn o_element(m: usize, n: usize, j: &[i64], r: u32) -> Result<SchurElement, SchurError> {
    a_element(&SuperMatrix::zero(m, n), j, r)
}

/// Torus multiplication in r-independent coordinates:
/// `O(j) A(j') = v^{ro(A)·j} A(j+j')` and `A(j') O(j) = v^{co(A)·j} A(j+j')`.
pub fn mul_o_formal(j: &[i64], x: &FormalCoord, side: Side) -> Result<FormalCoord, SchurError> {
    if j.len() != x.m + x.n {
        return Err(SchurError::ShapeMismatch);
    }
    let mut out = FormalCoord::zero(x.m, x.n);
    for ((a, jp), c) in x.terms() {
        let weight = match side {
            Side::Left => a.ro(),
            Side::Right => a.co(),
        };
        let dot = signed_dot(&weight.as_ivec(), j, x.m)?;
        out.add_term(
            a.clone(),
            add_vecs(jp, j),
            &c.scale(&LaurentPoly::monomial(dot)),
        );
    }
    Ok(out)
}

/// Left multiplication by a raising or lowering generator in r-independent
/// coordinates: the four-part closed formula, with target matrices outside
/// `M(m|n)` dropped and the difference-quotient part carried exactly as a
/// rational coefficient.
pub fn mul_gen_formal(gen: Gen, x: &FormalCoord) -> Result<FormalCoord, SchurError> {
    let (m, n) = (x.m, x.n);
    let size = m + n;
    let h = match gen {
        Gen::E(h) | Gen::F(h) => h,
    };
    if h < 1 || h >= size {
        return Err(SchurError::IndexOutOfRange);
    }
    let eps = coeff::epsilon(h, m);
    let mut out = FormalCoord::zero(m, n);
    for ((a, j), c) in x.terms() {
        match gen {
            Gen::E(_) => mul_e_term(&mut out, a, j, c, h, eps)?,
            Gen::F(_) => mul_f_term(&mut out, a, j, c, h, eps)?,
        }
    }
    Ok(out)
}

fn mul_e_term(
    out: &mut FormalCoord,
    a: &SuperMatrix,
    j: &[i64],
    c: &RatFunc,
    h: usize,
    eps: u8,
) -> Result<(), SchurError> {
    let m = a.m;
    let size = a.size();
    let sf = VarSign::for_index(h, m).factor();
    let alpha = alpha_vec(size, h);
    let beta = beta_vec(size, h);
    for k in 1..=size {
        if k == h {
            // difference-quotient part, alive only when the subdiagonal
            // entry can be removed
            if a.entry(h + 1, h) < 1 {
                continue;
            }
            let target = a
                .shifted(&[(h + 1, h, -1)])
                .expect("removing an entry stays in M");
            let exp = sf * (coeff::exp_f_unified(a, h, k) - j[h - 1] - 1);
            let sign = coeff::sigma_sign(a, h, k);
            let den = &LaurentPoly::one() - &LaurentPoly::monomial(-2 * sf);
            let base = c
                .scale(&(&sign * &LaurentPoly::monomial(exp)))
                .div_poly(&den)?;
            out.add_term(target.clone(), add_vecs(j, &alpha), &base);
            out.add_term(target, add_vecs(j, &beta), &-&base);
        } else if k == h + 1 {
            let Some(target) = a.shifted(&[(h, h + 1, 1)]) else {
                continue;
            };
            let jsgn = if eps == 0 { 1 } else { -1 };
            let exp = sf * (coeff::exp_f_unified(a, h, k) + jsgn * j[h]);
            let sign = coeff::sigma_sign(a, h, k);
            let bar = gauss_binomial(
                a.entry(h, h + 1) + 1,
                1,
                BinomVariant::Bar,
                VarSign::for_index(h, m),
            )?;
            let coeff_val = &(&sign * &LaurentPoly::monomial(exp)) * &bar;
            out.add_term(target, j.to_vec(), &c.scale(&coeff_val));
        } else {
            if a.entry(h + 1, k) < 1 {
                continue;
            }
            let Some(target) = a.shifted(&[(h, k, 1), (h + 1, k, -1)]) else {
                continue;
            };
            let exp = sf * coeff::exp_f_unified(a, h, k);
            let sign = coeff::sigma_sign(a, h, k);
            let bar = gauss_binomial(
                a.entry(h, k) + 1,
                1,
                BinomVariant::Bar,
                VarSign::for_index(h, m),
            )?;
            let coeff_val = &(&sign * &LaurentPoly::monomial(exp)) * &bar;
            let jtarget = if k < h {
                add_vecs(j, &alpha)
            } else {
                j.to_vec()
            };
            out.add_term(target, jtarget, &c.scale(&coeff_val));
        }
    }
    Ok(())
}

fn mul_f_term(
    out: &mut FormalCoord,
    a: &SuperMatrix,
    j: &[i64],
    c: &RatFunc,
    h: usize,
    eps: u8,
) -> Result<(), SchurError> {
    let m = a.m;
    let size = a.size();
    let sf = VarSign::for_index(h + 1, m).factor();
    let alpha = alpha_vec(size, h);
    let beta = beta_vec(size, h);
    let minus_alpha: Vec<i64> = alpha.iter().map(|x| -x).collect();
    for k in 1..=size {
        if k == h + 1 {
            if a.entry(h, h + 1) < 1 {
                continue;
            }
            let target = a
                .shifted(&[(h, h + 1, -1)])
                .expect("removing an entry stays in M");
            let exp = sf * (coeff::exp_fp_unified(a, h, k) - j[h] - 1);
            let sign = coeff::sigma_sign(a, h, k);
            let den = &LaurentPoly::one() - &LaurentPoly::monomial(-2 * sf);
            let base = c
                .scale(&(&sign * &LaurentPoly::monomial(exp)))
                .div_poly(&den)?;
            out.add_term(target.clone(), add_vecs(j, &minus_alpha), &base);
            out.add_term(target, add_vecs(j, &beta), &-&base);
        } else if k == h {
            let Some(target) = a.shifted(&[(h + 1, h, 1)]) else {
                continue;
            };
            let jsgn = if eps == 0 { 1 } else { -1 };
            let exp = sf * (coeff::exp_fp_unified(a, h, k) + jsgn * j[h - 1]);
            let sign = coeff::sigma_sign(a, h, k);
            let bar = gauss_binomial(
                a.entry(h + 1, h) + 1,
                1,
                BinomVariant::Bar,
                VarSign::for_index(h + 1, m),
            )?;
            let coeff_val = &(&sign * &LaurentPoly::monomial(exp)) * &bar;
            out.add_term(target, j.to_vec(), &c.scale(&coeff_val));
        } else {
            if a.entry(h, k) < 1 {
                continue;
            }
            let Some(target) = a.shifted(&[(h, k, -1), (h + 1, k, 1)]) else {
                continue;
            };
            let exp = sf * coeff::exp_fp_unified(a, h, k);
            let sign = coeff::sigma_sign(a, h, k);
            let bar = gauss_binomial(
                a.entry(h + 1, k) + 1,
                1,
                BinomVariant::Bar,
                VarSign::for_index(h + 1, m),
            )?;
            let coeff_val = &(&sign * &LaurentPoly::monomial(exp)) * &bar;
            let jtarget = if k < h {
                j.to_vec()
            } else {
                add_vecs(j, &minus_alpha)
            };
            out.add_term(target, jtarget, &c.scale(&coeff_val));
        }
    }
    Ok(())
}

/// Truncate an r-independent element to a fixed degree. Coefficients must
/// come out Laurent; a leftover denominator signals an upstream bug and is
/// reported as a non-exact division.
pub fn truncate(x: &FormalCoord, r: u32) -> Result<SchurElement, SchurError> {
    let (m, n) = (x.m, x.n);
    let mut acc: BTreeMap<SuperMatrix, RatFunc> = BTreeMap::new();
    for ((a, j), c) in x.terms() {
        let body = a.total();
        if body > r {
            continue;
        }
        for lam in enumerate_compositions(m, n, r - body) {
            let full = a.plus_diag(&lam);
            let abar = matrix_stat(&full, MatrixStat::ABar).unwrap();
            let dot = signed_dot(&lam.as_ivec(), j, m)?;
            let mut w = LaurentPoly::monomial(dot);
            if abar % 2 != 0 {
                w = -&w;
            }
            let entry = acc.entry(full).or_insert_with(RatFunc::zero);
            *entry = &*entry + &c.scale(&w);
        }
    }
    let mut out = SchurElement::zero(m, n, r, SchurBasis::Xi);
    for (a, c) in acc {
        if c.is_zero() {
            continue;
        }
        let poly = c
            .to_laurent()
            .ok_or(SchurError::Poly(crate::qpoly::PolyError::NonExactDivision))?;
        out.add_term(a, &poly);
    }
    Ok(out)
}

/// The ordered monomial product `M_{A,j}`: lowering divided powers along
/// the second order, the torus element `O(j)`, then raising divided powers
/// along the first order, all evaluated in r-independent coordinates.
pub fn monomial_formal(a: &SuperMatrix, j: &[i64]) -> Result<FormalCoord, SchurError> {
    if !a.is_zero_diag() {
        return Err(SchurError::NotInM);
    }
    let (m, n) = (a.m, a.n);
    let size = m + n;
    let mut acc = FormalCoord::unit(m, n);
    if size >= 2 {
        for &(i, h, jj) in triple_sequence(size, TripleOrder::Leq1).iter().rev() {
            let p = a.entry(i, jj);
            acc = apply_divided_power(acc, Gen::E(h), p, m)?;
        }
    }
    acc = mul_o_formal(j, &acc, Side::Left)?;
    if size >= 2 {
        for &(i, h, jj) in triple_sequence(size, TripleOrder::Leq2).iter().rev() {
            let p = a.entry(jj, i);
            acc = apply_divided_power(acc, Gen::F(h), p, m)?;
        }
    }
    Ok(acc)
}

/// `gen^p / [p]!` applied on the left.
fn apply_divided_power(
    mut acc: FormalCoord,
    gen: Gen,
    p: u32,
    m: usize,
) -> Result<FormalCoord, SchurError> {
    if p == 0 {
        return Ok(acc);
    }
    let var_index = match gen {
        Gen::E(h) => h,
        Gen::F(h) => h + 1,
    };
    let h = match gen {
        Gen::E(h) | Gen::F(h) => h,
    };
    if h == m && p > 1 {
        return Err(SchurError::UnsupportedPower);
    }
    for _ in 0..p {
        acc = mul_gen_formal(gen, &acc)?;
    }
    if p > 1 {
        let fact = quantum_factorial(p, IntVariant::SymmetricV, VarSign::for_index(var_index, m));
        acc = acc.div_poly(&fact)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::quantum_int;
    use crate::weyl::{enumerate_matrices, MatrixFamily};

    fn sm(m: usize, n: usize, rows: &[&[u32]]) -> SuperMatrix {
        SuperMatrix::new(m, n, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn e12(m: usize, n: usize) -> SuperMatrix {
        SuperMatrix::unit(m, n, 1, 2)
    }

    #[test]
    fn o_element_is_identity_resolution() {
        // O(0, r) = Σ_λ ξ_{diag λ}
        let o = o_element(1, 1, &[0, 0], 3).unwrap();
        assert_eq!(o.len(), 4);
        for (a, c) in o.terms() {
            assert!(a.zero_diag_part().total() == 0);
            assert!(c.is_one());
        }
    }

    #[test]
    fn a_element_vanishes_beyond_degree() {
        let a = e12(1, 1);
        assert!(a_element(&a, &[0, 0], 0).unwrap().is_zero());
    }

    #[test]
    fn a_element_expansion_for_e12() {
        // E_12(0, 2) over (1|1): completions λ ∈ Λ(1|1,1)
        let a = e12(1, 1);
        let got = a_element(&a, &[0, 0], 2).unwrap();
        assert_eq!(got.len(), 2);
        let t1 = sm(1, 1, &[&[1, 1], &[0, 0]]);
        let t2 = sm(1, 1, &[&[0, 1], &[0, 1]]);
        assert!(got.coeff(&t1).is_one());
        assert!(got.coeff(&t2).is_one());
    }

    #[test]
    fn a_element_weights_by_signed_dot() {
        let a = e12(1, 1);
        let got = a_element(&a, &[1, -1], 2).unwrap();
        let t1 = sm(1, 1, &[&[1, 1], &[0, 0]]); // λ = (1,0): dot = 1
        let t2 = sm(1, 1, &[&[0, 1], &[0, 1]]); // λ = (0,1): dot = +1 (sign -1 · -1)
        assert_eq!(got.coeff(&t1), LaurentPoly::monomial(1));
        assert_eq!(got.coeff(&t2), LaurentPoly::monomial(1));
    }

    #[test]
    fn torus_rules() {
        let (m, n) = (1usize, 1usize);
        let x = FormalCoord::basis(e12(m, n), vec![0, 0]);
        // O(0) X = X
        let id = mul_o_formal(&[0, 0], &x, Side::Left).unwrap();
        assert_eq!(id, x);
        // O(j) O(j') = O(j + j')
        let o = FormalCoord::unit(m, n);
        let oj = mul_o_formal(&[2, -1], &o, Side::Left).unwrap();
        let ojj = mul_o_formal(&[1, 1], &oj, Side::Left).unwrap();
        assert_eq!(ojj, FormalCoord::basis(SuperMatrix::zero(m, n), vec![3, 0]));
        // left weights by ro, right by co
        let left = mul_o_formal(&[1, 0], &x, Side::Left).unwrap();
        assert_eq!(
            left.coeff(&e12(m, n), &[1, 0]),
            RatFunc::from(LaurentPoly::monomial(1))
        );
        let right = mul_o_formal(&[1, 0], &x, Side::Right).unwrap();
        assert!(right.coeff(&e12(m, n), &[1, 0]).is_one());
    }

    #[test]
    fn raising_generator_on_unit() {
        // E_h · O(0) = (E_{h,h+1})(0): all sums empty except the insertion
        for (m, n) in [(1usize, 1usize), (2, 1), (1, 2)] {
            for h in 1..(m + n) {
                let got = mul_gen_formal(Gen::E(h), &FormalCoord::unit(m, n)).unwrap();
                assert_eq!(got.len(), 1);
                assert!(got
                    .coeff(&SuperMatrix::unit(m, n, h, h + 1), &vec![0; m + n])
                    .is_one());
            }
        }
    }

    #[test]
    fn commutator_yields_torus_difference_quotient() {
        // [E_h, F_h] O(0) = (O(α_h) - O(-α_h)) / (v_h - v_h^-1),
        // with the anticommutator at the odd position
        for (m, n, h) in [(1usize, 1usize, 1usize), (2, 1, 1), (2, 1, 2), (1, 2, 2)] {
            let unit = FormalCoord::unit(m, n);
            let ef = mul_gen_formal(Gen::E(h), &mul_gen_formal(Gen::F(h), &unit).unwrap()).unwrap();
            let fe = mul_gen_formal(Gen::F(h), &mul_gen_formal(Gen::E(h), &unit).unwrap()).unwrap();
            let bracket = if h == m { ef.add(&fe) } else { ef.sub(&fe) };
            let size = m + n;
            let sf = VarSign::for_index(h, m).factor();
            let den = &LaurentPoly::monomial(sf) - &LaurentPoly::monomial(-sf);
            let expect = FormalCoord::basis(SuperMatrix::zero(m, n), alpha_vec(size, h))
                .sub(&FormalCoord::basis(
                    SuperMatrix::zero(m, n),
                    alpha_vec(size, h).iter().map(|x| -x).collect(),
                ))
                .div_poly(&den)
                .unwrap();
            assert_eq!(bracket, expect, "m={m} n={n} h={h}");
        }
    }

    #[test]
    fn odd_generator_squares_to_zero() {
        for (m, n) in [(1usize, 1usize), (2, 1), (1, 2), (2, 2)] {
            let h = m;
            let once = mul_gen_formal(Gen::E(h), &FormalCoord::unit(m, n)).unwrap();
            let twice = mul_gen_formal(Gen::E(h), &once).unwrap();
            assert!(twice.is_zero(), "E_m^2 != 0 at m={m} n={n}");
            let once = mul_gen_formal(Gen::F(h), &FormalCoord::unit(m, n)).unwrap();
            let twice = mul_gen_formal(Gen::F(h), &once).unwrap();
            assert!(twice.is_zero(), "F_m^2 != 0 at m={m} n={n}");
        }
    }

    #[test]
    fn divided_power_identity() {
        // E_h(0)^2 = [2]_{v_h} (2 E_{h,h+1})(0) away from the odd position
        for (m, n, h) in [(2usize, 1usize, 1usize), (1, 2, 2), (2, 2, 1), (2, 2, 3)] {
            let unit = FormalCoord::unit(m, n);
            let sq = mul_gen_formal(Gen::E(h), &mul_gen_formal(Gen::E(h), &unit).unwrap()).unwrap();
            let mut two_e = SuperMatrix::zero(m, n);
            two_e.entries[h - 1][h] = 2;
            let bracket2 = quantum_int(2, IntVariant::SymmetricV, VarSign::for_index(h, m));
            let expect = FormalCoord::basis(two_e, vec![0; m + n]).scale_poly(&bracket2);
            assert_eq!(sq, expect, "m={m} n={n} h={h}");
        }
    }

    #[test]
    fn truncate_unit_is_identity_element() {
        for r in 0..=3u32 {
            let got = truncate(&FormalCoord::unit(1, 1), r).unwrap();
            assert_eq!(
                got,
                o_element(1, 1, &[0, 0], r).unwrap()
            );
        }
    }

    #[test]
    fn truncate_empties_high_body_terms() {
        let x = FormalCoord::basis(sm(1, 1, &[&[0, 1], &[1, 0]]), vec![0, 0]);
        assert!(truncate(&x, 1).unwrap().is_zero());
    }

    #[test]
    fn truncation_resolves_difference_quotients() {
        // the commutator value truncates to Laurent coefficients at each r
        let unit = FormalCoord::unit(1, 1);
        let ef = mul_gen_formal(Gen::E(1), &mul_gen_formal(Gen::F(1), &unit).unwrap()).unwrap();
        let fe = mul_gen_formal(Gen::F(1), &mul_gen_formal(Gen::E(1), &unit).unwrap()).unwrap();
        let bracket = ef.add(&fe);
        for r in 0..=3u32 {
            let t = truncate(&bracket, r).unwrap();
            // coefficients are the symmetric integers [λ_1 - (-λ_2)] = [λ_1+λ_2]...
            // concretely at ξ_{diag(λ)} the coefficient is [λ_1 + λ_2] = [r]
            for lam in enumerate_compositions(1, 1, r) {
                let d = SuperMatrix::from_diag(&lam);
                assert_eq!(
                    t.coeff(&d),
                    quantum_int(r, IntVariant::SymmetricV, VarSign::Plus),
                    "r={r} λ={:?}",
                    lam.parts
                );
            }
        }
    }

    #[test]
    fn monomial_of_zero_matrix_is_torus() {
        let got = monomial_formal(&SuperMatrix::zero(1, 1), &[2, -1]).unwrap();
        assert_eq!(got, FormalCoord::basis(SuperMatrix::zero(1, 1), vec![2, -1]));
    }

    #[test]
    fn monomial_unitriangular_small() {
        // M_{A,0} = A(0) + strictly smaller terms, spot-checked here
        for a in enumerate_matrices(1, 1, 2, MatrixFamily::ZeroDiag) {
            let got = monomial_formal(&a, &[0, 0]).unwrap();
            assert!(got.coeff(&a, &[0, 0]).is_one(), "A={:?}", a.entries);
        }
    }

    #[test]
    fn formal_json_round_trip() {
        let mut x = FormalCoord::basis(e12(1, 1), vec![1, -2]);
        x = x.scale(&RatFunc::new(LaurentPoly::one(), {
            let v = LaurentPoly::monomial(1);
            &v - &LaurentPoly::monomial(-1)
        })
        .unwrap());
        let text = serde_json::to_string(&x).unwrap();
        let back: FormalCoord = serde_json::from_str(&text).unwrap();
        assert_eq!(back, x);
    }
}
