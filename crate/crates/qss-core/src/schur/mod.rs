//! The structured (formula-driven) algebra layer: explicit multiplication
//! rules for `S_q(m|n,r)` in the relative-norm basis and in the normalised
//! `ξ`-basis, the uniform elements `A(j,r)`, r-independent generator
//! multiplication, and the triangular products behind the monomial basis.

pub mod coeff;
mod formal;

pub use formal::{
    a_element, monomial_formal, mul_gen_formal, mul_o_formal, o_element, truncate, FormalCoord,
    Gen, Side,
};

use std::collections::BTreeMap;

use serde::de::Error as DeError;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::qpoly::{
    divide_exact, gauss_binomial, quantum_int, BinomVariant, IntVariant, LaurentPoly, PolyError,
    VarSign,
};
use crate::weyl::{
    chain_matrices, enumerate_compositions, matrix_stat, special_matrix, triple_sequence,
    MatrixStat, SpecialKind, SuperMatrix, TripleOrder, WeylError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchurError {
    #[error("matrix lies outside M(m|n,r)")]
    NotInM,
    #[error("unsupported divided power at the odd position")]
    UnsupportedPower,
    #[error("index out of range")]
    IndexOutOfRange,
    #[error("incompatible shapes")]
    ShapeMismatch,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

/// Which basis the coordinates of a [`SchurElement`] refer to.
///
/// In the `N` basis a key `A` stands for the relative norm `N_{A'}`; in the
/// `Xi` basis it stands for the normalised element `ξ_A = q^{-d(A)} N_A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SchurBasis {
    #[serde(rename = "xi")]
    Xi,
    #[serde(rename = "N")]
    N,
}

/// A finite basis combination in `S(m|n,r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurElement {
    pub m: usize,
    pub n: usize,
    pub r: u32,
    pub basis: SchurBasis,
    terms: BTreeMap<SuperMatrix, LaurentPoly>,
}

impl SchurElement {
    pub fn zero(m: usize, n: usize, r: u32, basis: SchurBasis) -> Self {
        SchurElement {
            m,
            n,
            r,
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(a: SuperMatrix, r: u32, basis: SchurBasis) -> Self {
        let mut out = SchurElement::zero(a.m, a.n, r, basis);
        out.add_term(a, &LaurentPoly::one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMatrix, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: &SuperMatrix) -> LaurentPoly {
        self.terms.get(a).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: SuperMatrix, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(a.total(), self.r);
        let entry = self.terms.entry(a.clone()).or_insert_with(LaurentPoly::zero);
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(&a);
        }
    }

    pub fn add(&self, rhs: &SchurElement) -> Result<SchurElement, SchurError> {
        if (self.m, self.n, self.r) != (rhs.m, rhs.n, rhs.r) || self.basis != rhs.basis {
            return Err(SchurError::ShapeMismatch);
        }
        let mut out = self.clone();
        for (a, c) in &rhs.terms {
            out.add_term(a.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &SchurElement) -> Result<SchurElement, SchurError> {
        self.add(&rhs.scale(&-&LaurentPoly::one()))
    }

    pub fn scale(&self, c: &LaurentPoly) -> SchurElement {
        if c.is_zero() {
            return SchurElement::zero(self.m, self.n, self.r, self.basis);
        }
        SchurElement {
            m: self.m,
            n: self.n,
            r: self.r,
            basis: self.basis,
            terms: self.terms.iter().map(|(a, x)| (a.clone(), x * c)).collect(),
        }
    }

    /// Exact division of every coefficient; the division failing flags a
    /// formula bug upstream.
    pub fn divide_exact_all(&self, den: &LaurentPoly) -> Result<SchurElement, SchurError> {
        let mut out = SchurElement::zero(self.m, self.n, self.r, self.basis);
        for (a, c) in &self.terms {
            out.add_term(a.clone(), &divide_exact(c, den)?);
        }
        Ok(out)
    }

    /// The common grading degree of all keys, when uniform.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.keys();
        let first = it.next()?.parity();
        for a in it {
            if a.parity() != first {
                return None;
            }
        }
        Some(first)
    }

    /// Change coordinates from the norm basis to the normalised basis:
    /// `N_{A'} = v^{d(A')} ξ_{A'}`, so keys transpose and scale.
    pub fn to_xi(&self) -> SchurElement {
        match self.basis {
            SchurBasis::Xi => self.clone(),
            SchurBasis::N => {
                let mut out = SchurElement::zero(self.m, self.n, self.r, SchurBasis::Xi);
                for (a, c) in &self.terms {
                    let at = a.transpose();
                    let d = matrix_stat(&at, MatrixStat::DegreeD).unwrap();
                    out.add_term(at, &c.mul_monomial(d));
                }
                out
            }
        }
    }

    /// Change coordinates from the normalised basis to the norm basis:
    /// `ξ_A = v^{-d(A)} N_{(A')'}`.
    pub fn to_norm(&self) -> SchurElement {
        match self.basis {
            SchurBasis::N => self.clone(),
            SchurBasis::Xi => {
                let mut out = SchurElement::zero(self.m, self.n, self.r, SchurBasis::N);
                for (a, c) in &self.terms {
                    let d = matrix_stat(a, MatrixStat::DegreeD).unwrap();
                    out.add_term(a.transpose(), &c.mul_monomial(-d));
                }
                out
            }
        }
    }
}

impl Serialize for SchurElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            matrix: &'a SuperMatrix,
            coeff: &'a LaurentPoly,
        }
        let mut s = serializer.serialize_struct("SchurElement", 5)?;
        s.serialize_field("basis", &self.basis)?;
        s.serialize_field("m", &self.m)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("r", &self.r)?;
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(a, c)| Term {
                matrix: a,
                coeff: c,
            })
            .collect();
        s.serialize_field("terms", &terms)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for SchurElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Term {
            matrix: SuperMatrix,
            coeff: LaurentPoly,
        }
        #[derive(Deserialize)]
        struct Raw {
            basis: SchurBasis,
            m: usize,
            n: usize,
            r: u32,
            terms: Vec<Term>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut out = SchurElement::zero(raw.m, raw.n, raw.r, raw.basis);
        for term in raw.terms {
            if (term.matrix.m, term.matrix.n) != (raw.m, raw.n) {
                return Err(D::Error::custom("matrix dimensions disagree with element"));
            }
            if term.matrix.total() != raw.r {
                return Err(D::Error::custom("matrix entry sum disagrees with degree"));
            }
            SuperMatrix::new(raw.m, raw.n, term.matrix.entries.clone())
                .map_err(D::Error::custom)?;
            out.add_term(term.matrix, &term.coeff);
        }
        Ok(out)
    }
}

/// Direction selector for the key product rules: raise with the
/// superdiagonal mover (`B`) or lower with the subdiagonal one (`C`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KeyDir {
    B,
    C,
}

/// Direction selector for the `U_p`/`L_p` product rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UlDir {
    U,
    L,
}

/// The key product rule in the norm basis.
///
/// For `dir = B`: `N_{A'} N_{B'} = Σ_{k: a_{h+1,k} >= 1} f_k(q;A,h)
/// [[a_{h,k}+1]]_{q_h} N_{(A + E_{h,k} - E_{h+1,k})'}` with `B` the raising
/// almost-diagonal matrix built from `ro(A)`; targets outside `M(m|n,r)` are
/// dropped. `dir = C` is the lowering counterpart.
pub fn mul_key_n(a: &SuperMatrix, h: usize, dir: KeyDir) -> Result<SchurElement, SchurError> {
    let size = a.size();
    if h < 1 || h >= size {
        return Err(SchurError::IndexOutOfRange);
    }
    let r = a.total();
    let mut out = SchurElement::zero(a.m, a.n, r, SchurBasis::N);
    for k in 1..=size {
        let (source_row, bracket_row, deltas) = match dir {
            KeyDir::B => (
                h + 1,
                h,
                [(h, k, 1i64), (h + 1, k, -1i64)],
            ),
            KeyDir::C => (
                h,
                h + 1,
                [(h, k, -1i64), (h + 1, k, 1i64)],
            ),
        };
        if a.entry(source_row, k) < 1 {
            continue;
        }
        let Some(target) = a.shifted(&deltas) else {
            continue;
        };
        let scalar = match dir {
            KeyDir::B => coeff::coeff_f_k(a, h, k),
            KeyDir::C => coeff::coeff_g_k(a, h, k),
        };
        let bracket_sign = VarSign::for_index(bracket_row, a.m);
        let bracket = quantum_int(a.entry(bracket_row, k) + 1, IntVariant::BracketQ, bracket_sign);
        out.add_term(target, &(&scalar * &bracket));
    }
    Ok(out)
}

/// The general `U_p`/`L_p` product rule in the norm basis:
/// `N_{A'} N_{U_p'} = Σ_{ν} f_ν(q;A,h) Π_k [[a_{h,k}+ν_k над ν_k]]_{q_h}
/// N_{(A + Σ_l ν_l (E_{h,l}-E_{h+1,l}))'}`, the sum over compositions `ν` of
/// `p` bounded by the relevant row of `A`; zero when `U_p` itself leaves
/// `M(m|n,r)`.
pub fn mul_n_ulp(
    a: &SuperMatrix,
    h: usize,
    p: u32,
    dir: UlDir,
) -> Result<SchurElement, SchurError> {
    let size = a.size();
    if h < 1 || h >= size {
        return Err(SchurError::IndexOutOfRange);
    }
    let r = a.total();
    let kind = match dir {
        UlDir::U => SpecialKind::U,
        UlDir::L => SpecialKind::L,
    };
    if special_matrix(kind, h, &a.ro(), p).is_err() {
        // the right factor indexes the zero element
        return Ok(SchurElement::zero(a.m, a.n, r, SchurBasis::N));
    }
    let bound_row = match dir {
        UlDir::U => a.row(h + 1),
        UlDir::L => a.row(h),
    };
    let bracket_row = match dir {
        UlDir::U => h,
        UlDir::L => h + 1,
    };
    let sign = VarSign::for_index(bracket_row, a.m);
    let mut out = SchurElement::zero(a.m, a.n, r, SchurBasis::N);
    for nu in enumerate_compositions(a.m, a.n, p) {
        if nu.parts.iter().zip(&bound_row).any(|(x, bound)| x > bound) {
            continue;
        }
        let scalar = match dir {
            UlDir::U => coeff::coeff_f_nu(a, h, &nu.parts),
            UlDir::L => coeff::coeff_g_nu(a, h, &nu.parts),
        };
        if scalar.is_zero() {
            continue;
        }
        let mut deltas = Vec::new();
        for (l0, &nl) in nu.parts.iter().enumerate() {
            if nl == 0 {
                continue;
            }
            let (dh, dh1) = match dir {
                UlDir::U => (nl as i64, -(nl as i64)),
                UlDir::L => (-(nl as i64), nl as i64),
            };
            deltas.push((h, l0 + 1, dh));
            deltas.push((h + 1, l0 + 1, dh1));
        }
        let Some(target) = a.shifted(&deltas) else {
            continue;
        };
        let mut coeff_val = scalar;
        for (k0, &nk) in nu.parts.iter().enumerate() {
            if nk == 0 {
                continue;
            }
            let base = a.entry(bracket_row, k0 + 1);
            coeff_val = &coeff_val
                * &gauss_binomial(base + nk, nk, BinomVariant::Bracket, sign)?;
        }
        out.add_term(target, &coeff_val);
    }
    Ok(out)
}

/// The normalised product rules: `ξ_{U_p} ξ_A` (`dir = U`) and `ξ_{L_p} ξ_A`
/// (`dir = L`) expanded in the `ξ`-basis.
///
/// At the odd position `h = m` only `p <= 1` indexes a nonzero left factor;
/// higher powers return the zero element, matching the vanishing of the
/// divided powers there.
pub fn mul_xi_ulp(
    a: &SuperMatrix,
    h: usize,
    p: u32,
    dir: UlDir,
) -> Result<SchurElement, SchurError> {
    let size = a.size();
    if h < 1 || h >= size {
        return Err(SchurError::IndexOutOfRange);
    }
    let r = a.total();
    let kind = match dir {
        UlDir::U => SpecialKind::U,
        UlDir::L => SpecialKind::L,
    };
    if special_matrix(kind, h, &a.ro(), p).is_err() {
        return Ok(SchurElement::zero(a.m, a.n, r, SchurBasis::Xi));
    }
    let m = a.m;
    let mut out = SchurElement::zero(a.m, a.n, r, SchurBasis::Xi);
    if h == m && p == 1 {
        // odd generator case: single-step moves with explicit signs
        for k in 1..=size {
            let (source_row, bracket_row, deltas) = match dir {
                UlDir::U => (m + 1, m, [(m, k, 1i64), (m + 1, k, -1i64)]),
                UlDir::L => (m, m + 1, [(m, k, -1i64), (m + 1, k, 1i64)]),
            };
            if a.entry(source_row, k) < 1 {
                continue;
            }
            let Some(target) = a.shifted(&deltas) else {
                continue;
            };
            let sign_exp = coeff::odd_block_sign_exp(a, k);
            let exp = match dir {
                UlDir::U => coeff::exp_f_m(a, k),
                UlDir::L => -coeff::exp_fp_m(a, k),
            };
            let var_sign = VarSign::for_index(bracket_row, m);
            let bar = gauss_binomial(
                a.entry(bracket_row, k) + 1,
                1,
                BinomVariant::Bar,
                var_sign,
            )?;
            let mut c = bar.mul_monomial(exp);
            if sign_exp % 2 != 0 {
                c = -&c;
            }
            out.add_term(target, &c);
        }
        return Ok(out);
    }
    // even case: multi-index sum with bar binomials
    let bound_row = match dir {
        UlDir::U => a.row(h + 1),
        UlDir::L => a.row(h),
    };
    let bracket_row = match dir {
        UlDir::U => h,
        UlDir::L => h + 1,
    };
    let var_sign = VarSign::for_index(bracket_row, m);
    let sf = var_sign.factor();
    for nu in enumerate_compositions(a.m, a.n, p) {
        if nu.parts.iter().zip(&bound_row).any(|(x, bound)| x > bound) {
            continue;
        }
        let exp = match dir {
            UlDir::U => coeff::exp_f_h(a, h, &nu.parts),
            UlDir::L => coeff::exp_fp_h(a, h, &nu.parts),
        };
        let mut deltas = Vec::new();
        for (l0, &nl) in nu.parts.iter().enumerate() {
            if nl == 0 {
                continue;
            }
            let (dh, dh1) = match dir {
                UlDir::U => (nl as i64, -(nl as i64)),
                UlDir::L => (-(nl as i64), nl as i64),
            };
            deltas.push((h, l0 + 1, dh));
            deltas.push((h + 1, l0 + 1, dh1));
        }
        let Some(target) = a.shifted(&deltas) else {
            continue;
        };
        let mut coeff_val = LaurentPoly::monomial(sf * exp);
        for (k0, &nk) in nu.parts.iter().enumerate() {
            if nk == 0 {
                continue;
            }
            let base = a.entry(bracket_row, k0 + 1);
            coeff_val = &coeff_val * &gauss_binomial(base + nk, nk, BinomVariant::Bar, var_sign)?;
        }
        out.add_term(target, &coeff_val);
    }
    Ok(out)
}

/// Multiply a `ξ`-basis element on the left by the almost-diagonal factor
/// attached to `(h, p, dir)`, term by term. Used by the chain products; the
/// factor is rebuilt from each term's row composition, which the chain
/// bookkeeping keeps constant across terms.
pub fn mul_xi_factor(
    x: &SchurElement,
    h: usize,
    p: u32,
    dir: UlDir,
) -> Result<SchurElement, SchurError> {
    let mut out = SchurElement::zero(x.m, x.n, x.r, SchurBasis::Xi);
    for (b, c) in x.terms() {
        let prod = mul_xi_ulp(b, h, p, dir)?;
        out = out.add(&prod.scale(c))?;
    }
    Ok(out)
}

/// The triangular product: the ordered product of the chain factors of `A`,
/// which expands as `(-1)^{abar(A)} ξ_A` plus strictly Bruhat-smaller terms.
pub fn psi_product(a: &SuperMatrix, r: u32) -> Result<SchurElement, SchurError> {
    if a.total() != r {
        return Err(SchurError::ShapeMismatch);
    }
    let size = a.size();
    if size < 2 {
        return Ok(SchurElement::single(a.clone(), r, SchurBasis::Xi));
    }
    let chains = chain_matrices(a)?;
    let t1 = triple_sequence(size, TripleOrder::Leq1);
    let t2 = triple_sequence(size, TripleOrder::Leq2);
    debug_assert_eq!(chains.e_chain.len(), t1.len());
    debug_assert_eq!(chains.f_chain.len(), t2.len());

    // rightmost factor of the <=_1 product, then fold leftwards
    let last = chains.e_chain.last().unwrap();
    let mut acc = SchurElement::single(last.1.clone(), r, SchurBasis::Xi);
    for idx in (0..chains.e_chain.len() - 1).rev() {
        let ((i, h, j), ref member) = chains.e_chain[idx];
        let p = a.entry(i, j);
        debug_assert_eq!(
            member,
            &special_matrix(SpecialKind::U, h, &member.co(), p).unwrap()
        );
        acc = mul_xi_factor(&acc, h, p, UlDir::U)?;
    }
    for idx in (0..chains.f_chain.len()).rev() {
        let ((i, h, j), ref member) = chains.f_chain[idx];
        let p = a.entry(j, i);
        debug_assert_eq!(
            member,
            &special_matrix(SpecialKind::L, h, &member.co(), p).unwrap()
        );
        acc = mul_xi_factor(&acc, h, p, UlDir::L)?;
    }
    Ok(acc)
}
