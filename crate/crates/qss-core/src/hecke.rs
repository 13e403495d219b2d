//! The Iwahori–Hecke algebra `H_q(r)` in the T-basis and its signed right
//! action on the tensor superspace `V(m|n)^{⊗r}`.
//!
//! The quadratic relation is `(T_s - q)(T_s + 1) = 0` with `q = v^2`. Basis
//! vectors of the tensor space are indexed by tuples in `I(m|n,r)`; the
//! action of a generator on a basis vector has four cases depending on how
//! the two touched letters compare and on their parities.

use std::collections::BTreeMap;

use serde::de::Error as DeError;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::qpoly::LaurentPoly;
use crate::weyl::{parity, Composition, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("elements live in Hecke algebras of different rank")]
    RankMismatch,
    #[error("generator index out of range")]
    IndexOutOfRange,
}

/// An element of `H_q(r)` as a T-basis combination. Elements are stored by
/// permutation; reduced words are recomputed on demand, which is sound since
/// the result of applying a word is independent of the chosen reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HeckeElement {
    pub r: usize,
    terms: BTreeMap<Permutation, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero(r: usize) -> Self {
        HeckeElement {
            r,
            terms: BTreeMap::new(),
        }
    }

    /// The identity `T_1`.
    pub fn one(r: usize) -> Self {
        HeckeElement::basis(Permutation::identity(r))
    }

    pub fn basis(w: Permutation) -> Self {
        let r = w.degree();
        let mut terms = BTreeMap::new();
        terms.insert(w, LaurentPoly::one());
        HeckeElement { r, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Permutation) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn add_term(&mut self, w: Permutation, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w.clone()).or_insert_with(LaurentPoly::zero);
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, rhs: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        if self.r != rhs.r {
            return Err(HeckeError::RankMismatch);
        }
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &LaurentPoly) -> HeckeElement {
        if c.is_zero() {
            return HeckeElement::zero(self.r);
        }
        HeckeElement {
            r: self.r,
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    /// Right multiplication by the generator `T_{s_k}`:
    /// `T_w T_s = T_{ws}` when the length goes up, else `(q-1) T_w + q T_{ws}`.
    pub fn mul_gen(&self, k: usize) -> Result<HeckeElement, HeckeError> {
        if k < 1 || k + 1 > self.r {
            return Err(HeckeError::IndexOutOfRange);
        }
        let q = LaurentPoly::monomial(2);
        let q_minus_one = &q - &LaurentPoly::one();
        let s = Permutation::transposition(self.r, k);
        let mut out = HeckeElement::zero(self.r);
        for (w, c) in &self.terms {
            let ws = w.mul(&s);
            if w.image(k) < w.image(k + 1) {
                out.add_term(ws, c);
            } else {
                out.add_term(w.clone(), &(c * &q_minus_one));
                out.add_term(ws, &(c * &q));
            }
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        if self.r != rhs.r {
            return Err(HeckeError::RankMismatch);
        }
        let mut out = HeckeElement::zero(self.r);
        for (w, c) in &rhs.terms {
            let mut acc = self.scale(c);
            for k in w.reduced_word() {
                acc = acc.mul_gen(k)?;
            }
            out = out.add(&acc)?;
        }
        Ok(out)
    }
}

/// A vector in `V(m|n)^{⊗r}` over the Laurent ring, stored sparsely on the
/// index tuples that carry nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorVector {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    terms: BTreeMap<Vec<u8>, LaurentPoly>,
}

impl TensorVector {
    pub fn zero(m: usize, n: usize, r: usize) -> Self {
        TensorVector {
            m,
            n,
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(m: usize, n: usize, tuple: Vec<u8>) -> Self {
        let r = tuple.len();
        debug_assert!(tuple.iter().all(|&i| 1 <= i && i as usize <= m + n));
        let mut terms = BTreeMap::new();
        terms.insert(tuple, LaurentPoly::one());
        TensorVector { m, n, r, terms }
    }

    /// The weight vector `v_λ = v_{i_λ}`.
    pub fn weight_vector(lam: &Composition) -> Self {
        TensorVector::basis(lam.m, lam.n, lam.index_tuple())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, tuple: &[u8]) -> LaurentPoly {
        self.terms
            .get(tuple)
            .cloned()
            .unwrap_or_else(LaurentPoly::zero)
    }

    pub fn add_term(&mut self, tuple: Vec<u8>, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(tuple.clone()).or_insert_with(LaurentPoly::zero);
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(&tuple);
        }
    }

    pub fn add(&self, rhs: &TensorVector) -> TensorVector {
        debug_assert!((self.m, self.n, self.r) == (rhs.m, rhs.n, rhs.r));
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            out.add_term(t.clone(), c);
        }
        out
    }

    pub fn sub(&self, rhs: &TensorVector) -> TensorVector {
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            out.add_term(t.clone(), &(-c));
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> TensorVector {
        if c.is_zero() {
            return TensorVector::zero(self.m, self.n, self.r);
        }
        TensorVector {
            m: self.m,
            n: self.n,
            r: self.r,
            terms: self.terms.iter().map(|(t, a)| (t.clone(), a * c)).collect(),
        }
    }

    /// Right action of the generator `T_{s_k}`, `1 <= k <= r-1`.
    ///
    /// On a basis tuple with letters `(a, b)` at positions `(k, k+1)`:
    /// swap with sign `(-1)^{â b̂}` when `a < b`; multiply by `q` when
    /// `a = b` is even; multiply by `-1` when `a = b` is odd; and
    /// `(-1)^{â b̂} q (swapped) + (q-1) (same)` when `a > b`.
    pub fn act(&self, k: usize) -> Result<TensorVector, HeckeError> {
        if k < 1 || k + 1 > self.r {
            return Err(HeckeError::IndexOutOfRange);
        }
        let q = LaurentPoly::monomial(2);
        let q_minus_one = &q - &LaurentPoly::one();
        let m = self.m as u8;
        let mut out = TensorVector::zero(self.m, self.n, self.r);
        for (t, c) in &self.terms {
            let a = t[k - 1];
            let b = t[k];
            if a == b {
                if a <= m {
                    out.add_term(t.clone(), &(c * &q));
                } else {
                    out.add_term(t.clone(), &(-c));
                }
                continue;
            }
            let mut swapped = t.clone();
            swapped.swap(k - 1, k);
            let both_odd = a > m && b > m;
            if a < b {
                let signed = if both_odd { -c } else { c.clone() };
                out.add_term(swapped, &signed);
            } else {
                let signed_q = if both_odd { -&(c * &q) } else { c * &q };
                out.add_term(swapped, &signed_q);
                out.add_term(t.clone(), &(c * &q_minus_one));
            }
        }
        Ok(out)
    }

    /// Apply a word of generators left to right.
    pub fn act_word(&self, word: &[usize]) -> Result<TensorVector, HeckeError> {
        let mut out = self.clone();
        for &k in word {
            out = out.act(k)?;
        }
        Ok(out)
    }

    /// Apply a Hecke element, extending linearly over its T-basis terms.
    pub fn act_elem(&self, x: &HeckeElement) -> Result<TensorVector, HeckeError> {
        if x.r != self.r {
            return Err(HeckeError::RankMismatch);
        }
        let mut out = TensorVector::zero(self.m, self.n, self.r);
        for (w, c) in x.terms() {
            let img = self.act_word(&w.reduced_word())?;
            out = out.add(&img.scale(c));
        }
        Ok(out)
    }

    /// Weight of a tuple: the multiset count of each letter.
    pub fn weight_of(m: usize, n: usize, tuple: &[u8]) -> Composition {
        let mut parts = vec![0u32; m + n];
        for &i in tuple {
            parts[i as usize - 1] += 1;
        }
        Composition { m, n, parts }
    }
}

impl Serialize for TensorVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            idx: Vec<u32>,
            coeff: &'a LaurentPoly,
        }
        let mut s = serializer.serialize_struct("TensorVector", 4)?;
        s.serialize_field("m", &self.m)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("r", &self.r)?;
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(t, c)| Term {
                idx: t.iter().map(|&i| i as u32).collect(),
                coeff: c,
            })
            .collect();
        s.serialize_field("terms", &terms)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for TensorVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Term {
            idx: Vec<u32>,
            coeff: LaurentPoly,
        }
        #[derive(Deserialize)]
        struct Raw {
            m: usize,
            n: usize,
            r: usize,
            terms: Vec<Term>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut out = TensorVector::zero(raw.m, raw.n, raw.r);
        for term in raw.terms {
            if term.idx.len() != raw.r {
                return Err(D::Error::custom("index tuple has wrong length"));
            }
            if term
                .idx
                .iter()
                .any(|&i| i < 1 || i as usize > raw.m + raw.n)
            {
                return Err(D::Error::custom("index entry out of range"));
            }
            out.add_term(term.idx.iter().map(|&i| i as u8).collect(), &term.coeff);
        }
        Ok(out)
    }
}

/// `(-1)^k` as a Laurent polynomial scalar.
pub fn sign_poly(k: i64) -> LaurentPoly {
    if k % 2 == 0 {
        LaurentPoly::one()
    } else {
        -&LaurentPoly::one()
    }
}

/// Parity of a letter of a tuple.
pub fn letter_parity(letter: u8, m: usize) -> u8 {
    parity(letter as usize, m)
}
