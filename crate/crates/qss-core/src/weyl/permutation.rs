//! Permutations of `{1..r}` in one-line notation, reduced words, and
//! distinguished coset representatives of parabolic subgroups.

use serde::{Deserialize, Serialize};

use super::WeylError;

/// A permutation in one-line notation: `images[k-1] = w(k)`, values 1-based.
///
/// The group product is oriented so that the right action on index tuples is
/// associative: `t·(a*b) = (t·a)·b` with `(t·w)_k = t_{w(k)}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(r: usize) -> Self {
        Permutation {
            images: (1..=r).collect(),
        }
    }

    /// The basic transposition `s_k = (k, k+1)`, `1 <= k < r`.
    pub fn transposition(r: usize, k: usize) -> Self {
        let mut images: Vec<usize> = (1..=r).collect();
        images.swap(k - 1, k);
        Permutation { images }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, WeylError> {
        let r = images.len();
        let mut seen = vec![false; r + 1];
        for &v in &images {
            if v < 1 || v > r || seen[v] {
                return Err(WeylError::InvalidPermutation);
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// 1-based application: `w(i)`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// Group product: the right tuple action applies `self` first, then `rhs`.
    /// On positions this is function composition `(self ∘ rhs)(i)`.
    pub fn mul(&self, rhs: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), rhs.degree());
        Permutation {
            images: (1..=self.degree())
                .map(|i| self.image(rhs.image(i)))
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0usize; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Coxeter length = number of inversions.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Right place-permutation action on an index tuple: `(t·w)_k = t_{w(k)}`.
    pub fn apply_tuple(&self, t: &[u8]) -> Vec<u8> {
        debug_assert_eq!(t.len(), self.degree());
        self.images.iter().map(|&v| t[v - 1]).collect()
    }

    /// A reduced word for `self`, letters in `1..r`.
    ///
    /// Deterministic rule: repeatedly strip the smallest right descent, so a
    /// given permutation always yields the same word. Word letters apply left
    /// to right under the right action.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut letters = Vec::with_capacity(w.length());
        'outer: loop {
            for k in 1..w.degree() {
                if w.image(k) > w.image(k + 1) {
                    letters.push(k);
                    w.images.swap(k - 1, k);
                    continue 'outer;
                }
            }
            break;
        }
        letters.reverse();
        letters
    }

    pub fn from_word(r: usize, word: &[usize]) -> Permutation {
        let mut w = Permutation::identity(r);
        for &k in word {
            w = w.mul(&Permutation::transposition(r, k));
        }
        w
    }

    /// Minimal-length representative test for the right coset `W_parts · self`:
    /// `self^{-1}` must be increasing on each block of the composition.
    pub fn is_min_coset_rep(&self, parts: &[u32]) -> bool {
        let inv = self.inverse();
        let mut start = 1usize;
        for &p in parts {
            let end = start + p as usize;
            for k in start..end.saturating_sub(1) {
                if inv.image(k) > inv.image(k + 1) {
                    return false;
                }
            }
            start = end;
        }
        true
    }

    /// Bruhat order via the rank-matrix criterion:
    /// `u <= w` iff `#{a <= i : u(a) <= j} >= #{a <= i : w(a) <= j}` for all `i, j`.
    pub fn bruhat_leq(&self, other: &Permutation) -> bool {
        debug_assert_eq!(self.degree(), other.degree());
        let r = self.degree();
        for i in 1..=r {
            let mut cu = 0usize;
            let mut cw = 0usize;
            // sweep j while maintaining the counts for fixed i would be an
            // optimisation; r stays tiny here
            for j in 1..=r {
                cu = (1..=i).filter(|&a| self.image(a) <= j).count();
                cw = (1..=i).filter(|&a| other.image(a) <= j).count();
                if cu < cw {
                    return false;
                }
            }
            let _ = (cu, cw);
        }
        true
    }
}

/// All permutations of `{1..r}` in lexicographic order of one-line notation.
pub fn all_permutations(r: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images: Vec<usize> = (1..=r).collect();
    loop {
        out.push(Permutation {
            images: images.clone(),
        });
        if !next_permutation(&mut images) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Distinguished (minimal-length) representatives of the right cosets of the
/// parabolic subgroup of `parts`, in lexicographic order.
pub fn coset_reps_parts(parts: &[u32]) -> Vec<Permutation> {
    let r: u32 = parts.iter().sum();
    all_permutations(r as usize)
        .into_iter()
        .filter(|w| w.is_min_coset_rep(parts))
        .collect()
}

/// Distinguished double coset representatives: `d` minimal for `rho` on the
/// left and `lam` on the right.
pub fn double_reps_parts(rho: &[u32], lam: &[u32]) -> Result<Vec<Permutation>, WeylError> {
    let r: u32 = rho.iter().sum();
    if lam.iter().sum::<u32>() != r {
        return Err(WeylError::DegreeMismatch);
    }
    Ok(all_permutations(r as usize)
        .into_iter()
        .filter(|w| w.is_min_coset_rep(rho) && w.inverse().is_min_coset_rep(lam))
        .collect())
}

pub fn is_double_rep(d: &Permutation, rho: &[u32], lam: &[u32]) -> bool {
    d.is_min_coset_rep(rho) && d.inverse().is_min_coset_rep(lam)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_orientation_matches_tuple_action() {
        let r = 4;
        let a = Permutation::from_word(r, &[1, 2]);
        let b = Permutation::from_word(r, &[3]);
        let t: Vec<u8> = vec![10, 20, 30, 40];
        let ab = a.mul(&b);
        assert_eq!(
            ab.apply_tuple(&t),
            b.apply_tuple(&a.apply_tuple(&t)).as_slice()
        );
    }

    #[test]
    fn lengths_and_words() {
        for w in all_permutations(4) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(Permutation::from_word(4, &word), w);
        }
    }

    #[test]
    fn coset_reps_full_parabolic_is_identity() {
        let reps = coset_reps_parts(&[4]);
        assert_eq!(reps.len(), 1);
        assert!(reps[0].is_identity());
    }

    #[test]
    fn coset_reps_count_is_multinomial() {
        // |D_λ| = r! / Π λ_i! ; λ = (2,2): 6
        assert_eq!(coset_reps_parts(&[2, 2]).len(), 6);
        // λ = (1,2,1): 4!/2 = 12
        assert_eq!(coset_reps_parts(&[1, 2, 1]).len(), 12);
    }

    #[test]
    fn bruhat_rank_criterion_vs_subword_oracle() {
        // independent oracle: u <= w iff u arises from deleting letters of a
        // reduced word of w
        fn subword_leq(u: &Permutation, w: &Permutation) -> bool {
            let word = w.reduced_word();
            let r = w.degree();
            let n = word.len();
            for mask in 0..(1u32 << n) {
                let sub: Vec<usize> = (0..n)
                    .filter(|&i| mask & (1 << i) != 0)
                    .map(|i| word[i])
                    .collect();
                if &Permutation::from_word(r, &sub) == u {
                    return true;
                }
            }
            false
        }
        for r in 2..=4 {
            let all = all_permutations(r);
            for u in &all {
                for w in &all {
                    assert_eq!(
                        u.bruhat_leq(w),
                        subword_leq(u, w),
                        "u={:?} w={:?}",
                        u.images(),
                        w.images()
                    );
                }
            }
        }
    }

    #[test]
    fn identity_is_bruhat_minimum() {
        let id = Permutation::identity(4);
        for w in all_permutations(4) {
            assert!(id.bruhat_leq(&w));
        }
    }
}
