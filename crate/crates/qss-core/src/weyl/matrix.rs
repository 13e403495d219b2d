//! The matrix sets `M(m|n,r)` indexing double cosets, the correspondence
//! between matrices and distinguished representatives, word extraction, and
//! the degree/sign statistics attached to a matrix.

use serde::{Deserialize, Serialize};

use super::composition::Composition;
use super::permutation::{
    double_reps_parts, is_double_rep, Permutation,
};
use super::{parity, WeylError};

/// An `(m+n) × (m+n)` natural-number matrix with the even-odd trivial
/// intersection property: every entry of the off-diagonal blocks (rows
/// `<= m` against columns `> m` and vice versa) is 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SuperMatrix {
    pub m: usize,
    pub n: usize,
    pub entries: Vec<Vec<u32>>,
}

impl SuperMatrix {
    pub fn new(m: usize, n: usize, entries: Vec<Vec<u32>>) -> Result<Self, WeylError> {
        let size = m + n;
        if entries.len() != size || entries.iter().any(|row| row.len() != size) {
            return Err(WeylError::ShapeMismatch);
        }
        let a = SuperMatrix { m, n, entries };
        if !a.blocks_ok() {
            return Err(WeylError::NotInM);
        }
        Ok(a)
    }

    fn blocks_ok(&self) -> bool {
        let size = self.size();
        for i in 1..=size {
            for j in 1..=size {
                if parity(i, self.m) != parity(j, self.m) && self.entry(i, j) > 1 {
                    return false;
                }
            }
        }
        true
    }

    pub fn zero(m: usize, n: usize) -> Self {
        let size = m + n;
        SuperMatrix {
            m,
            n,
            entries: vec![vec![0; size]; size],
        }
    }

    pub fn from_diag(lam: &Composition) -> Self {
        let size = lam.size();
        let mut entries = vec![vec![0; size]; size];
        for i in 0..size {
            entries[i][i] = lam.parts[i];
        }
        SuperMatrix {
            m: lam.m,
            n: lam.n,
            entries,
        }
    }

    /// The elementary matrix `E_{h,k}` (single entry 1).
    pub fn unit(m: usize, n: usize, h: usize, k: usize) -> Self {
        let mut a = SuperMatrix::zero(m, n);
        a.entries[h - 1][k - 1] = 1;
        a
    }

    pub fn size(&self) -> usize {
        self.m + self.n
    }

    /// 1-based entry accessor.
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.entries[i - 1][j - 1]
    }

    /// Total entry sum `|A|`.
    pub fn total(&self) -> u32 {
        self.entries.iter().flatten().sum()
    }

    pub fn ro(&self) -> Composition {
        Composition {
            m: self.m,
            n: self.n,
            parts: self.entries.iter().map(|row| row.iter().sum()).collect(),
        }
    }

    pub fn co(&self) -> Composition {
        let size = self.size();
        Composition {
            m: self.m,
            n: self.n,
            parts: (0..size)
                .map(|j| self.entries.iter().map(|row| row[j]).sum())
                .collect(),
        }
    }

    pub fn row(&self, h: usize) -> Vec<u32> {
        self.entries[h - 1].clone()
    }

    pub fn col(&self, j: usize) -> Vec<u32> {
        self.entries.iter().map(|row| row[j - 1]).collect()
    }

    pub fn transpose(&self) -> SuperMatrix {
        let size = self.size();
        let mut entries = vec![vec![0; size]; size];
        for i in 0..size {
            for j in 0..size {
                entries[j][i] = self.entries[i][j];
            }
        }
        SuperMatrix {
            m: self.m,
            n: self.n,
            entries,
        }
    }

    /// The Z_2-grading degree: block entry sums `|A_12| + |A_21|` mod 2.
    pub fn parity(&self) -> u8 {
        let mut s = 0u32;
        for i in 1..=self.size() {
            for j in 1..=self.size() {
                if parity(i, self.m) != parity(j, self.m) {
                    s += self.entry(i, j);
                }
            }
        }
        (s % 2) as u8
    }

    pub fn is_zero_diag(&self) -> bool {
        (0..self.size()).all(|i| self.entries[i][i] == 0)
    }

    pub fn is_strict_upper(&self) -> bool {
        (1..=self.size()).all(|i| (1..=i).all(|j| self.entry(i, j) == 0))
    }

    pub fn is_strict_lower(&self) -> bool {
        (1..=self.size()).all(|i| (i..=self.size()).all(|j| self.entry(i, j) == 0))
    }

    /// The matrix with the diagonal replaced by zeros.
    pub fn zero_diag_part(&self) -> SuperMatrix {
        let mut a = self.clone();
        for i in 0..a.size() {
            a.entries[i][i] = 0;
        }
        a
    }

    /// `self + diag(lam)`.
    pub fn plus_diag(&self, lam: &Composition) -> SuperMatrix {
        let mut a = self.clone();
        for i in 0..a.size() {
            a.entries[i][i] += lam.parts[i];
        }
        a
    }

    /// Apply signed unit shifts at 1-based cells; `None` when the result
    /// leaves `M(m|n)` (negative entry or an off-block entry above 1).
    pub fn shifted(&self, deltas: &[(usize, usize, i64)]) -> Option<SuperMatrix> {
        let mut a = self.clone();
        for &(i, j, d) in deltas {
            let cur = a.entries[i - 1][j - 1] as i64 + d;
            if cur < 0 {
                return None;
            }
            a.entries[i - 1][j - 1] = cur as u32;
        }
        if a.blocks_ok() {
            Some(a)
        } else {
            None
        }
    }

    /// The column-reading tuple of the matrix: the entries of `i_ρ · d(A)`,
    /// i.e. `(1^{a_11}, 2^{a_21}, ..., N^{a_N1}, 1^{a_12}, ...)`.
    pub fn column_reading_tuple(&self) -> Vec<u8> {
        let size = self.size();
        let mut out = Vec::with_capacity(self.total() as usize);
        for j in 1..=size {
            for i in 1..=size {
                for _ in 0..self.entry(i, j) {
                    out.push(i as u8);
                }
            }
        }
        out
    }
}

/// Raw coset matrix `a_{i,j} = |R^ρ_i ∩ d(R^λ_j)|`, no constraint checks.
pub fn coset_matrix_entries(rho: &[u32], d: &Permutation, lam: &[u32]) -> Vec<Vec<u32>> {
    let size = rho.len();
    let mut entries = vec![vec![0u32; size]; size];
    // row block of each position under rho
    let mut row_of = Vec::new();
    for (i, &p) in rho.iter().enumerate() {
        for _ in 0..p {
            row_of.push(i);
        }
    }
    let mut pos = 0usize;
    for (j, &p) in lam.iter().enumerate() {
        for _ in 0..p {
            pos += 1;
            let image = d.image(pos);
            entries[row_of[image - 1]][j] += 1;
        }
    }
    entries
}

/// The matrix associated to the double coset of `(ρ, d, λ)`.
///
/// `d` must be the distinguished representative; the result additionally has
/// to satisfy the even-odd block constraint, i.e. `d` must lie in the super
/// set `D°_{ρλ}`.
pub fn matrix_from_triple(
    rho: &Composition,
    d: &Permutation,
    lam: &Composition,
) -> Result<SuperMatrix, WeylError> {
    if rho.degree() != lam.degree() {
        return Err(WeylError::DegreeMismatch);
    }
    if !is_double_rep(d, &rho.parts, &lam.parts) {
        return Err(WeylError::NotMinimalRep);
    }
    SuperMatrix::new(rho.m, rho.n, coset_matrix_entries(&rho.parts, d, &lam.parts))
}

/// Distinguished double coset representatives with the even-odd trivial
/// intersection property, in lexicographic order.
pub fn super_double_reps(
    rho: &Composition,
    lam: &Composition,
) -> Result<Vec<Permutation>, WeylError> {
    Ok(double_reps_parts(&rho.parts, &lam.parts)?
        .into_iter()
        .filter(|d| {
            let entries = coset_matrix_entries(&rho.parts, d, &lam.parts);
            SuperMatrix::new(rho.m, rho.n, entries).is_ok()
        })
        .collect())
}

/// The intersection composition `ν = ρd ∩ λ`: the columns of the coset
/// matrix flattened column-major, a composition of `r` into `(m+n)^2` parts.
pub fn intersection_composition(
    rho: &Composition,
    d: &Permutation,
    lam: &Composition,
) -> Result<Vec<u32>, WeylError> {
    if !is_double_rep(d, &rho.parts, &lam.parts) {
        return Err(WeylError::NotMinimalRep);
    }
    let entries = coset_matrix_entries(&rho.parts, d, &lam.parts);
    let size = rho.size();
    let mut nu = Vec::with_capacity(size * size);
    for j in 0..size {
        for row in entries.iter().take(size) {
            nu.push(row[j]);
        }
    }
    Ok(nu)
}

/// Reduced word of the distinguished representative aimed at a matrix: the
/// column-by-column block-moving construction. Works for any natural-number
/// matrix (no super constraint needed).
pub fn word_from_grid(entries: &[Vec<u32>]) -> Vec<usize> {
    let size = entries.len();
    let lam: Vec<u32> = (0..size)
        .map(|j| entries.iter().map(|row| row[j]).sum())
        .collect();
    let mut rho_rem: Vec<u32> = entries.iter().map(|row| row.iter().sum()).collect();
    let mut theta: u32 = 0;
    let mut word = Vec::new();
    for j in 1..size.max(1) {
        if j >= 2 {
            for (i, rem) in rho_rem.iter_mut().enumerate() {
                *rem -= entries[i][j - 2];
            }
            theta += lam[j - 2];
        }
        // partial sums of the remaining row weights
        let mut rho_tilde = vec![0u32; size + 1];
        for i in 1..=size {
            rho_tilde[i] = rho_tilde[i - 1] + rho_rem[i - 1];
        }
        let mut col_tilde = 0u32; // running partial column sum ã_{i-1,j}
        for i in 2..=size {
            col_tilde += entries[i - 2][j - 1];
            let a_ij = entries[i - 1][j - 1];
            for t in 0..a_ij {
                // one leftward move: s_{start} s_{start-1} ... s_{end}
                let start = theta + rho_tilde[i - 1] + t;
                let end = theta + col_tilde + 1 + t;
                let mut k = start;
                while k >= end {
                    word.push(k as usize);
                    if k == end {
                        break;
                    }
                    k -= 1;
                }
            }
        }
    }
    word
}

pub fn word_from_matrix(a: &SuperMatrix) -> Vec<usize> {
    word_from_grid(&a.entries)
}

/// The distinguished representative of a matrix, via its reduced word.
pub fn permutation_of_matrix(a: &SuperMatrix) -> Permutation {
    Permutation::from_word(a.total() as usize, &word_from_matrix(a))
}

/// The length the word construction must produce: `Σ_{i<k, j>l} a_{i,j} a_{k,l}`.
pub fn expected_word_length(a: &SuperMatrix) -> u64 {
    let size = a.size();
    let mut total = 0u64;
    for i in 1..=size {
        for k in (i + 1)..=size {
            for j in 1..=size {
                for l in 1..j {
                    total += a.entry(i, j) as u64 * a.entry(k, l) as u64;
                }
            }
        }
    }
    total
}

/// Odd-inversion count of `i_λ d` (a plain natural number, not mod 2).
pub fn dhat(lam: &Composition, d: &Permutation) -> Result<u64, WeylError> {
    if !d.is_min_coset_rep(&lam.parts) {
        return Err(WeylError::NotMinimalRep);
    }
    let tuple = d.apply_tuple(&lam.index_tuple());
    let m = lam.m as u8;
    let mut count = 0u64;
    for k in 0..tuple.len() {
        for l in k + 1..tuple.len() {
            if tuple[k] > tuple[l] && tuple[k] > m && tuple[l] > m {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Closed form for the odd-inversion count, read off the matrix and its row
/// composition `ρ = ro(A)`.
pub fn dhat_closed(rho: &Composition, a: &SuperMatrix) -> u64 {
    let size = a.size();
    let m = a.m;
    let mut total = 0i64;
    for j in 1..size {
        for i in 2..=size {
            if parity(i, m) == 0 {
                continue;
            }
            for k in 1..i {
                if parity(k, m) == 0 {
                    continue;
                }
                let used: i64 = (1..=j).map(|l| a.entry(k, l) as i64).sum();
                total += a.entry(i, j) as i64 * (rho.part(k) as i64 - used);
            }
        }
    }
    total as u64
}

/// Statistic selector for [`matrix_stat`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixStat {
    /// Degree statistic of the normalised basis:
    /// `Σ_{i>k, j<l} a_{i,j}a_{k,l} + Σ_{j<l} (-1)^{î} a_{i,j}a_{i,l}`.
    DegreeD,
    /// Triangular-relation sign exponent:
    /// `Σ_{i>m>=k, m<j<l} a_{i,j}a_{k,l}`.
    ABar,
    /// Weighted off-diagonal mass `Σ_{i<j} C(j-i+1, 2)(a_{i,j}+a_{j,i})`.
    Norm,
    /// Corner entry sum `σ(k)`, 1-based `k`.
    Sigma(usize),
}

pub fn matrix_stat(a: &SuperMatrix, kind: MatrixStat) -> Result<i64, WeylError> {
    let size = a.size();
    let m = a.m;
    match kind {
        MatrixStat::DegreeD => {
            let mut total = 0i64;
            for i in 1..=size {
                for k in 1..i {
                    for j in 1..=size {
                        for l in (j + 1)..=size {
                            total += a.entry(i, j) as i64 * a.entry(k, l) as i64;
                        }
                    }
                }
            }
            for i in 1..=size {
                let sign = if parity(i, m) == 0 { 1 } else { -1 };
                for j in 1..=size {
                    for l in (j + 1)..=size {
                        total += sign * a.entry(i, j) as i64 * a.entry(i, l) as i64;
                    }
                }
            }
            Ok(total)
        }
        MatrixStat::ABar => {
            let mut total = 0i64;
            for i in (m + 1)..=size {
                for k in 1..=m {
                    for j in (m + 1)..=size {
                        for l in (j + 1)..=size {
                            total += a.entry(i, j) as i64 * a.entry(k, l) as i64;
                        }
                    }
                }
            }
            Ok(total)
        }
        MatrixStat::Norm => {
            let mut total = 0i64;
            for i in 1..=size {
                for j in (i + 1)..=size {
                    let gap = (j - i + 1) as i64;
                    let weight = gap * (gap - 1) / 2;
                    total += weight * (a.entry(i, j) as i64 + a.entry(j, i) as i64);
                }
            }
            Ok(total)
        }
        MatrixStat::Sigma(k) => {
            if k < 1 || k > size {
                return Err(WeylError::IndexOutOfRange);
            }
            let mut total = 0i64;
            if k <= m {
                for i in (m + 1)..=size {
                    for j in 1..k {
                        total += a.entry(i, j) as i64;
                    }
                }
            } else {
                for i in 1..=m {
                    for j in (k + 1)..=size {
                        total += a.entry(i, j) as i64;
                    }
                }
                for i in (m + 1)..=size {
                    for j in 1..=m {
                        total += a.entry(i, j) as i64;
                    }
                }
            }
            Ok(total)
        }
    }
}

/// Matrix family selector for [`enumerate_matrices`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixFamily {
    /// `M(m|n,r)`: entry sum exactly `r`.
    All,
    /// Zero diagonal, entry sum at most `r`.
    ZeroDiag,
    /// Strictly upper triangular, entry sum at most `r`.
    Upper,
    /// Strictly lower triangular, entry sum at most `r`.
    Lower,
}

/// Complete, duplicate-free enumeration in lexicographic (row-major) order.
pub fn enumerate_matrices(m: usize, n: usize, r: u32, family: MatrixFamily) -> Vec<SuperMatrix> {
    let size = m + n;
    let mut out = Vec::new();
    let mut entries = vec![vec![0u32; size]; size];
    rec(&mut out, &mut entries, 0, r, m, n, family);
    return out;

    fn rec(
        out: &mut Vec<SuperMatrix>,
        entries: &mut Vec<Vec<u32>>,
        cell: usize,
        left: u32,
        m: usize,
        n: usize,
        family: MatrixFamily,
    ) {
        let size = m + n;
        if cell == size * size {
            if matches!(family, MatrixFamily::All) && left > 0 {
                return;
            }
            out.push(SuperMatrix {
                m,
                n,
                entries: entries.clone(),
            });
            return;
        }
        let (i, j) = (cell / size + 1, cell % size + 1);
        let forced_zero = match family {
            MatrixFamily::All => false,
            MatrixFamily::ZeroDiag => i == j,
            MatrixFamily::Upper => i >= j,
            MatrixFamily::Lower => i <= j,
        };
        let cross_block = parity(i, m) != parity(j, m);
        let cap = if forced_zero {
            0
        } else if cross_block {
            left.min(1)
        } else {
            left
        };
        for v in 0..=cap {
            entries[i - 1][j - 1] = v;
            rec(out, entries, cell + 1, left - v, m, n, family);
        }
        entries[i - 1][j - 1] = 0;
    }
}

/// The four special almost-diagonal matrices built from a composition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialKind {
    /// `U_p = diag(λ - p e_{h+1}) + p E_{h,h+1}`.
    U,
    /// `L_p = diag(λ - p e_h) + p E_{h+1,h}`.
    L,
    /// `B_p = diag(λ + p e_h - (p+1) e_{h+1}) + E_{h,h+1}`.
    B,
    /// `C_p = diag(λ - (p+1) e_h + p e_{h+1}) + E_{h+1,h}`.
    C,
}

pub fn special_matrix(
    kind: SpecialKind,
    h: usize,
    lam: &Composition,
    p: u32,
) -> Result<SuperMatrix, WeylError> {
    let size = lam.size();
    if h < 1 || h >= size {
        return Err(WeylError::IndexOutOfRange);
    }
    let mut diag: Vec<i64> = lam.parts.iter().map(|&x| x as i64).collect();
    let (off_cell, off_val) = match kind {
        SpecialKind::U => {
            diag[h] -= p as i64;
            ((h, h + 1), p)
        }
        SpecialKind::L => {
            diag[h - 1] -= p as i64;
            ((h + 1, h), p)
        }
        SpecialKind::B => {
            diag[h - 1] += p as i64;
            diag[h] -= p as i64 + 1;
            ((h, h + 1), 1)
        }
        SpecialKind::C => {
            diag[h - 1] -= p as i64 + 1;
            diag[h] += p as i64;
            ((h + 1, h), 1)
        }
    };
    if diag.iter().any(|&x| x < 0) {
        return Err(WeylError::NotInM);
    }
    let mut entries = vec![vec![0u32; size]; size];
    for i in 0..size {
        entries[i][i] = diag[i] as u32;
    }
    entries[off_cell.0 - 1][off_cell.1 - 1] += off_val;
    SuperMatrix::new(lam.m, lam.n, entries)
}

/// `A ⪯ B` via the two families of corner-sum inequalities; independent of
/// the diagonals.
pub fn preceq(a: &SuperMatrix, b: &SuperMatrix) -> Result<bool, WeylError> {
    if a.size() != b.size() {
        return Err(WeylError::ShapeMismatch);
    }
    let size = a.size();
    for s in 1..=size {
        for t in (s + 1)..=size {
            let sa: i64 = (1..=s)
                .flat_map(|i| (t..=size).map(move |j| (i, j)))
                .map(|(i, j)| a.entry(i, j) as i64)
                .sum();
            let sb: i64 = (1..=s)
                .flat_map(|i| (t..=size).map(move |j| (i, j)))
                .map(|(i, j)| b.entry(i, j) as i64)
                .sum();
            if sa > sb {
                return Ok(false);
            }
        }
    }
    for s in 1..=size {
        for t in 1..s {
            let sa: i64 = (s..=size)
                .flat_map(|i| (1..=t).map(move |j| (i, j)))
                .map(|(i, j)| a.entry(i, j) as i64)
                .sum();
            let sb: i64 = (s..=size)
                .flat_map(|i| (1..=t).map(move |j| (i, j)))
                .map(|(i, j)| b.entry(i, j) as i64)
                .sum();
            if sa > sb {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Bruhat order on matrices with equal row and column compositions,
/// compared through the distinguished representatives.
pub fn bruhat_leq_matrix(a: &SuperMatrix, b: &SuperMatrix) -> Result<bool, WeylError> {
    if a.ro() != b.ro() || a.co() != b.co() {
        return Err(WeylError::ShapeMismatch);
    }
    let da = permutation_of_matrix(a);
    let db = permutation_of_matrix(b);
    Ok(da.bruhat_leq(&db))
}

#[cfg(test)]
mod tests {
    use super::super::composition::enumerate_compositions;
    use super::*;

    fn sm(m: usize, n: usize, rows: &[&[u32]]) -> SuperMatrix {
        SuperMatrix::new(m, n, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn block_constraint_enforced() {
        assert!(SuperMatrix::new(1, 1, vec![vec![0, 2], vec![0, 0]]).is_err());
        assert!(SuperMatrix::new(1, 1, vec![vec![2, 1], vec![1, 2]]).is_ok());
    }

    #[test]
    fn matrix_from_triple_examples() {
        // full group, single block
        let rho = Composition::new(1, 0, vec![3]).unwrap();
        let d = Permutation::identity(3);
        let a = matrix_from_triple(&rho, &d, &rho).unwrap();
        assert_eq!(a.entries, vec![vec![3]]);

        // identity double coset gives the diagonal
        let lam = Composition::new(1, 1, vec![2, 1]).unwrap();
        let a = matrix_from_triple(&lam, &Permutation::identity(3), &lam).unwrap();
        assert_eq!(a, SuperMatrix::from_diag(&lam));

        // (ρ=λ=(2,2), d=s_2) -> [[1,1],[1,1]]
        let rho = Composition::new(1, 1, vec![2, 2]).unwrap();
        let d = Permutation::transposition(4, 2);
        let a = matrix_from_triple(&rho, &d, &rho).unwrap();
        assert_eq!(a, sm(1, 1, &[&[1, 1], &[1, 1]]));
    }

    #[test]
    fn matrix_from_triple_rejects_non_minimal() {
        let rho = Composition::new(1, 1, vec![2, 2]).unwrap();
        // s_1 lies inside W_rho, not a double-coset representative
        let d = Permutation::transposition(4, 1);
        assert_eq!(
            matrix_from_triple(&rho, &d, &rho),
            Err(WeylError::NotMinimalRep)
        );
    }

    #[test]
    fn word_examples() {
        // diagonal matrix -> empty word
        let lam = Composition::new(1, 1, vec![2, 1]).unwrap();
        assert!(word_from_matrix(&SuperMatrix::from_diag(&lam)).is_empty());

        // [[1,1],[1,1]] -> single letter s_2
        let a = sm(1, 1, &[&[1, 1], &[1, 1]]);
        assert_eq!(word_from_matrix(&a), vec![2]);
    }

    #[test]
    fn word_round_trip_on_m11() {
        for r in 0..=4u32 {
            for a in enumerate_matrices(1, 1, r, MatrixFamily::All) {
                let word = word_from_matrix(&a);
                let d = Permutation::from_word(r as usize, &word);
                // word is reduced and has the predicted length
                assert_eq!(word.len(), d.length());
                assert_eq!(word.len() as u64, expected_word_length(&a));
                // the permutation reproduces the matrix and lies in D°
                let rho = a.ro();
                let lam = a.co();
                assert!(is_double_rep(&d, &rho.parts, &lam.parts));
                assert_eq!(matrix_from_triple(&rho, &d, &lam).unwrap(), a);
                // column reading is i_rho · d
                assert_eq!(d.apply_tuple(&rho.index_tuple()), a.column_reading_tuple());
            }
        }
    }

    #[test]
    fn word_round_trip_on_general_grids() {
        // no super constraint: all 2x2 and a few 3x3 natural matrices
        for r in 0..=5u32 {
            for a in enumerate_matrices(2, 0, r, MatrixFamily::All) {
                let word = word_from_grid(&a.entries);
                let d = Permutation::from_word(r as usize, &word);
                assert_eq!(word.len(), d.length());
                assert_eq!(
                    coset_matrix_entries(&a.ro().parts, &d, &a.co().parts),
                    a.entries
                );
            }
        }
        for a in enumerate_matrices(3, 0, 4, MatrixFamily::All) {
            let word = word_from_grid(&a.entries);
            let d = Permutation::from_word(4, &word);
            assert_eq!(word.len(), d.length());
            assert_eq!(word.len() as u64, expected_word_length(&a));
            assert_eq!(
                coset_matrix_entries(&a.ro().parts, &d, &a.co().parts),
                a.entries
            );
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_matrices(1, 1, 2, MatrixFamily::All).len(), 8);
        assert_eq!(enumerate_matrices(1, 1, 3, MatrixFamily::All).len(), 12);
        assert_eq!(enumerate_matrices(1, 1, 0, MatrixFamily::All).len(), 1);
        assert_eq!(enumerate_matrices(2, 1, 0, MatrixFamily::All).len(), 1);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        // independent brute force: loop over all 2x2 grids with entries <= r
        for r in 0..=3u32 {
            let mut count = 0;
            for a in 0..=r {
                for b in 0..=1u32.min(r) {
                    for c in 0..=1u32.min(r) {
                        for d in 0..=r {
                            if a + b + c + d == r {
                                count += 1;
                            }
                        }
                    }
                }
            }
            assert_eq!(
                enumerate_matrices(1, 1, r, MatrixFamily::All).len(),
                count,
                "r={r}"
            );
        }
    }

    #[test]
    fn enumeration_agrees_with_double_coset_count() {
        // |M(m|n,r)| = #{(ρ,λ,d) : d ∈ D°_ρλ}
        for (m, n, r) in [(1usize, 1usize, 2u32), (1, 1, 3), (2, 1, 2)] {
            let mut triples = 0usize;
            for rho in enumerate_compositions(m, n, r) {
                for lam in enumerate_compositions(m, n, r) {
                    triples += super_double_reps(&rho, &lam).unwrap().len();
                }
            }
            assert_eq!(
                triples,
                enumerate_matrices(m, n, r, MatrixFamily::All).len(),
                "m={m} n={n} r={r}"
            );
        }
    }

    #[test]
    fn super_reps_total_for_lambda11() {
        let mut total = 0;
        for rho in enumerate_compositions(1, 1, 2) {
            for lam in enumerate_compositions(1, 1, 2) {
                total += super_double_reps(&rho, &lam).unwrap().len();
            }
        }
        assert_eq!(total, 8);
    }

    #[test]
    fn intersection_composition_examples() {
        let rho = Composition::new(1, 1, vec![2, 2]).unwrap();
        let d = Permutation::transposition(4, 2);
        let nu = intersection_composition(&rho, &d, &rho).unwrap();
        assert_eq!(nu, vec![1, 1, 1, 1]);
        // degree is preserved
        assert_eq!(nu.iter().sum::<u32>(), 4);

        let lam = Composition::new(1, 1, vec![2, 1]).unwrap();
        let nu = intersection_composition(&lam, &Permutation::identity(3), &lam).unwrap();
        assert_eq!(nu, vec![2, 0, 0, 1]);
    }

    #[test]
    fn dhat_examples() {
        let lam = Composition::new(1, 1, vec![2, 2]).unwrap();
        assert_eq!(dhat(&lam, &Permutation::identity(4)).unwrap(), 0);

        // all indices odd: dhat counts every inversion between distinct values
        let lam = Composition::new(0, 2, vec![1, 1]).unwrap();
        let w = Permutation::transposition(2, 1);
        assert_eq!(dhat(&lam, &w).unwrap(), 1);
    }

    #[test]
    fn dhat_closed_matches_definition() {
        for r in 1..=3u32 {
            for a in enumerate_matrices(1, 1, r, MatrixFamily::All) {
                let d = permutation_of_matrix(&a);
                let rho = a.ro();
                assert_eq!(
                    dhat(&rho, &d).unwrap(),
                    dhat_closed(&rho, &a),
                    "A={:?}",
                    a.entries
                );
            }
            for a in enumerate_matrices(2, 1, r, MatrixFamily::All) {
                let d = permutation_of_matrix(&a);
                let rho = a.ro();
                assert_eq!(dhat(&rho, &d).unwrap(), dhat_closed(&rho, &a));
            }
        }
    }

    #[test]
    fn stats_examples() {
        // abar vanishes on diagonals and single superdiagonal shifts
        for mu in enumerate_compositions(1, 2, 3) {
            let d = SuperMatrix::from_diag(&mu);
            assert_eq!(matrix_stat(&d, MatrixStat::ABar).unwrap(), 0);
            if let Some(a) = d.shifted(&[(1, 2, 1)]) {
                assert_eq!(matrix_stat(&a, MatrixStat::ABar).unwrap(), 0);
            }
            if let Some(a) = d.shifted(&[(2, 1, 1)]) {
                assert_eq!(matrix_stat(&a, MatrixStat::ABar).unwrap(), 0);
            }
        }

        // m=1, n=2: entries a_22 = 1, a_13 = 1 give abar = 1
        let a = sm(1, 2, &[&[0, 0, 1], &[0, 1, 0], &[0, 0, 0]]);
        assert_eq!(matrix_stat(&a, MatrixStat::ABar).unwrap(), 1);

        // norm is zero exactly on diagonal matrices
        for r in 0..=3u32 {
            for a in enumerate_matrices(1, 1, r, MatrixFamily::All) {
                let is_diag = a.zero_diag_part().total() == 0;
                assert_eq!(matrix_stat(&a, MatrixStat::Norm).unwrap() == 0, is_diag);
            }
        }
    }

    #[test]
    fn sigma_corner_sums() {
        let a = sm(2, 1, &[&[1, 0, 1], &[0, 2, 0], &[1, 0, 0]]);
        // k <= m: entries with i > m, j < k
        assert_eq!(matrix_stat(&a, MatrixStat::Sigma(1)).unwrap(), 0);
        assert_eq!(matrix_stat(&a, MatrixStat::Sigma(2)).unwrap(), 1);
        // k >= m+1: upper-right strictly past k, plus the whole lower-left block
        assert_eq!(matrix_stat(&a, MatrixStat::Sigma(3)).unwrap(), 1);
        assert!(matrix_stat(&a, MatrixStat::Sigma(4)).is_err());
    }

    #[test]
    fn special_matrices() {
        let lam = Composition::new(1, 1, vec![1, 2]).unwrap();
        let u0 = special_matrix(SpecialKind::U, 1, &lam, 0).unwrap();
        assert_eq!(u0, SuperMatrix::from_diag(&lam));

        let u1 = special_matrix(SpecialKind::U, 1, &lam, 1).unwrap();
        assert_eq!(u1.co(), lam);
        let b1 = special_matrix(SpecialKind::B, 1, &lam, 1).unwrap();
        assert_eq!(u1.ro(), b1.co());

        // h = m, p = 2 leaves the block constraint
        assert_eq!(
            special_matrix(SpecialKind::U, 1, &lam, 2),
            Err(WeylError::NotInM)
        );
        // negative diagonal
        assert_eq!(
            special_matrix(SpecialKind::L, 1, &lam, 2),
            Err(WeylError::NotInM)
        );
    }

    #[test]
    fn special_row_column_relations() {
        for lam in enumerate_compositions(2, 1, 4) {
            for h in 1..3 {
                for p in 0..=lam.part(h + 1) {
                    let up = match special_matrix(SpecialKind::U, h, &lam, p) {
                        Ok(u) => u,
                        Err(_) => continue,
                    };
                    assert_eq!(up.co(), lam);
                    if let Ok(bp) = special_matrix(SpecialKind::B, h, &lam, p) {
                        assert_eq!(up.ro(), bp.co());
                    }
                }
                for p in 0..=lam.part(h) {
                    let lp = match special_matrix(SpecialKind::L, h, &lam, p) {
                        Ok(l) => l,
                        Err(_) => continue,
                    };
                    assert_eq!(lp.co(), lam);
                    if let Ok(cp) = special_matrix(SpecialKind::C, h, &lam, p) {
                        assert_eq!(lp.ro(), cp.co());
                    }
                }
            }
        }
    }

    #[test]
    fn preceq_reflexive_transitive_and_diag_minimal() {
        let mats = enumerate_matrices(1, 1, 3, MatrixFamily::All);
        for a in &mats {
            assert!(preceq(a, a).unwrap());
        }
        for a in &mats {
            for b in &mats {
                for c in &mats {
                    if preceq(a, b).unwrap() && preceq(b, c).unwrap() {
                        assert!(preceq(a, c).unwrap());
                    }
                }
            }
        }
        // diag(λ) is Bruhat-minimal among matrices with its ro/co
        for lam in enumerate_compositions(1, 1, 3) {
            let d = SuperMatrix::from_diag(&lam);
            for b in &mats {
                if b.ro() == lam && b.co() == lam {
                    assert!(bruhat_leq_matrix(&d, b).unwrap());
                }
            }
        }
    }

    #[test]
    fn order_chain_bruhat_preceq_norm() {
        let mats = enumerate_matrices(1, 1, 3, MatrixFamily::All);
        let mut comparable = 0;
        for a in &mats {
            for b in &mats {
                if a == b || a.ro() != b.ro() || a.co() != b.co() {
                    continue;
                }
                if bruhat_leq_matrix(a, b).unwrap() {
                    comparable += 1;
                    let ap = a.zero_diag_part();
                    let bp = b.zero_diag_part();
                    assert!(preceq(&ap, &bp).unwrap());
                    assert_ne!(ap, bp);
                    assert!(
                        matrix_stat(&ap, MatrixStat::Norm).unwrap()
                            < matrix_stat(&bp, MatrixStat::Norm).unwrap()
                    );
                }
            }
        }
        assert!(comparable > 0);
    }

    #[test]
    fn coset_chain_inside_parabolic() {
        // ρ = (2,3), refined to ρ' = (2,1,2):
        // D_{ρ'} ∩ W_ρ = {1, s_3, s_3 s_4}
        let rho_ref = vec![2u32, 1, 2];
        let inside: Vec<Permutation> = super::super::permutation::coset_reps_parts(&rho_ref)
            .into_iter()
            .filter(|w| {
                // w ∈ W_ρ: preserves blocks {1,2}, {3,4,5}
                (1..=2).all(|i| w.image(i) <= 2) && (3..=5).all(|i| w.image(i) >= 3)
            })
            .collect();
        let expect = vec![
            Permutation::identity(5),
            Permutation::from_word(5, &[3]),
            Permutation::from_word(5, &[3, 4]),
        ];
        assert_eq!(inside.len(), 3);
        for e in &expect {
            assert!(inside.contains(e));
        }
    }
}
