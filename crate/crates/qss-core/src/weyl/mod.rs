//! Symmetric-group and matrix combinatorics: compositions, distinguished
//! (double) coset representatives, the matrix sets `M(m|n,r)`, degree and
//! sign statistics, and the orders behind the triangular relations.

mod chains;
mod composition;
mod matrix;
mod permutation;

pub use chains::{chain_matrices, triple_sequence, ChainMatrices, Triple, TripleOrder};
pub use composition::{
    add_vecs, alpha_vec, beta_vec, enumerate_compositions, std_vec, Composition,
};
pub use matrix::{
    bruhat_leq_matrix, coset_matrix_entries, dhat, dhat_closed, enumerate_matrices,
    expected_word_length, intersection_composition, matrix_from_triple, matrix_stat,
    permutation_of_matrix, preceq, special_matrix, super_double_reps, word_from_grid,
    word_from_matrix, MatrixFamily, MatrixStat, SpecialKind, SuperMatrix,
};
pub use permutation::{
    all_permutations, coset_reps_parts, double_reps_parts, is_double_rep, Permutation,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("index out of range")]
    IndexOutOfRange,
    #[error("vector length mismatch")]
    LengthMismatch,
    #[error("compositions have different degrees")]
    DegreeMismatch,
    #[error("permutation is not the minimal double-coset representative")]
    NotMinimalRep,
    #[error("matrix lies outside M(m|n,r)")]
    NotInM,
    #[error("incompatible shapes")]
    ShapeMismatch,
    #[error("chain member leaves M(m|n,r)")]
    ChainLeavesM,
    #[error("not a permutation of 1..r")]
    InvalidPermutation,
}

/// Parity of a 1-based index: 0 for the first `m` indices, 1 beyond.
pub fn parity(h: usize, m: usize) -> u8 {
    if h <= m {
        0
    } else {
        1
    }
}

/// Range-checked parity of an index in `[1, m+n]`.
pub fn parity_index(h: usize, m: usize, n: usize) -> Result<u8, WeylError> {
    if h < 1 || h > m + n {
        return Err(WeylError::IndexOutOfRange);
    }
    Ok(parity(h, m))
}

/// Signed dot product `Σ_i (-1)^{î} a_i b_i` with the first `m` indices even.
pub fn signed_dot(a: &[i64], b: &[i64], m: usize) -> Result<i64, WeylError> {
    if a.len() != b.len() {
        return Err(WeylError::LengthMismatch);
    }
    Ok(a.iter()
        .zip(b)
        .enumerate()
        .map(|(idx, (x, y))| {
            if parity(idx + 1, m) == 0 {
                x * y
            } else {
                -x * y
            }
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_cases() {
        assert_eq!(parity_index(1, 2, 1).unwrap(), 0);
        assert_eq!(parity_index(3, 2, 1).unwrap(), 1);
        for m in 1..5 {
            assert_eq!(parity_index(m, m, 1).unwrap(), 0);
        }
        assert_eq!(parity_index(4, 2, 1), Err(WeylError::IndexOutOfRange));
        assert_eq!(parity_index(0, 2, 1), Err(WeylError::IndexOutOfRange));
    }

    #[test]
    fn signed_dot_cases() {
        assert_eq!(signed_dot(&[1, 2, 3], &[1, 1, 1], 2).unwrap(), 0);
        assert_eq!(signed_dot(&[5, -7], &[0, 0], 1).unwrap(), 0);
        assert_eq!(signed_dot(&[2, 3], &[1, -1], 1).unwrap(), 5);
        assert_eq!(
            signed_dot(&[1, 2], &[1], 1),
            Err(WeylError::LengthMismatch)
        );
    }
}
