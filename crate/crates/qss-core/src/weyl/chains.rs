//! The triple set `T(N) = {(i,h,j) : 1 <= i <= h < j <= N}` with its two
//! total orders, and the recursively defined almost-diagonal chain matrices
//! that drive the triangular products.

use super::composition::Composition;
use super::matrix::SuperMatrix;
use super::WeylError;

pub type Triple = (usize, usize, usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleOrder {
    /// j descending, then i descending, then h ascending.
    Leq1,
    /// i ascending, then j ascending, then h descending.
    Leq2,
}

/// All of `T(N)` sorted ascending under the requested order.
pub fn triple_sequence(n: usize, ord: TripleOrder) -> Vec<Triple> {
    let mut triples: Vec<Triple> = Vec::new();
    for i in 1..=n {
        for h in i..n {
            for j in (h + 1)..=n {
                triples.push((i, h, j));
            }
        }
    }
    match ord {
        TripleOrder::Leq1 => {
            triples.sort_by(|a, b| {
                b.2.cmp(&a.2)
                    .then(b.0.cmp(&a.0))
                    .then(a.1.cmp(&b.1))
            });
        }
        TripleOrder::Leq2 => {
            triples.sort_by(|a, b| {
                a.0.cmp(&b.0)
                    .then(a.2.cmp(&b.2))
                    .then(b.1.cmp(&a.1))
            });
        }
    }
    triples
}

/// Chain matrices for the triangular product of a matrix `A`.
///
/// The entries are produced in ascending order of their total order:
/// `e_chain[k]` for `(T, <=_1)` and `f_chain[k]` for `(T, <=_2)`. Recursion
/// anchors: the `<=_1`-maximal member has the column composition of `A`, and
/// the `<=_2`-maximal member's column composition is the row composition of
/// the `<=_1`-minimal member. Column/row compositions of adjacent members
/// match, so the chain can be multiplied out factor by factor.
pub struct ChainMatrices {
    pub e_chain: Vec<(Triple, SuperMatrix)>,
    pub f_chain: Vec<(Triple, SuperMatrix)>,
}

pub fn chain_matrices(a: &SuperMatrix) -> Result<ChainMatrices, WeylError> {
    let size = a.size();
    let t1 = triple_sequence(size, TripleOrder::Leq1);
    let t2 = triple_sequence(size, TripleOrder::Leq2);

    let mut e_chain: Vec<(Triple, SuperMatrix)> = Vec::with_capacity(t1.len());
    let mut co_target = a.co();
    for &(i, h, j) in t1.iter().rev() {
        let mult = a.entry(i, j);
        let member = almost_diag(&co_target, h, h + 1, mult)?;
        co_target = member.ro();
        e_chain.push(((i, h, j), member));
    }
    e_chain.reverse();

    // the F-chain hangs off the row composition of the <=_1-minimal member
    let mut co_target = e_chain
        .first()
        .map(|(_, mat)| mat.ro())
        .unwrap_or_else(|| a.co());
    let mut f_chain: Vec<(Triple, SuperMatrix)> = Vec::with_capacity(t2.len());
    for &(i, h, j) in t2.iter().rev() {
        let mult = a.entry(j, i);
        let member = almost_diag(&co_target, h + 1, h, mult)?;
        co_target = member.ro();
        f_chain.push(((i, h, j), member));
    }
    f_chain.reverse();

    Ok(ChainMatrices { e_chain, f_chain })
}

/// `diag(co - mult * e_col) + mult * E_{row,col}`: the unique matrix with the
/// given column composition whose off-diagonal part is `mult * E_{row,col}`.
fn almost_diag(
    co: &Composition,
    row: usize,
    col: usize,
    mult: u32,
) -> Result<SuperMatrix, WeylError> {
    if co.part(col) < mult {
        return Err(WeylError::ChainLeavesM);
    }
    let size = co.size();
    let mut entries = vec![vec![0u32; size]; size];
    for i in 1..=size {
        entries[i - 1][i - 1] = co.part(i);
    }
    entries[col - 1][col - 1] -= mult;
    entries[row - 1][col - 1] += mult;
    SuperMatrix::new(co.m, co.n, entries).map_err(|_| WeylError::ChainLeavesM)
}

#[cfg(test)]
mod tests {
    use super::super::composition::enumerate_compositions;
    use super::super::matrix::{enumerate_matrices, MatrixFamily};
    use super::*;

    #[test]
    fn sequence_for_n3_under_leq1() {
        assert_eq!(
            triple_sequence(3, TripleOrder::Leq1),
            vec![(2, 2, 3), (1, 1, 3), (1, 2, 3), (1, 1, 2)]
        );
    }

    #[test]
    fn sequence_for_n2() {
        assert_eq!(triple_sequence(2, TripleOrder::Leq1), vec![(1, 1, 2)]);
        assert_eq!(triple_sequence(2, TripleOrder::Leq2), vec![(1, 1, 2)]);
    }

    #[test]
    fn sequence_sizes() {
        // |T(N)| = N(N^2-1)/6, counted independently by brute force
        for n in 2..=5usize {
            let brute = (1..=n)
                .flat_map(|i| (i..n).flat_map(move |h| ((h + 1)..=n).map(move |j| (i, h, j))))
                .count();
            assert_eq!(brute, n * (n * n - 1) / 6);
            assert_eq!(triple_sequence(n, TripleOrder::Leq1).len(), brute);
            assert_eq!(triple_sequence(n, TripleOrder::Leq2).len(), brute);
        }
    }

    #[test]
    fn orders_are_permutations_of_same_set() {
        for n in 2..=5usize {
            let mut a = triple_sequence(n, TripleOrder::Leq1);
            let mut b = triple_sequence(n, TripleOrder::Leq2);
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn diagonal_matrix_has_diagonal_chains() {
        for lam in enumerate_compositions(1, 1, 3) {
            let a = SuperMatrix::from_diag(&lam);
            let chains = chain_matrices(&a).unwrap();
            for (_, member) in chains.e_chain.iter().chain(chains.f_chain.iter()) {
                assert_eq!(member.zero_diag_part().total(), 0);
            }
        }
    }

    #[test]
    fn chain_bookkeeping() {
        for r in 0..=3u32 {
            for a in enumerate_matrices(1, 1, r, MatrixFamily::All)
                .into_iter()
                .chain(enumerate_matrices(2, 1, r, MatrixFamily::All))
            {
                let chains = chain_matrices(&a).unwrap();
                // every member stays in M(m|n,r)
                for (_, member) in chains.e_chain.iter().chain(chains.f_chain.iter()) {
                    assert_eq!(member.total(), r);
                }
                // anchor: <=_1-maximal E member has co(A)
                assert_eq!(chains.e_chain.last().unwrap().1.co(), a.co());
                // adjacency inside each chain
                for w in chains.e_chain.windows(2) {
                    assert_eq!(w[0].1.co(), w[1].1.ro());
                }
                for w in chains.f_chain.windows(2) {
                    assert_eq!(w[0].1.co(), w[1].1.ro());
                }
                // F anchor: <=_2-max F member's co = <=_1-min E member's ro
                assert_eq!(
                    chains.f_chain.last().unwrap().1.co(),
                    chains.e_chain.first().unwrap().1.ro()
                );
                // the product's row composition returns to ro(A)
                assert_eq!(chains.f_chain.first().unwrap().1.ro(), a.ro());
            }
        }
    }
}
