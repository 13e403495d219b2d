//! Coefficient functions for the structured multiplication formulas.
//!
//! Each function evaluates one of the closed-form monomials-with-sign (or
//! plain integer exponents of the signed variable) that appear in the
//! norm-basis and normalised-basis product rules. All indices are 1-based.

use crate::qpoly::LaurentPoly;
use crate::weyl::{matrix_stat, parity, MatrixStat, SuperMatrix};

/// `ε = (ĥ + ĥ+1̂) mod 2`: 1 exactly at the odd generator position `h = m`.
pub fn epsilon(h: usize, m: usize) -> u8 {
    (parity(h, m) + parity(h + 1, m)) % 2
}

fn row_sum_from(a: &SuperMatrix, row: usize, k_from: usize) -> i64 {
    (k_from..=a.size()).map(|j| a.entry(row, j) as i64).sum()
}

fn row_sum_to(a: &SuperMatrix, row: usize, k_to_incl: usize) -> i64 {
    (1..=k_to_incl.min(a.size()))
        .map(|j| a.entry(row, j) as i64)
        .sum()
}

/// Sign exponent shared by the `h = m` formulas: `Σ_{i>m, j<k} a_{i,j}`.
pub fn odd_block_sign_exp(a: &SuperMatrix, k: usize) -> i64 {
    let mut s = 0i64;
    for i in (a.m + 1)..=a.size() {
        for j in 1..k {
            s += a.entry(i, j) as i64;
        }
    }
    s
}

/// `f_k(q; A, h)`: the scalar in front of the raising key product term `k`.
pub fn coeff_f_k(a: &SuperMatrix, h: usize, k: usize) -> LaurentPoly {
    let m = a.m;
    if h < m {
        LaurentPoly::monomial(2 * row_sum_from(a, h, k + 1))
    } else if h == m {
        let sign = odd_block_sign_exp(a, k);
        let exp = -2 * row_sum_to(a, m + 1, k - 1) + 2 * row_sum_from(a, m, k + 1);
        let p = LaurentPoly::monomial(exp);
        if sign % 2 == 0 {
            p
        } else {
            -&p
        }
    } else {
        LaurentPoly::monomial(-2 * row_sum_to(a, h + 1, k - 1))
    }
}

/// `g_k(q; A, h+1)`: the scalar in front of the lowering key product term `k`.
pub fn coeff_g_k(a: &SuperMatrix, h: usize, k: usize) -> LaurentPoly {
    let m = a.m;
    if h < m {
        LaurentPoly::monomial(2 * row_sum_to(a, h + 1, k - 1))
    } else if h == m {
        let sign = odd_block_sign_exp(a, k);
        if sign % 2 == 0 {
            LaurentPoly::one()
        } else {
            -&LaurentPoly::one()
        }
    } else {
        LaurentPoly::monomial(-2 * row_sum_from(a, h, k + 1))
    }
}

/// `f_ν(q; A, h)` for a multi-index `ν`; reduces to `f_k` at `|ν| = 1` and
/// to 1 at `ν = 0`; identically zero at `h = m` for `|ν| >= 2`.
pub fn coeff_f_nu(a: &SuperMatrix, h: usize, nu: &[u32]) -> LaurentPoly {
    let p: u32 = nu.iter().sum();
    match p {
        0 => LaurentPoly::one(),
        1 => {
            let k = nu.iter().position(|&x| x == 1).unwrap() + 1;
            coeff_f_k(a, h, k)
        }
        _ => {
            let m = a.m;
            if h < m {
                let mut exp = 0i64;
                for (t, &nt) in nu.iter().enumerate() {
                    exp += row_sum_from(a, h, t + 2) * nt as i64;
                }
                LaurentPoly::monomial(2 * exp)
            } else if h == m {
                LaurentPoly::zero()
            } else {
                let mut exp = 0i64;
                for t in 0..nu.len() {
                    for l in 0..t {
                        exp += nu[l] as i64 * nu[t] as i64;
                    }
                    exp -= row_sum_to(a, h + 1, t) * nu[t] as i64;
                }
                LaurentPoly::monomial(2 * exp)
            }
        }
    }
}

/// `g_ν(q; A, h+1)`, the lowering counterpart of [`coeff_f_nu`].
pub fn coeff_g_nu(a: &SuperMatrix, h: usize, nu: &[u32]) -> LaurentPoly {
    let p: u32 = nu.iter().sum();
    match p {
        0 => LaurentPoly::one(),
        1 => {
            let k = nu.iter().position(|&x| x == 1).unwrap() + 1;
            coeff_g_k(a, h, k)
        }
        _ => {
            let m = a.m;
            if h < m {
                let mut exp = 0i64;
                for (t, &nt) in nu.iter().enumerate() {
                    exp += row_sum_to(a, h + 1, t) * nt as i64;
                }
                LaurentPoly::monomial(2 * exp)
            } else if h == m {
                LaurentPoly::zero()
            } else {
                let mut exp = 0i64;
                for t in 0..nu.len() {
                    for l in 0..t {
                        exp += nu[l] as i64 * nu[t] as i64;
                    }
                    exp -= row_sum_from(a, h, t + 2) * nu[t] as i64;
                }
                LaurentPoly::monomial(2 * exp)
            }
        }
    }
}

/// Exponent of `v_h` in the normalised raising formula, `h ≠ m`:
/// `Σ_{j>=t} a_{h,j} ν_t - Σ_{j>t} a_{h+1,j} ν_t + Σ_{t<t'} ν_t ν_{t'}`.
pub fn exp_f_h(a: &SuperMatrix, h: usize, nu: &[u32]) -> i64 {
    let mut exp = 0i64;
    for (t0, &nt) in nu.iter().enumerate() {
        let t = t0 + 1;
        exp += row_sum_from(a, h, t) * nt as i64;
        exp -= row_sum_from(a, h + 1, t + 1) * nt as i64;
        for tp in (t0 + 1)..nu.len() {
            exp += nt as i64 * nu[tp] as i64;
        }
    }
    exp
}

/// Exponent of `v_{h+1}` in the normalised lowering formula, `h ≠ m`:
/// `Σ_{j<=t} a_{h+1,j} ν_t - Σ_{j<t} a_{h,j} ν_t + Σ_{t<t'} ν_t ν_{t'}`.
pub fn exp_fp_h(a: &SuperMatrix, h: usize, nu: &[u32]) -> i64 {
    let mut exp = 0i64;
    for (t0, &nt) in nu.iter().enumerate() {
        let t = t0 + 1;
        exp += row_sum_to(a, h + 1, t) * nt as i64;
        exp -= row_sum_to(a, h, t - 1) * nt as i64;
        for tp in (t0 + 1)..nu.len() {
            exp += nt as i64 * nu[tp] as i64;
        }
    }
    exp
}

/// `f_m(e_k, A) = Σ_{j>=k} a_{m,j} + Σ_{j>k} a_{m+1,j}` (odd raising case).
pub fn exp_f_m(a: &SuperMatrix, k: usize) -> i64 {
    row_sum_from(a, a.m, k) + row_sum_from(a, a.m + 1, k + 1)
}

/// `f'_m(e_k, A) = Σ_{j<=k} a_{m+1,j} + Σ_{j<k} a_{m,j}` (odd lowering case).
pub fn exp_fp_m(a: &SuperMatrix, k: usize) -> i64 {
    row_sum_to(a, a.m + 1, k) + row_sum_to(a, a.m, k - 1)
}

/// The uniform single-index exponent
/// `f(k) = Σ_{j>=k} a_{h,j} - (-1)^ε Σ_{j>k} a_{h+1,j}`.
pub fn exp_f_unified(a: &SuperMatrix, h: usize, k: usize) -> i64 {
    let sgn = if epsilon(h, a.m) == 0 { 1 } else { -1 };
    row_sum_from(a, h, k) - sgn * row_sum_from(a, h + 1, k + 1)
}

/// The uniform single-index exponent
/// `f'(k) = Σ_{j<=k} a_{h+1,j} - (-1)^ε Σ_{j<k} a_{h,j}`.
pub fn exp_fp_unified(a: &SuperMatrix, h: usize, k: usize) -> i64 {
    let sgn = if epsilon(h, a.m) == 0 { 1 } else { -1 };
    row_sum_to(a, h + 1, k) - sgn * row_sum_to(a, h, k - 1)
}

/// `(-1)^{ε σ(k)}` as a Laurent scalar.
pub fn sigma_sign(a: &SuperMatrix, h: usize, k: usize) -> LaurentPoly {
    if epsilon(h, a.m) == 0 {
        return LaurentPoly::one();
    }
    let sigma = matrix_stat(a, MatrixStat::Sigma(k)).unwrap();
    if sigma % 2 == 0 {
        LaurentPoly::one()
    } else {
        -&LaurentPoly::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{enumerate_compositions, SuperMatrix};

    fn sm(m: usize, n: usize, rows: &[&[u32]]) -> SuperMatrix {
        SuperMatrix::new(m, n, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn f_k_below_m_is_plain_power() {
        // h = 1 < m = 3 with row h = (0, 1, 2, 0): f_1 = q^{Σ_{j>1} a_{1,j}} = q^3
        let a = sm(
            3,
            1,
            &[&[0, 1, 2, 0], &[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1]],
        );
        assert_eq!(coeff_f_k(&a, 1, 1), LaurentPoly::monomial(6));
        // f_2 = q^{a_{1,3}+a_{1,4}} = q^2 and f_3 = q^{a_{1,4}} = 1
        assert_eq!(coeff_f_k(&a, 1, 2), LaurentPoly::monomial(4));
        assert_eq!(coeff_f_k(&a, 1, 3), LaurentPoly::one());
    }

    #[test]
    fn f_k_at_m_carries_sign_and_negative_powers() {
        // m = 1: f_k picks up (-1)^{Σ_{i>1, j<k} a_{i,j}} q^{-Σ_{j<k} a_{2,j}} q^{Σ_{j>k} a_{1,j}}
        let a = sm(1, 1, &[&[1, 1], &[1, 0]]);
        // k = 1: sign exp 0, q^{a_{1,2}} = q
        assert_eq!(coeff_f_k(&a, 1, 1), LaurentPoly::monomial(2));
        // k = 2: sign exp a_{2,1} = 1, q^{-a_{2,1}} = q^{-1}
        assert_eq!(coeff_f_k(&a, 1, 2), -&LaurentPoly::monomial(-2));
    }

    #[test]
    fn multi_index_reductions() {
        let a = sm(1, 2, &[&[2, 1, 0], &[1, 1, 2], &[0, 1, 3]]);
        for h in 1..3 {
            // |ν| = 1 extension clause
            for k in 1..=3usize {
                let mut nu = vec![0u32; 3];
                nu[k - 1] = 1;
                assert_eq!(coeff_f_nu(&a, h, &nu), coeff_f_k(&a, h, k));
                assert_eq!(coeff_g_nu(&a, h, &nu), coeff_g_k(&a, h, k));
            }
            // ν = 0
            assert!(coeff_f_nu(&a, h, &[0, 0, 0]).is_one());
        }
        // h = m kills |ν| >= 2
        assert!(coeff_f_nu(&a, 1, &[1, 1, 0]).is_zero());
        assert!(coeff_g_nu(&a, 1, &[0, 1, 1]).is_zero());
    }

    #[test]
    fn unified_exponents_match_specialisations() {
        let a = sm(2, 1, &[&[1, 2, 1], &[0, 1, 0], &[1, 1, 1]]);
        for h in 1..3usize {
            for k in 1..=3usize {
                let mut nu = vec![0u32; 3];
                nu[k - 1] = 1;
                if h != a.m {
                    assert_eq!(exp_f_unified(&a, h, k), exp_f_h(&a, h, &nu));
                    assert_eq!(exp_fp_unified(&a, h, k), exp_fp_h(&a, h, &nu));
                } else {
                    assert_eq!(exp_f_unified(&a, h, k), exp_f_m(&a, k));
                    assert_eq!(exp_fp_unified(&a, h, k), exp_fp_m(&a, k));
                }
            }
        }
    }

    #[test]
    fn epsilon_is_one_only_at_m() {
        for h in 1..4 {
            assert_eq!(epsilon(h, 2), if h == 2 { 1 } else { 0 });
        }
    }

    #[test]
    fn diagonal_matrix_exponents() {
        for lam in enumerate_compositions(1, 1, 3) {
            let d = SuperMatrix::from_diag(&lam);
            // f(h+1) on a diagonal matrix: only a_{h,h} >= h+1 contributes,
            // i.e. nothing since row h is supported at column h < h+1
            assert_eq!(exp_f_unified(&d, 1, 2), 0);
        }
    }
}
