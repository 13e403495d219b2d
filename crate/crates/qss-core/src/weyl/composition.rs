//! Compositions of `r` into `m + n` parts, split into an even `m`-block and
//! an odd `n`-block.

use serde::{Deserialize, Serialize};

use super::WeylError;

/// A composition in `Λ(m|n,r)`: `m + n` nonnegative parts summing to the
/// degree `r` it belongs to. Indices are 1-based throughout the API.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Composition {
    pub m: usize,
    pub n: usize,
    pub parts: Vec<u32>,
}

impl Composition {
    pub fn new(m: usize, n: usize, parts: Vec<u32>) -> Result<Self, WeylError> {
        if parts.len() != m + n {
            return Err(WeylError::LengthMismatch);
        }
        Ok(Composition { m, n, parts })
    }

    pub fn size(&self) -> usize {
        self.m + self.n
    }

    pub fn degree(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// 1-based part accessor.
    pub fn part(&self, i: usize) -> u32 {
        self.parts[i - 1]
    }

    /// Partial sums `(0, λ_1, λ_1+λ_2, ..., r)`, length `m+n+1`.
    pub fn partial_sums(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.parts.len() + 1);
        let mut acc = 0;
        out.push(0);
        for p in &self.parts {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// The block `R_i` of positions preserved by the parabolic subgroup,
    /// as an inclusive 1-based range.
    pub fn block(&self, i: usize) -> std::ops::RangeInclusive<usize> {
        let tilde = self.partial_sums();
        (tilde[i - 1] as usize + 1)..=(tilde[i] as usize)
    }

    /// The weight tuple `(1^{λ_1}, 2^{λ_2}, ..., N^{λ_N})`.
    pub fn index_tuple(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.degree() as usize);
        for (k, p) in self.parts.iter().enumerate() {
            for _ in 0..*p {
                out.push((k + 1) as u8);
            }
        }
        out
    }

    /// Parts as a signed integer vector, for dot products and j-shifts.
    pub fn as_ivec(&self) -> Vec<i64> {
        self.parts.iter().map(|&p| p as i64).collect()
    }
}

/// All compositions of `r` into `m + n` parts, in lexicographic order.
pub fn enumerate_compositions(m: usize, n: usize, r: u32) -> Vec<Composition> {
    let len = m + n;
    let mut out = Vec::new();
    if len == 0 {
        if r == 0 {
            out.push(Composition {
                m,
                n,
                parts: Vec::new(),
            });
        }
        return out;
    }
    let mut parts = vec![0u32; len];
    fill(&mut out, &mut parts, 0, r, m, n);
    out
}

fn fill(out: &mut Vec<Composition>, parts: &mut Vec<u32>, idx: usize, left: u32, m: usize, n: usize) {
    if idx + 1 == parts.len() {
        parts[idx] = left;
        out.push(Composition {
            m,
            n,
            parts: parts.clone(),
        });
        return;
    }
    for v in 0..=left {
        parts[idx] = v;
        fill(out, parts, idx + 1, left - v, m, n);
    }
}

/// Standard basis vector `e_k` of length `len` (1-based `k`).
pub fn std_vec(len: usize, k: usize) -> Vec<i64> {
    let mut v = vec![0i64; len];
    v[k - 1] = 1;
    v
}

/// `α_h = e_h - e_{h+1}`.
pub fn alpha_vec(len: usize, h: usize) -> Vec<i64> {
    let mut v = vec![0i64; len];
    v[h - 1] = 1;
    v[h] = -1;
    v
}

/// `β_h = -e_h - e_{h+1}`.
pub fn beta_vec(len: usize, h: usize) -> Vec<i64> {
    let mut v = vec![0i64; len];
    v[h - 1] = -1;
    v[h] = -1;
    v
}

pub fn add_vecs(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_sums_and_blocks() {
        let lam = Composition::new(1, 1, vec![2, 1]).unwrap();
        assert_eq!(lam.partial_sums(), vec![0, 2, 3]);
        assert_eq!(lam.block(1), 1..=2);
        assert_eq!(lam.block(2), 3..=3);
        assert_eq!(lam.index_tuple(), vec![1, 1, 2]);
    }

    #[test]
    fn enumeration_count_and_order() {
        // compositions of 3 into 2 parts: (0,3),(1,2),(2,1),(3,0)
        let all = enumerate_compositions(1, 1, 3);
        assert_eq!(all.len(), 4);
        assert_eq!(all[0].parts, vec![0, 3]);
        assert_eq!(all[3].parts, vec![3, 0]);
        // C(r + N - 1, N - 1) for N = 3, r = 4: C(6,2) = 15
        assert_eq!(enumerate_compositions(2, 1, 4).len(), 15);
    }
}
