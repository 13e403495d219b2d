//! Exact computer-algebra kernel for q-Schur superalgebras `S(m|n,r)` and
//! the quantum supergroup `U(gl(m|n))`.
//!
//! The crate is organised in layers:
//!
//! * [`qpoly`] — Laurent polynomials in `v` (with `q = v^2`) and the quantum
//!   scalars built from them;
//! * [`weyl`] — symmetric-group and matrix combinatorics: compositions,
//!   distinguished (double) coset representatives, the matrix sets
//!   `M(m|n,r)`, degree and sign statistics, and the orders used by the
//!   triangular relations;
//! * [`hecke`] — the Iwahori–Hecke algebra `H_q(r)` and its signed action on
//!   the tensor superspace `V(m|n)^{⊗r}`;
//! * [`oracle`] — brute-force realisation of `S_q(m|n,r)` as Hecke-module
//!   endomorphisms; the ground truth every structured formula is tested
//!   against;
//! * [`schur`] — the structured multiplication rules: relative-norm and
//!   normalised-basis products, the uniform elements `A(j,r)`, generator
//!   multiplication in r-independent coordinates, and the triangular
//!   products behind the monomial basis;
//! * [`ugl`] — the presented supergroup: generator words, the realisation
//!   map into r-independent coordinates, relation verification, quantum
//!   root vectors and the monomial basis;
//! * [`verify`] — machine-checkable sweeps with machine-readable reports.

pub mod hecke;
pub mod oracle;
pub mod qpoly;
pub mod schur;
pub mod ugl;
pub mod verify;
pub mod weyl;
