//! Verification sweeps: every structured formula checked against the
//! brute-force oracle or against an independent route, over exhaustive desk-
//! scale grids, with machine-readable reports.

use std::collections::BTreeMap;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::oracle::{
    compose, expand_in_norm_basis, norm_endo, norm_family_rank, xi_endo, xi_product_endo,
    ApplyOrder, Endomorphism, XI_CONVENTION,
};
use crate::qpoly::{quantum_factorial, quantum_int, IntVariant, LaurentPoly, VarSign};
use crate::schur::{
    a_element, monomial_formal, mul_gen_formal, mul_key_n, mul_n_ulp, mul_xi_ulp, psi_product,
    truncate, FormalCoord, Gen, KeyDir, SchurBasis, SchurElement, UlDir,
};
use crate::ugl::{monomial_image, relation_instances, Relation};
use crate::weyl::{
    bruhat_leq_matrix, dhat, dhat_closed, enumerate_compositions, enumerate_matrices,
    expected_word_length, matrix_from_triple, matrix_stat, preceq, special_matrix,
    word_from_matrix, MatrixFamily, MatrixStat, Permutation, SpecialKind, SuperMatrix,
};
use crate::hecke::{sign_poly, TensorVector};

pub const REPORT_SCHEMA: u32 = 1;
pub const DEFAULT_SEED: u64 = 0x5153_5300; // "QSS\0"

/// One failed instance, with both computed sides attached.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Failure {
    pub instance: String,
    pub left: serde_json::Value,
    pub right: serde_json::Value,
}

/// Machine-readable sweep report; `passes + |failures| = instances`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub suite: String,
    pub m: usize,
    pub n: usize,
    pub r_max: u32,
    pub instances: usize,
    pub passes: usize,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    fn collect(suite: &str, cfg: &SweepConfig, results: Vec<Option<Failure>>) -> Self {
        let instances = results.len();
        let failures: Vec<Failure> = results.into_iter().flatten().collect();
        VerificationReport {
            schema: REPORT_SCHEMA,
            suite: suite.to_string(),
            m: cfg.m,
            n: cfg.n,
            r_max: cfg.r_max,
            instances,
            passes: instances - failures.len(),
            failures,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "suite {}: {}/{} instances passed (m={} n={} r_max={})",
            self.suite, self.passes, self.instances, self.m, self.n, self.r_max
        )
    }
}

/// Sweep parameters. `jobs = None` uses the default thread count,
/// `Some(1)` forces a serial run.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub m: usize,
    pub n: usize,
    pub r_max: u32,
    /// Weighted-mass bound for the monomial sweep.
    pub norm_bound: i64,
    pub jobs: Option<usize>,
    pub seed: u64,
}

impl SweepConfig {
    pub fn new(m: usize, n: usize, r_max: u32) -> Self {
        SweepConfig {
            m,
            n,
            r_max,
            norm_bound: 4,
            jobs: None,
            seed: DEFAULT_SEED,
        }
    }

    pub fn with_norm_bound(mut self, bound: i64) -> Self {
        self.norm_bound = bound;
        self
    }

    pub fn with_jobs(mut self, jobs: Option<usize>) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

/// The available sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    KeyLemma,
    Theorem42,
    Prop52,
    Prop53,
    Prop66,
    QsRelations,
    DividedPowers,
    Triangular,
    Monomial,
    Combinatorics,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::KeyLemma,
        Suite::Theorem42,
        Suite::Prop52,
        Suite::Prop53,
        Suite::Prop66,
        Suite::QsRelations,
        Suite::DividedPowers,
        Suite::Triangular,
        Suite::Monomial,
        Suite::Combinatorics,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::KeyLemma => "key-lemma",
            Suite::Theorem42 => "theorem42",
            Suite::Prop52 => "prop52",
            Suite::Prop53 => "prop53",
            Suite::Prop66 => "prop66",
            Suite::QsRelations => "qs-relations",
            Suite::DividedPowers => "divided-powers",
            Suite::Triangular => "triangular",
            Suite::Monomial => "monomial",
            Suite::Combinatorics => "combinatorics",
        }
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

pub fn run_suite(suite: Suite, cfg: &SweepConfig) -> VerificationReport {
    match suite {
        Suite::KeyLemma => key_lemma_sweep(cfg),
        Suite::Theorem42 => theorem42_sweep(cfg),
        Suite::Prop52 => normalised_sweep(cfg, false),
        Suite::Prop53 => normalised_sweep(cfg, true),
        Suite::Prop66 => prop66_sweep(cfg),
        Suite::QsRelations => qs_relations_sweep(cfg),
        Suite::DividedPowers => divided_powers_sweep(cfg),
        Suite::Triangular => triangular_sweep(cfg),
        Suite::Monomial => monomial_sweep(cfg),
        Suite::Combinatorics => combinatorics_sweep(cfg),
    }
}

fn run_parallel<I, F>(cfg: &SweepConfig, items: Vec<I>, f: F) -> Vec<Option<Failure>>
where
    I: Send + Sync,
    F: Fn(&I) -> Option<Failure> + Send + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.unwrap_or(0))
        .build()
        .expect("thread pool");
    pool.install(|| items.par_iter().map(|item| f(item)).collect())
}

fn schur_json(x: &SchurElement) -> serde_json::Value {
    serde_json::to_value(x).expect("serializable")
}

fn map_to_schur(
    m: usize,
    n: usize,
    r: u32,
    map: &BTreeMap<SuperMatrix, LaurentPoly>,
) -> SchurElement {
    let mut out = SchurElement::zero(m, n, r, SchurBasis::N);
    for (a, c) in map {
        out.add_term(a.clone(), c);
    }
    out
}

fn formal_json(x: &FormalCoord) -> serde_json::Value {
    serde_json::to_value(x).expect("serializable")
}

/// Oracle value of `N_{A'} N_{X'}` as an N-basis element; `X` outside
/// `M(m|n,r)` indexes the zero element.
fn oracle_norm_product(
    a: &SuperMatrix,
    x: Result<SuperMatrix, crate::weyl::WeylError>,
    r: u32,
) -> SchurElement {
    let (m, n) = (a.m, a.n);
    match x {
        Err(_) => SchurElement::zero(m, n, r, SchurBasis::N),
        Ok(x) => {
            let prod = compose(&norm_endo(a), &norm_endo(&x), ApplyOrder::EFirst).unwrap();
            map_to_schur(m, n, r, &expand_in_norm_basis(&prod).unwrap())
        }
    }
}

fn key_lemma_sweep(cfg: &SweepConfig) -> VerificationReport {
    let mut items = Vec::new();
    for r in 0..=cfg.r_max {
        for a in enumerate_matrices(cfg.m, cfg.n, r, MatrixFamily::All) {
            for h in 1..(cfg.m + cfg.n) {
                for dir in [KeyDir::B, KeyDir::C] {
                    items.push((r, a.clone(), h, dir));
                }
            }
        }
    }
    let results = run_parallel(cfg, items, |(r, a, h, dir)| {
        let got = mul_key_n(a, *h, *dir).unwrap();
        let kind = match dir {
            KeyDir::B => SpecialKind::B,
            KeyDir::C => SpecialKind::C,
        };
        let expect = oracle_norm_product(a, special_matrix(kind, *h, &a.ro(), 0), *r);
        if got == expect {
            None
        } else {
            Some(Failure {
                instance: format!("r={r} A={:?} h={h} dir={dir:?}", a.entries),
                left: schur_json(&got),
                right: schur_json(&expect),
            })
        }
    });
    VerificationReport::collect(Suite::KeyLemma.name(), cfg, results)
}

/// The induction-chain route: iterate the key product and divide by the
/// bracket integer at each step.
fn chain_norm_product(a: &SuperMatrix, h: usize, p: u32, dir: UlDir) -> SchurElement {
    let (m, n, r) = (a.m, a.n, a.total());
    let kind = match dir {
        UlDir::U => SpecialKind::U,
        UlDir::L => SpecialKind::L,
    };
    if special_matrix(kind, h, &a.ro(), p).is_err() {
        return SchurElement::zero(m, n, r, SchurBasis::N);
    }
    if p == 0 {
        return SchurElement::single(a.clone(), r, SchurBasis::N);
    }
    let key = match dir {
        UlDir::U => KeyDir::B,
        UlDir::L => KeyDir::C,
    };
    let bracket_row = match dir {
        UlDir::U => h,
        UlDir::L => h + 1,
    };
    let sign = VarSign::for_index(bracket_row, m);
    let mut acc = mul_key_n(a, h, key).unwrap();
    for t in 2..=p {
        let mut next = SchurElement::zero(m, n, r, SchurBasis::N);
        for (x, c) in acc.terms() {
            next = next.add(&mul_key_n(x, h, key).unwrap().scale(c)).unwrap();
        }
        acc = next
            .divide_exact_all(&quantum_int(t, IntVariant::BracketQ, sign))
            .unwrap();
    }
    acc
}

fn theorem42_sweep(cfg: &SweepConfig) -> VerificationReport {
    let mut items = Vec::new();
    for r in 0..=cfg.r_max {
        for a in enumerate_matrices(cfg.m, cfg.n, r, MatrixFamily::All) {
            for h in 1..(cfg.m + cfg.n) {
                for p in 0..=3u32 {
                    for dir in [UlDir::U, UlDir::L] {
                        items.push((r, a.clone(), h, p, dir));
                    }
                }
            }
        }
    }
    let results = run_parallel(cfg, items, |(r, a, h, p, dir)| {
        let got = mul_n_ulp(a, *h, *p, *dir).unwrap();
        let kind = match dir {
            UlDir::U => SpecialKind::U,
            UlDir::L => SpecialKind::L,
        };
        let oracle = oracle_norm_product(a, special_matrix(kind, *h, &a.ro(), *p), *r);
        if got != oracle {
            return Some(Failure {
                instance: format!("r={r} A={:?} h={h} p={p} dir={dir:?} vs oracle", a.entries),
                left: schur_json(&got),
                right: schur_json(&oracle),
            });
        }
        let chain = chain_norm_product(a, *h, *p, *dir);
        if got != chain {
            return Some(Failure {
                instance: format!("r={r} A={:?} h={h} p={p} dir={dir:?} vs chain", a.entries),
                left: schur_json(&got),
                right: schur_json(&chain),
            });
        }
        None
    });
    VerificationReport::collect(Suite::Theorem42.name(), cfg, results)
}

/// Shared sweep for the normalised product formulas. `odd_only` selects the
/// `h = m` (odd generator) instances, otherwise `h != m`.
fn normalised_sweep(cfg: &SweepConfig, odd_only: bool) -> VerificationReport {
    let suite = if odd_only { Suite::Prop53 } else { Suite::Prop52 };
    let mut items = Vec::new();
    for r in 0..=cfg.r_max {
        for a in enumerate_matrices(cfg.m, cfg.n, r, MatrixFamily::All) {
            for h in 1..(cfg.m + cfg.n) {
                if (h == cfg.m) != odd_only {
                    continue;
                }
                let p_range: Vec<u32> = if odd_only { vec![1, 2] } else { vec![0, 1, 2, 3] };
                for p in p_range {
                    for dir in [UlDir::U, UlDir::L] {
                        items.push((r, a.clone(), h, p, dir));
                    }
                }
            }
        }
    }
    let results = run_parallel(cfg, items, |(r, a, h, p, dir)| {
        let xi = mul_xi_ulp(a, *h, *p, *dir).unwrap();
        let kind = match dir {
            UlDir::U => SpecialKind::U,
            UlDir::L => SpecialKind::L,
        };
        let factor = special_matrix(kind, *h, &a.ro(), *p);

        // (a) the v^{d}-rescaled norm-basis product
        let nn = mul_n_ulp(a, *h, *p, *dir).unwrap();
        let rescaled = match &factor {
            Err(_) => SchurElement::zero(a.m, a.n, *r, SchurBasis::Xi),
            Ok(factor) => {
                if *h == a.m && *p >= 2 {
                    SchurElement::zero(a.m, a.n, *r, SchurBasis::Xi)
                } else {
                    let d_a = matrix_stat(a, MatrixStat::DegreeD).unwrap();
                    let d_u = matrix_stat(factor, MatrixStat::DegreeD).unwrap();
                    let mut out = SchurElement::zero(a.m, a.n, *r, SchurBasis::Xi);
                    for (x, c) in nn.terms() {
                        let d_x = matrix_stat(x, MatrixStat::DegreeD).unwrap();
                        out.add_term(x.clone(), &c.mul_monomial(d_x - d_a - d_u));
                    }
                    out
                }
            }
        };
        if xi != rescaled {
            return Some(Failure {
                instance: format!(
                    "r={r} A={:?} h={h} p={p} dir={dir:?} vs rescaled norm product",
                    a.entries
                ),
                left: schur_json(&xi),
                right: schur_json(&rescaled),
            });
        }

        // (b) the oracle composition under the frozen convention
        let oracle_side = match &factor {
            Err(_) => Endomorphism::zero(a.m, a.n, *r as usize),
            Ok(factor) => xi_product_endo(factor, a, XI_CONVENTION).unwrap(),
        };
        let mut structured_endo = Endomorphism::zero(a.m, a.n, *r as usize);
        for (x, c) in xi.terms() {
            structured_endo = structured_endo.add(&xi_endo(x).scale(c));
        }
        if oracle_side != structured_endo {
            return Some(Failure {
                instance: format!(
                    "r={r} A={:?} h={h} p={p} dir={dir:?} vs oracle composition",
                    a.entries
                ),
                left: schur_json(&xi),
                right: serde_json::Value::String("oracle endomorphism mismatch".into()),
            });
        }
        None
    });
    VerificationReport::collect(suite.name(), cfg, results)
}

/// The r-level product of a raising/lowering generator with a `ξ`-element:
/// term-by-term almost-diagonal products.
fn xi_level_gen_product(gen: Gen, x: &SchurElement) -> SchurElement {
    let (h, dir) = match gen {
        Gen::E(h) => (h, UlDir::U),
        Gen::F(h) => (h, UlDir::L),
    };
    let mut out = SchurElement::zero(x.m, x.n, x.r, SchurBasis::Xi);
    for (b, c) in x.terms() {
        out = out
            .add(&mul_xi_ulp(b, h, 1, dir).unwrap().scale(c))
            .unwrap();
    }
    out
}

fn prop66_sweep(cfg: &SweepConfig) -> VerificationReport {
    let size = cfg.m + cfg.n;
    let mut j_grid: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..size {
        let mut next = Vec::new();
        for j in &j_grid {
            for v in [-1i64, 0, 1] {
                let mut jj = j.clone();
                jj.push(v);
                next.push(jj);
            }
        }
        j_grid = next;
    }
    let mut items = Vec::new();
    for a in enumerate_matrices(cfg.m, cfg.n, 3, MatrixFamily::ZeroDiag) {
        for j in &j_grid {
            for h in 1..size {
                for gen in [Gen::E(h), Gen::F(h)] {
                    items.push((a.clone(), j.clone(), gen));
                }
            }
        }
    }
    let results = run_parallel(cfg, items, |(a, j, gen)| {
        let formal = mul_gen_formal(*gen, &FormalCoord::basis(a.clone(), j.clone())).unwrap();
        for r in 0..=cfg.r_max {
            let via_formal = truncate(&formal, r).unwrap();
            let via_xi = xi_level_gen_product(*gen, &a_element(a, j, r).unwrap());
            if via_formal != via_xi {
                return Some(Failure {
                    instance: format!("A={:?} j={j:?} gen={gen:?} r={r}", a.entries),
                    left: schur_json(&via_formal),
                    right: schur_json(&via_xi),
                });
            }
        }
        None
    });
    VerificationReport::collect(Suite::Prop66.name(), cfg, results)
}

fn qs_relations_sweep(cfg: &SweepConfig) -> VerificationReport {
    let mut items = Vec::new();
    for rel in Relation::ALL {
        for (label, combo) in relation_instances(rel, cfg.m, cfg.n) {
            items.push((rel, label, combo));
        }
    }
    let results = run_parallel(cfg, items, |(rel, label, combo)| {
        let value = crate::ugl::eta(combo).unwrap();
        if value.is_zero() {
            None
        } else {
            Some(Failure {
                instance: format!("{} {label}", rel.name()),
                left: formal_json(&value),
                right: serde_json::json!(0),
            })
        }
    });
    VerificationReport::collect(Suite::QsRelations.name(), cfg, results)
}

fn divided_powers_sweep(cfg: &SweepConfig) -> VerificationReport {
    let (m, n) = (cfg.m, cfg.n);
    let size = m + n;
    let mut items: Vec<(Gen, u32)> = Vec::new();
    for h in 1..size {
        if h == m {
            items.push((Gen::E(h), 2));
            items.push((Gen::F(h), 2));
        } else {
            for k in 1..=4u32 {
                items.push((Gen::E(h), k));
                items.push((Gen::F(h), k));
            }
        }
    }
    let results = run_parallel(cfg, items, |(gen, k)| {
        let (h, row, col, var_index) = match gen {
            Gen::E(h) => (*h, *h, *h + 1, *h),
            Gen::F(h) => (*h, *h + 1, *h, *h + 1),
        };
        let mut acc = FormalCoord::unit(m, n);
        for _ in 0..*k {
            acc = mul_gen_formal(*gen, &acc).unwrap();
        }
        let expect = if h == m {
            FormalCoord::zero(m, n)
        } else {
            let mut mat = SuperMatrix::zero(m, n);
            mat.entries[row - 1][col - 1] = *k;
            let fact =
                quantum_factorial(*k, IntVariant::SymmetricV, VarSign::for_index(var_index, m));
            FormalCoord::basis(mat, vec![0; size]).scale_poly(&fact)
        };
        if acc == expect {
            None
        } else {
            Some(Failure {
                instance: format!("{gen:?}^{k}"),
                left: formal_json(&acc),
                right: formal_json(&expect),
            })
        }
    });
    VerificationReport::collect(Suite::DividedPowers.name(), cfg, results)
}

fn triangular_sweep(cfg: &SweepConfig) -> VerificationReport {
    let mut items = Vec::new();
    for r in 0..=cfg.r_max {
        for a in enumerate_matrices(cfg.m, cfg.n, r, MatrixFamily::All) {
            items.push((r, a));
        }
    }
    let results = run_parallel(cfg, items, |(r, a)| {
        let psi = psi_product(a, *r).unwrap();
        let abar = matrix_stat(a, MatrixStat::ABar).unwrap();
        let expect_lead = if abar % 2 == 0 {
            LaurentPoly::one()
        } else {
            -&LaurentPoly::one()
        };
        if psi.coeff(a) != expect_lead {
            return Some(Failure {
                instance: format!("r={r} A={:?} leading coefficient", a.entries),
                left: schur_json(&psi),
                right: serde_json::to_value(&expect_lead).unwrap(),
            });
        }
        for (b, _) in psi.terms() {
            if b == a {
                continue;
            }
            let below = bruhat_leq_matrix(b, a).unwrap_or(false);
            if !below {
                return Some(Failure {
                    instance: format!(
                        "r={r} A={:?}: term B={:?} is not strictly below",
                        a.entries, b.entries
                    ),
                    left: schur_json(&psi),
                    right: serde_json::json!("strictly Bruhat-lower terms"),
                });
            }
        }
        None
    });
    VerificationReport::collect(Suite::Triangular.name(), cfg, results)
}

fn monomial_sweep(cfg: &SweepConfig) -> VerificationReport {
    let (m, n) = (cfg.m, cfg.n);
    let size = m + n;
    // |A| <= ||A|| for every matrix, so the entry-sum bound below is safe
    let mut items = Vec::new();
    for a in enumerate_matrices(m, n, cfg.norm_bound.max(0) as u32, MatrixFamily::ZeroDiag) {
        if matrix_stat(&a, MatrixStat::Norm).unwrap() <= cfg.norm_bound {
            items.push(a);
        }
    }
    let results = run_parallel(cfg, items, |a| {
        let got = monomial_formal(a, &vec![0; size]).unwrap();
        // unit leading coefficient at (A, 0)
        if !got.coeff(a, &vec![0; size]).is_one() {
            return Some(Failure {
                instance: format!("A={:?} leading coefficient", a.entries),
                left: formal_json(&got),
                right: serde_json::json!(1),
            });
        }
        // every other key lies strictly below in the corner-sum order
        for ((b, j), _) in got.terms() {
            if b == a {
                if j.iter().any(|&x| x != 0) {
                    return Some(Failure {
                        instance: format!("A={:?}: unexpected torus twist on the leader", a.entries),
                        left: formal_json(&got),
                        right: serde_json::json!("single leading key"),
                    });
                }
                continue;
            }
            let strictly_below = preceq(b, a).unwrap() && b != a;
            if !strictly_below {
                return Some(Failure {
                    instance: format!(
                        "A={:?}: term B={:?} not strictly below",
                        a.entries, b.entries
                    ),
                    left: formal_json(&got),
                    right: serde_json::json!("strictly smaller terms"),
                });
            }
        }
        // the word route agrees with the coordinate route
        let via_word = monomial_image(a, &vec![0; size]).unwrap();
        if via_word != got {
            return Some(Failure {
                instance: format!("A={:?}: word route disagrees", a.entries),
                left: formal_json(&got),
                right: formal_json(&via_word),
            });
        }
        None
    });
    VerificationReport::collect(Suite::Monomial.name(), cfg, results)
}

fn combinatorics_sweep(cfg: &SweepConfig) -> VerificationReport {
    let (m, n) = (cfg.m, cfg.n);
    let mut results: Vec<Option<Failure>> = Vec::new();

    // word/matrix round trips, length formula, odd-inversion statistics,
    // and the tensor block-move identity
    let mut word_items = Vec::new();
    for r in 0..=cfg.r_max {
        for a in enumerate_matrices(m, n, r, MatrixFamily::All) {
            word_items.push((r, a));
        }
    }
    results.extend(run_parallel(cfg, word_items, |(r, a)| {
        let word = word_from_matrix(a);
        let d = Permutation::from_word(*r as usize, &word);
        if word.len() != d.length() || word.len() as u64 != expected_word_length(a) {
            return Some(Failure {
                instance: format!("r={r} A={:?} word length", a.entries),
                left: serde_json::json!(word.len()),
                right: serde_json::json!(expected_word_length(a)),
            });
        }
        let rho = a.ro();
        let lam = a.co();
        match matrix_from_triple(&rho, &d, &lam) {
            Ok(back) if back == *a => {}
            _ => {
                return Some(Failure {
                    instance: format!("r={r} A={:?} round trip", a.entries),
                    left: serde_json::json!(format!("{:?}", d.images())),
                    right: serde_json::json!("matrix_from_triple mismatch"),
                })
            }
        }
        let direct = dhat(&rho, &d).unwrap();
        let closed = dhat_closed(&rho, a);
        if direct != closed {
            return Some(Failure {
                instance: format!("r={r} A={:?} odd-inversion statistic", a.entries),
                left: serde_json::json!(direct),
                right: serde_json::json!(closed),
            });
        }
        // block-move consistency: v_ρ T_d = (-1)^{d̂} v^A
        let got = TensorVector::weight_vector(&rho).act_word(&word).unwrap();
        let expect = TensorVector::basis(m, n, a.column_reading_tuple())
            .scale(&sign_poly(direct as i64));
        if got != expect {
            return Some(Failure {
                instance: format!("r={r} A={:?} tensor block move", a.entries),
                left: serde_json::Value::String(format!("{got:?}")),
                right: serde_json::Value::String(format!("{expect:?}")),
            });
        }
        None
    }));

    // order chain: Bruhat < implies corner-sum < implies weighted-mass <
    let mats = enumerate_matrices(m, n, cfg.r_max, MatrixFamily::All);
    let mut pair_items = Vec::new();
    for a in &mats {
        for b in &mats {
            if a != b && a.ro() == b.ro() && a.co() == b.co() {
                pair_items.push((a.clone(), b.clone()));
            }
        }
    }
    results.extend(run_parallel(cfg, pair_items, |(a, b)| {
        if !bruhat_leq_matrix(a, b).unwrap() {
            return None;
        }
        let ap = a.zero_diag_part();
        let bp = b.zero_diag_part();
        let prec_ok = preceq(&ap, &bp).unwrap() && ap != bp;
        let norm_ok = matrix_stat(&ap, MatrixStat::Norm).unwrap()
            < matrix_stat(&bp, MatrixStat::Norm).unwrap();
        if prec_ok && norm_ok {
            None
        } else {
            Some(Failure {
                instance: format!("A={:?} < B={:?} order chain", a.entries, b.entries),
                left: serde_json::json!(prec_ok),
                right: serde_json::json!(norm_ok),
            })
        }
    }));

    // dimension counts: matrix enumeration vs independent brute force and
    // vs the double-coset count; norm family rank equals the dimension
    for r in 0..=cfg.r_max {
        let mats = enumerate_matrices(m, n, r, MatrixFamily::All);
        let brute = brute_force_matrix_count(m, n, r);
        if mats.len() != brute {
            results.push(Some(Failure {
                instance: format!("r={r} |M(m|n,r)| vs brute force"),
                left: serde_json::json!(mats.len()),
                right: serde_json::json!(brute),
            }));
        } else {
            results.push(None);
        }
        let mut triples = 0usize;
        for rho in enumerate_compositions(m, n, r) {
            for lam in enumerate_compositions(m, n, r) {
                triples += crate::weyl::super_double_reps(&rho, &lam).unwrap().len();
            }
        }
        results.push(if triples == mats.len() {
            None
        } else {
            Some(Failure {
                instance: format!("r={r} double-coset triples"),
                left: serde_json::json!(triples),
                right: serde_json::json!(mats.len()),
            })
        });
        let rank = norm_family_rank(m, n, r, &[2, 3]);
        results.push(if rank == mats.len() {
            None
        } else {
            Some(Failure {
                instance: format!("r={r} norm family rank"),
                left: serde_json::json!(rank),
                right: serde_json::json!(mats.len()),
            })
        });
        // triangular-expansion exactness on a seeded random combination
        let mut rng = StdRng::seed_from_u64(cfg.seed ^ r as u64);
        let mut combo = Endomorphism::zero(m, n, r as usize);
        let mut expect: BTreeMap<SuperMatrix, LaurentPoly> = BTreeMap::new();
        for a in &mats {
            if rng.gen_bool(0.5) {
                continue;
            }
            let c = LaurentPoly::term(rng.gen_range(-3i64..=3), rng.gen_range(-2i64..=2));
            if c.is_zero() {
                continue;
            }
            combo = combo.add(&norm_endo(a).scale(&c));
            expect.insert(a.clone(), c);
        }
        let got = expand_in_norm_basis(&combo).expect("combination expands");
        results.push(if got == expect {
            None
        } else {
            Some(Failure {
                instance: format!("r={r} random-combination expansion"),
                left: serde_json::json!(got.len()),
                right: serde_json::json!(expect.len()),
            })
        });
    }

    VerificationReport::collect(Suite::Combinatorics.name(), cfg, results)
}

/// Independent counting of `M(m|n,r)`: loop over all grids cell by cell
/// without the shared enumeration code.
fn brute_force_matrix_count(m: usize, n: usize, r: u32) -> usize {
    let size = m + n;
    let cells = size * size;
    fn rec(
        cell: usize,
        left: u32,
        cells: usize,
        size: usize,
        m: usize,
    ) -> usize {
        if cell == cells {
            return (left == 0) as usize;
        }
        let i = cell / size + 1;
        let j = cell % size + 1;
        let cross = (i <= m) != (j <= m);
        let cap = if cross { left.min(1) } else { left };
        let mut total = 0;
        for v in 0..=cap {
            total += rec(cell + 1, left - v, cells, size, m);
        }
        total
    }
    rec(0, r, cells, size, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_parse() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn report_counts_are_consistent() {
        let cfg = SweepConfig::new(1, 1, 2).with_jobs(Some(1));
        let report = run_suite(Suite::KeyLemma, &cfg);
        assert_eq!(report.passes + report.failures.len(), report.instances);
        assert!(report.all_passed(), "{:?}", report.failures.first());
        assert_eq!(report.schema, REPORT_SCHEMA);
    }

    #[test]
    fn report_json_round_trips() {
        let cfg = SweepConfig::new(1, 1, 1).with_jobs(Some(1));
        let report = run_suite(Suite::Combinatorics, &cfg);
        let text = serde_json::to_string(&report).unwrap();
        let back: VerificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back.instances, report.instances);
        assert_eq!(back.passes, report.passes);
        assert_eq!(back.suite, report.suite);
    }

    #[test]
    fn qs_relations_sweep_runs_small() {
        let cfg = SweepConfig::new(1, 1, 0).with_jobs(Some(1));
        let report = run_suite(Suite::QsRelations, &cfg);
        assert!(report.all_passed(), "{:?}", report.failures.first());
    }
}
