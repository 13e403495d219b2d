//! Command-line frontend for the q-Schur superalgebra kernel.
//!
//! Machine-readable JSON goes to stdout; human summaries go to stderr.
//! Exit codes: 0 all checks pass, 1 verification or cross-check failure,
//! 2 usage error or malformed input.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use qss_core::oracle::{compose, expand_in_norm_basis, xi_endo, Endomorphism, XI_CONVENTION};
use qss_core::schur::{a_element, mul_xi_ulp, o_element, SchurBasis, SchurElement, UlDir};
use qss_core::ugl::{eta, parse_word, WordCombo};
use qss_core::verify::{run_suite, Suite, SweepConfig, DEFAULT_SEED};
use qss_core::weyl::{
    enumerate_matrices, signed_dot, word_from_grid, Composition, MatrixFamily, Permutation,
    SuperMatrix,
};

#[derive(Parser)]
#[command(
    name = "qss",
    about = "Exact computations in q-Schur superalgebras and U(gl(m|n))",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the matrix sets M(m|n,r) and their zero-diagonal,
    /// upper and lower families.
    Enumerate(EnumerateArgs),
    /// Reduced word of the distinguished representative of a matrix.
    Word(WordArgs),
    /// Multiply two elements, by structured formulas or by the oracle.
    Mul(MulArgs),
    /// Evaluate a generator word in r-independent coordinates.
    Eta(EtaArgs),
    /// Run a verification sweep and emit a report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    All,
    ZeroDiag,
    Upper,
    Lower,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: u32,
    #[arg(long, value_enum, default_value = "all")]
    family: FamilyArg,
    /// Print only the cardinality.
    #[arg(long)]
    count: bool,
    /// Emit JSON (the default; kept for explicitness).
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct WordArgs {
    /// Matrix JSON (inline or a file path): {"m","n","entries"} or
    /// {"entries": [[...]]} for a general natural-number matrix.
    #[arg(long)]
    matrix: String,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Structured,
    Oracle,
}

#[derive(Args)]
struct MulArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: u32,
    /// Left factor: a generator descriptor or an element (inline JSON or
    /// a file path).
    #[arg(long)]
    left: String,
    /// Right factor: same formats as --left.
    #[arg(long)]
    right: String,
    #[arg(long, value_enum, default_value = "structured")]
    engine: EngineArg,
    /// Run both engines and compare.
    #[arg(long)]
    cross_check: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EtaArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    /// Whitespace-separated tokens, e.g. "E1 F2 K1^-3".
    #[arg(long, conflicts_with = "combo")]
    word: Option<String>,
    /// A combination {"terms":[{"coeff":...,"word":["E1","F2"]}]}.
    #[arg(long)]
    combo: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name: key-lemma, theorem42, prop52, prop53, prop66,
    /// qs-relations, divided-powers, triangular, monomial, combinatorics.
    suite: String,
    #[arg(long, default_value_t = 1)]
    m: usize,
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[arg(long, default_value_t = 3)]
    r_max: u32,
    /// Weighted-mass bound for the monomial sweep.
    #[arg(long, default_value_t = 4)]
    norm_bound: i64,
    /// Worker threads; defaults to QSS_JOBS or all cores.
    #[arg(long)]
    jobs: Option<usize>,
    /// Seed for the randomized spot checks.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Word(args) => cmd_word(args),
        Command::Mul(args) => cmd_mul(args),
        Command::Eta(args) => cmd_eta(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

/// Inline JSON if the value starts with `{` or `[`; otherwise a file path
/// (optionally prefixed with `@`).
fn read_value(raw: &str) -> Result<serde_json::Value, String> {
    let text = if raw.trim_start().starts_with(['{', '[']) {
        raw.to_string()
    } else {
        let path = raw.strip_prefix('@').unwrap_or(raw);
        fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?
    };
    serde_json::from_str(&text).map_err(|e| format!("malformed JSON: {e}"))
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<ExitCode, String> {
    let family = match args.family {
        FamilyArg::All => MatrixFamily::All,
        FamilyArg::ZeroDiag => MatrixFamily::ZeroDiag,
        FamilyArg::Upper => MatrixFamily::Upper,
        FamilyArg::Lower => MatrixFamily::Lower,
    };
    let mats = enumerate_matrices(args.m, args.n, args.r, family);
    if args.count {
        println!("{}", mats.len());
    } else {
        println!(
            "{}",
            serde_json::to_string(&mats).map_err(|e| e.to_string())?
        );
    }
    eprintln!(
        "enumerated {} matrices for m={} n={} r={}",
        mats.len(),
        args.m,
        args.n,
        args.r
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_word(args: WordArgs) -> Result<ExitCode, String> {
    let value = read_value(&args.matrix)?;
    let entries: Vec<Vec<u32>> = serde_json::from_value(
        value
            .get("entries")
            .cloned()
            .ok_or_else(|| "matrix JSON needs an \"entries\" field".to_string())?,
    )
    .map_err(|e| format!("malformed entries: {e}"))?;
    let size = entries.len();
    if entries.iter().any(|row| row.len() != size) {
        return Err("matrix must be square".into());
    }
    let r: u32 = entries.iter().flatten().sum();
    let word = word_from_grid(&entries);
    let perm = Permutation::from_word(r as usize, &word);
    println!(
        "{}",
        json!({
            "word": word,
            "permutation": perm.images(),
            "length": word.len(),
        })
    );
    eprintln!("word of length {} for an r={} matrix", word.len(), r);
    Ok(ExitCode::SUCCESS)
}

/// Element descriptors accepted by `mul`.
enum ElementSpec {
    O(Vec<i64>),
    E(usize),
    F(usize),
    U {
        h: usize,
        p: u32,
        lam: Option<Vec<u32>>,
    },
    L {
        h: usize,
        p: u32,
        lam: Option<Vec<u32>>,
    },
    Xi(SuperMatrix),
    Element(SchurElement),
}

fn parse_element(value: serde_json::Value, m: usize, n: usize) -> Result<ElementSpec, String> {
    if value.get("basis").is_some() {
        let x: SchurElement = serde_json::from_value(value).map_err(|e| e.to_string())?;
        return Ok(ElementSpec::Element(x));
    }
    let kind = value
        .get("kind")
        .and_then(|k| k.as_str())
        .ok_or_else(|| "element needs a \"kind\" or \"basis\" field".to_string())?;
    let get_h = || -> Result<usize, String> {
        value
            .get("h")
            .and_then(|h| h.as_u64())
            .map(|h| h as usize)
            .ok_or_else(|| "generator needs an \"h\" index".to_string())
    };
    match kind {
        "o" => {
            let j: Vec<i64> = serde_json::from_value(
                value
                    .get("j")
                    .cloned()
                    .ok_or_else(|| "torus element needs \"j\"".to_string())?,
            )
            .map_err(|e| e.to_string())?;
            if j.len() != m + n {
                return Err("torus exponent vector has wrong length".into());
            }
            Ok(ElementSpec::O(j))
        }
        "e" => Ok(ElementSpec::E(get_h()?)),
        "f" => Ok(ElementSpec::F(get_h()?)),
        "u" | "l" => {
            let h = get_h()?;
            let p = value.get("p").and_then(|p| p.as_u64()).unwrap_or(1) as u32;
            let lam: Option<Vec<u32>> = match value.get("lam") {
                Some(v) => Some(serde_json::from_value(v.clone()).map_err(|e| e.to_string())?),
                None => None,
            };
            if kind == "u" {
                Ok(ElementSpec::U { h, p, lam })
            } else {
                Ok(ElementSpec::L { h, p, lam })
            }
        }
        "xi" => {
            let matrix: SuperMatrix = serde_json::from_value(
                value
                    .get("matrix")
                    .cloned()
                    .ok_or_else(|| "xi element needs \"matrix\"".to_string())?,
            )
            .map_err(|e| e.to_string())?;
            SuperMatrix::new(matrix.m, matrix.n, matrix.entries.clone())
                .map_err(|e| e.to_string())?;
            Ok(ElementSpec::Xi(matrix))
        }
        other => Err(format!("unknown element kind {other:?}")),
    }
}

fn spec_to_element(spec: &ElementSpec, m: usize, n: usize, r: u32) -> Result<SchurElement, String> {
    match spec {
        ElementSpec::O(j) => o_element(m, n, j, r).map_err(|e| e.to_string()),
        ElementSpec::E(h) => a_element(&SuperMatrix::unit(m, n, *h, *h + 1), &vec![0; m + n], r)
            .map_err(|e| e.to_string()),
        ElementSpec::F(h) => a_element(&SuperMatrix::unit(m, n, *h + 1, *h), &vec![0; m + n], r)
            .map_err(|e| e.to_string()),
        ElementSpec::U { h, p, lam } | ElementSpec::L { h, p, lam } => {
            let lam = lam
                .clone()
                .ok_or_else(|| "oracle realisation of u/l needs \"lam\"".to_string())?;
            let lam = Composition::new(m, n, lam).map_err(|e| e.to_string())?;
            let kind = match spec {
                ElementSpec::U { .. } => qss_core::weyl::SpecialKind::U,
                _ => qss_core::weyl::SpecialKind::L,
            };
            let mat =
                qss_core::weyl::special_matrix(kind, *h, &lam, *p).map_err(|e| e.to_string())?;
            Ok(SchurElement::single(mat, r, SchurBasis::Xi))
        }
        ElementSpec::Xi(mat) => {
            if mat.total() != r {
                return Err("xi matrix entry sum disagrees with --r".into());
            }
            Ok(SchurElement::single(mat.clone(), r, SchurBasis::Xi))
        }
        ElementSpec::Element(x) => {
            if (x.m, x.n, x.r) != (m, n, r) {
                return Err("element dimensions disagree with flags".into());
            }
            Ok(x.to_xi())
        }
    }
}

/// Structured product: the left factor must be a generator-type element.
fn structured_product(
    left: &ElementSpec,
    right: &SchurElement,
    m: usize,
    n: usize,
    r: u32,
) -> Result<SchurElement, String> {
    let mut out = SchurElement::zero(m, n, r, SchurBasis::Xi);
    match left {
        ElementSpec::O(j) => {
            for (b, c) in right.terms() {
                let dot = signed_dot(&b.ro().as_ivec(), j, m).map_err(|e| e.to_string())?;
                out.add_term(b.clone(), &c.mul_monomial(dot));
            }
            Ok(out)
        }
        ElementSpec::E(h) | ElementSpec::F(h) => {
            let dir = if matches!(left, ElementSpec::E(_)) {
                UlDir::U
            } else {
                UlDir::L
            };
            for (b, c) in right.terms() {
                let prod = mul_xi_ulp(b, *h, 1, dir).map_err(|e| e.to_string())?;
                out = out.add(&prod.scale(c)).map_err(|e| e.to_string())?;
            }
            Ok(out)
        }
        ElementSpec::U { h, p, lam } | ElementSpec::L { h, p, lam } => {
            let dir = if matches!(left, ElementSpec::U { .. }) {
                UlDir::U
            } else {
                UlDir::L
            };
            for (b, c) in right.terms() {
                if let Some(lam) = lam {
                    if &b.ro().parts != lam {
                        continue;
                    }
                }
                let prod = mul_xi_ulp(b, *h, *p, dir).map_err(|e| e.to_string())?;
                out = out.add(&prod.scale(c)).map_err(|e| e.to_string())?;
            }
            Ok(out)
        }
        _ => Err("structured engine needs a generator-type left factor \
                  (kinds o, e, f, u, l)"
            .into()),
    }
}

/// Oracle product: realise both sides as endomorphisms, compose under the
/// frozen convention, and expand back into `ξ`-coordinates.
fn oracle_product(
    left: &SchurElement,
    right: &SchurElement,
    m: usize,
    n: usize,
    r: u32,
) -> Result<SchurElement, String> {
    let realise = |x: &SchurElement| -> Endomorphism {
        let mut out = Endomorphism::zero(m, n, r as usize);
        for (a, c) in x.terms() {
            out = out.add(&xi_endo(a).scale(c));
        }
        out
    };
    let composed = compose(&realise(left), &realise(right), XI_CONVENTION.order)
        .map_err(|e| e.to_string())?;
    let coords = expand_in_norm_basis(&composed).map_err(|e| e.to_string())?;
    let mut out_n = SchurElement::zero(m, n, r, SchurBasis::N);
    for (a, c) in coords {
        out_n.add_term(a, &c);
    }
    Ok(out_n.to_xi())
}

fn cmd_mul(args: MulArgs) -> Result<ExitCode, String> {
    let (m, n, r) = (args.m, args.n, args.r);
    let left_spec = parse_element(read_value(&args.left)?, m, n)?;
    let right_spec = parse_element(read_value(&args.right)?, m, n)?;
    let right = spec_to_element(&right_spec, m, n, r)?;

    let structured =
        || -> Result<SchurElement, String> { structured_product(&left_spec, &right, m, n, r) };
    let oracle = || -> Result<SchurElement, String> {
        let left = spec_to_element(&left_spec, m, n, r)?;
        oracle_product(&left, &right, m, n, r)
    };

    if args.cross_check {
        let s = structured()?;
        let o = oracle()?;
        if s == o {
            println!("{}", serde_json::to_string(&s).map_err(|e| e.to_string())?);
            eprintln!("cross-check passed: engines agree on {} terms", s.len());
            Ok(ExitCode::SUCCESS)
        } else {
            println!(
                "{}",
                json!({
                    "match": false,
                    "structured": s,
                    "oracle": o,
                })
            );
            eprintln!("cross-check FAILED: engines disagree");
            Ok(ExitCode::from(1))
        }
    } else {
        let result = match args.engine {
            EngineArg::Structured => structured()?,
            EngineArg::Oracle => oracle()?,
        };
        println!(
            "{}",
            serde_json::to_string(&result).map_err(|e| e.to_string())?
        );
        eprintln!("product has {} terms", result.len());
        Ok(ExitCode::SUCCESS)
    }
}

fn cmd_eta(args: EtaArgs) -> Result<ExitCode, String> {
    let (m, n) = (args.m, args.n);
    let combo: WordCombo = if let Some(word_text) = &args.word {
        parse_word(m, n, word_text).map_err(|e| e.to_string())?
    } else if let Some(combo_text) = &args.combo {
        let value = read_value(combo_text)?;
        let terms = value
            .get("terms")
            .and_then(|t| t.as_array())
            .ok_or_else(|| "combo JSON needs \"terms\"".to_string())?;
        let mut combo = WordCombo::zero(m, n);
        for term in terms {
            let coeff: qss_core::qpoly::RatFunc = serde_json::from_value(
                term.get("coeff")
                    .cloned()
                    .unwrap_or_else(|| json!({"v": {"0": 1}})),
            )
            .map_err(|e| e.to_string())?;
            let tokens = term
                .get("word")
                .and_then(|w| w.as_array())
                .ok_or_else(|| "combo term needs \"word\"".to_string())?;
            let word_text = tokens
                .iter()
                .map(|t| t.as_str().unwrap_or_default())
                .collect::<Vec<_>>()
                .join(" ");
            let parsed = parse_word(m, n, &word_text).map_err(|e| e.to_string())?;
            combo = combo.add(&parsed.scale(&coeff));
        }
        combo
    } else {
        return Err("eta needs --word or --combo".into());
    };
    let value = eta(&combo).map_err(|e| e.to_string())?;
    println!(
        "{}",
        serde_json::to_string(&value).map_err(|e| e.to_string())?
    );
    eprintln!("image has {} terms", value.len());
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let suite: Suite = args.suite.parse()?;
    let jobs = args
        .jobs
        .or_else(|| std::env::var("QSS_JOBS").ok().and_then(|s| s.parse().ok()));
    let cfg = SweepConfig::new(args.m, args.n, args.r_max)
        .with_norm_bound(args.norm_bound)
        .with_jobs(jobs)
        .with_seed(args.seed.unwrap_or(DEFAULT_SEED));
    let report = run_suite(suite, &cfg);
    println!(
        "{}",
        serde_json::to_string(&report).map_err(|e| e.to_string())?
    );
    eprintln!("{}", report.summary());
    if report.all_passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}
