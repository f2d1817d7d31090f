//! The `fmzv` command line. Results go to the given writer, progress and
//! errors to stderr.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::arith::{fmt_rational, Rational};
use crate::double_shuffle::{
    dm_basis, eds_weight_space, expected_dim, verify_even_zeta, verify_formal_zagier, verify_level_one_identity, verify_zeta_222, zf_reduce,
};
use crate::error::{Error, Result};
use crate::goncharov::{derivation_d, gon_coproduct, partial_2r1_poly};
use crate::level::{c_ab, c_coeff, level_matrix, verify_binomial_identity, verify_c_lemma};
use crate::odd_model::{uf_basis, uf_kernel};
use crate::word::{deconcat, dual_coproduct, parse_poly, parse_word, Alphabet, NCPoly, Stuffle, Tensor2};

pub const SCHEMA_VERSION: u32 = 1;
const EDS_BUDGET: usize = 9;
const MATRIX_BUDGET: usize = 16;

#[derive(Parser, Debug)]
#[command(name = "fmzv", version, about = "Exact computations with formal multiple zeta values")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ProductOp {
    Shuffle,
    Stuffle,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CoproductOp {
    Gon,
    Dec,
    DualStuffle,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DerivationMode {
    #[value(name = "D")]
    D,
    Partial,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Zagier,
    Euler,
    LevelOne,
    CLemma,
    Binomial,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Shuffle or stuffle product of two polynomials.
    Product {
        #[arg(long, value_enum)]
        op: ProductOp,
        /// X, Y or S; guessed from the input when omitted.
        #[arg(long)]
        alphabet: Option<String>,
        left: String,
        right: String,
    },
    /// Goncharov coproduct, deconcatenation, or the coproduct dual to the stuffle product.
    Coproduct {
        #[arg(long, value_enum)]
        op: CoproductOp,
        word: String,
    },
    /// D_{2r+1} or ∂_{2r+1} of a polynomial over X.
    Derivation {
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = DerivationMode::D)]
        mode: DerivationMode,
        poly: String,
    },
    /// The matrix of ∂φ on weight N and level L.
    Matrix {
        #[arg(long = "N")]
        n: usize,
        #[arg(long)]
        level: usize,
        #[arg(long)]
        det: bool,
        #[arg(long = "two-adic")]
        two_adic: bool,
    },
    /// A basis of the double shuffle Lie algebra in one weight.
    Dm {
        #[arg(long)]
        weight: usize,
    },
    /// Dimensions of Z^f and U^f against 1/(1 − x² − x³).
    Dims {
        #[arg(long = "max-weight")]
        max_weight: usize,
    },
    /// Canonical form of a polynomial in Z^f.
    Reduce {
        #[arg(long)]
        weight: Option<usize>,
        poly: String,
    },
    /// Kernel of D_{<N} on U^f_N, or the dimension table of U^f.
    Oddmodel {
        #[arg(long)]
        kernel: bool,
        #[arg(long)]
        weight: Option<usize>,
        #[arg(long)]
        dims: bool,
        #[arg(long = "max-weight")]
        max_weight: Option<usize>,
    },
    /// The coefficients c_{a,b}^r.
    Coeffs {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Run one of the verification suites.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = std::result::Result<(), Failure>;

fn budget(default: usize) -> usize {
    std::env::var("FMZV_MAX_WEIGHT").ok().and_then(|v| v.parse().ok()).unwrap_or(default)
}

fn check_budget(n: usize, default: usize) -> Result<()> {
    let cap = budget(default);
    if n > cap {
        return Err(Error::InvalidArgument(format!("weight {n} exceeds the budget {cap}; raise FMZV_MAX_WEIGHT")));
    }
    Ok(())
}

fn guess_alphabet(text: &str) -> Alphabet {
    if text.contains('y') {
        Alphabet::Y
    } else if text.contains('s') {
        Alphabet::S
    } else {
        Alphabet::X
    }
}

fn document(command: &str, body: Value) -> Value {
    let mut doc = json!({"schema_version": SCHEMA_VERSION, "command": command});
    if let (Value::Object(d), Value::Object(b)) = (&mut doc, body) {
        d.extend(b);
    }
    doc
}

fn emit_json(out: &mut dyn Write, doc: &Value) -> CmdResult {
    writeln!(out, "{}", serde_json::to_string_pretty(doc).expect("serialisable"))?;
    Ok(())
}

fn emit_poly(out: &mut dyn Write, fmt: Format, command: &str, p: &NCPoly) -> CmdResult {
    match fmt {
        Format::Json => emit_json(out, &document(command, json!({"result": p.to_json()}))),
        _ => Ok(writeln!(out, "{p}")?),
    }
}

fn emit_tensor(out: &mut dyn Write, fmt: Format, command: &str, t: &Tensor2) -> CmdResult {
    match fmt {
        Format::Json => emit_json(out, &document(command, json!({"result": t.to_json()}))),
        _ => Ok(writeln!(out, "{t}")?),
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                eprint!("{e}");
            }
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(Failure::Verification) => 1,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    let fmt = cli.format;
    match &cli.command {
        Command::Product { op, alphabet, left, right } => {
            let a = match alphabet {
                Some(name) => Alphabet::from_name(name)?,
                None => guess_alphabet(&format!("{left} {right}")),
            };
            let (u, v) = (parse_poly(a, left)?, parse_poly(a, right)?);
            let p = match op {
                ProductOp::Shuffle => u.shuffle(&v),
                ProductOp::Stuffle => u.stuffle(&v),
            };
            emit_poly(out, fmt, "product", &p)
        }
        Command::Coproduct { op, word } => {
            let t = match op {
                CoproductOp::Gon => {
                    let w = parse_word(Alphabet::X, word)?;
                    check_budget(w.len(), MATRIX_BUDGET)?;
                    gon_coproduct(&w)
                }
                CoproductOp::Dec => {
                    let a = guess_alphabet(word);
                    deconcat(a, &parse_word(a, word)?)
                }
                CoproductOp::DualStuffle => dual_coproduct(Alphabet::Y, &parse_word(Alphabet::Y, word)?, &Stuffle),
            };
            emit_tensor(out, fmt, "coproduct", &t)
        }
        Command::Derivation { r, mode, poly } => {
            if *r == 0 {
                return Err(Failure::Usage("r must be positive".into()));
            }
            let p = parse_poly(Alphabet::X, poly)?;
            check_budget(p.max_weight().unwrap_or(0), MATRIX_BUDGET)?;
            let t = match mode {
                DerivationMode::D => derivation_d(&p, *r),
                DerivationMode::Partial => partial_2r1_poly(&p, *r),
            };
            emit_tensor(out, fmt, "derivation", &t)
        }
        Command::Matrix { n, level, det, two_adic } => cmd_matrix(out, fmt, *n, *level, *det, *two_adic),
        Command::Dm { weight } => {
            check_budget(*weight, EDS_BUDGET)?;
            eprintln!("solving the dm conditions in weight {weight}");
            let basis = dm_basis(*weight);
            match fmt {
                Format::Json => {
                    let elems: Vec<Value> = basis.iter().map(|p| p.to_json()).collect();
                    emit_json(out, &document("dm", json!({"weight": weight, "dimension": basis.len(), "basis": elems})))
                }
                _ => {
                    writeln!(out, "dim dm_{weight} = {}", basis.len())?;
                    for p in &basis {
                        writeln!(out, "{p}")?;
                    }
                    Ok(())
                }
            }
        }
        Command::Dims { max_weight } => cmd_dims(out, fmt, *max_weight),
        Command::Reduce { weight, poly } => {
            let p = parse_poly(Alphabet::X, poly)?;
            let n = match weight {
                Some(n) => *n,
                None => p.homogeneous_weight().ok_or_else(|| Failure::Usage("inhomogeneous input; pass --weight".into()))?,
            };
            check_budget(n, EDS_BUDGET)?;
            eprintln!("reducing modulo the double shuffle relations in weight {n}");
            let r = zf_reduce(&p, n)?;
            emit_poly(out, fmt, "reduce", &r)
        }
        Command::Oddmodel { kernel, weight, dims, max_weight } => {
            if *dims || max_weight.is_some() {
                let max = max_weight.unwrap_or(MATRIX_BUDGET);
                check_budget(max, MATRIX_BUDGET)?;
                let rows: Vec<(usize, usize, usize)> = (0..=max).map(|n| (n, uf_basis(n).len(), expected_dim(n))).collect();
                return match fmt {
                    Format::Json => {
                        let t: Vec<Value> = rows.iter().map(|(n, d, e)| json!({"weight": n, "dim": d, "expected": e})).collect();
                        emit_json(out, &document("oddmodel", json!({"dims": t})))
                    }
                    _ => {
                        writeln!(out, "weight,dim_Uf,expected")?;
                        for (n, d, e) in rows {
                            writeln!(out, "{n},{d},{e}")?;
                        }
                        Ok(())
                    }
                };
            }
            let Some(n) = weight else {
                return Err(Failure::Usage("oddmodel needs --kernel --weight N or --dims".into()));
            };
            if !kernel {
                return Err(Failure::Usage("oddmodel needs --kernel or --dims".into()));
            }
            check_budget(*n, MATRIX_BUDGET)?;
            let k = uf_kernel(*n);
            match fmt {
                Format::Json => {
                    let elems: Vec<Value> = k.iter().map(|e| e.to_poly().to_json()).collect();
                    emit_json(out, &document("oddmodel", json!({"weight": n, "kernel": elems})))
                }
                _ => {
                    writeln!(out, "dim ker D_<{n} = {}", k.len())?;
                    for e in &k {
                        writeln!(out, "{e}")?;
                    }
                    Ok(())
                }
            }
        }
        Command::Coeffs { a, b, r } => {
            let values: Vec<(usize, Rational)> = match r {
                Some(r) => vec![(*r, c_coeff(*a, *b, *r))],
                None => (1..=a + b + 1).map(|r| (r, c_coeff(*a, *b, r))).collect(),
            };
            match fmt {
                Format::Json => {
                    let v: Vec<Value> = values.iter().map(|(r, c)| json!({"r": r, "c": fmt_rational(c)})).collect();
                    emit_json(out, &document("coeffs", json!({"a": a, "b": b, "c_ab": fmt_rational(&c_ab(*a, *b)), "values": v})))
                }
                _ if r.is_some() => Ok(writeln!(out, "{}", fmt_rational(&values[0].1))?),
                _ => {
                    for (r, c) in values {
                        writeln!(out, "{r},{}", fmt_rational(&c))?;
                    }
                    Ok(())
                }
            }
        }
        Command::Verify { suite } => cmd_verify(out, fmt, *suite),
    }
}

fn cmd_matrix(out: &mut dyn Write, fmt: Format, n: usize, level: usize, det: bool, two_adic: bool) -> CmdResult {
    check_budget(n, MATRIX_BUDGET)?;
    let lm = level_matrix(n, level)?;
    let d = if det { Some(lm.matrix.det_exact()?) } else { None };
    let cert = if two_adic { Some(lm.matrix.two_adic_certificate()?) } else { None };
    match fmt {
        Format::Json => {
            let mut body = json!({
                "N": n,
                "level": level,
                "rows": lm.rows.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                "cols": lm.cols.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                "matrix": lm.matrix.to_json(),
            });
            if let Some(d) = &d {
                body["det"] = json!(fmt_rational(d));
            }
            if let Some(c) = cert {
                body["two_adic_certificate"] = json!(c);
            }
            emit_json(out, &document("matrix", body))
        }
        _ => {
            write!(out, "{}", lm.matrix.to_csv())?;
            if let Some(d) = d {
                writeln!(out, "det = {}", fmt_rational(&d))?;
            }
            if let Some(c) = cert {
                writeln!(out, "two-adic certificate = {c}")?;
            }
            Ok(())
        }
    }
}

fn cmd_dims(out: &mut dyn Write, fmt: Format, max: usize) -> CmdResult {
    check_budget(max, EDS_BUDGET)?;
    let mut rows = Vec::new();
    for n in 0..=max {
        eprintln!("weight {n}");
        rows.push((n, eds_weight_space(n).quotient_dim(), uf_basis(n).len(), expected_dim(n)));
    }
    match fmt {
        Format::Json => {
            let t: Vec<Value> =
                rows.iter().map(|(n, z, u, e)| json!({"weight": n, "zf": z, "uf": u, "expected": e})).collect();
            emit_json(out, &document("dims", json!({"dims": t})))
        }
        _ => {
            writeln!(out, "weight,dim_Zf,dim_Uf,expected")?;
            for (n, z, u, e) in rows {
                writeln!(out, "{n},{z},{u},{e}")?;
            }
            Ok(())
        }
    }
}

/// The checks of one suite, as (label, outcome).
fn suite_checks(suite: Suite) -> Result<Vec<(String, bool)>> {
    let cap = budget(EDS_BUDGET);
    let mut checks = Vec::new();
    match suite {
        Suite::Zagier => {
            for a in 0..=cap {
                for b in 0..=cap {
                    if 2 * a + 2 * b + 3 <= cap {
                        eprintln!("zagier ({a},{b})");
                        checks.push((format!("zagier a={a} b={b}"), verify_formal_zagier(a, b)?));
                    }
                }
            }
        }
        Suite::Euler => {
            let rel = parse_poly(Alphabet::X, "x0x1x1 - x0x0x1")?;
            checks.push(("zeta(2,1) = zeta(3)".into(), zf_reduce(&rel, 3)?.is_zero()));
            for n in (2..).take_while(|n| 2 * n <= cap) {
                eprintln!("zeta({})", 2 * n);
                checks.push((format!("zeta({}) = b_{n} zeta(2)^{n}", 2 * n), verify_even_zeta(n)?));
            }
            for n in (1..).take_while(|n| 2 * n <= cap) {
                checks.push((format!("zeta({{2}}^{n}) = 6^{n}/({})! zeta(2)^{n}", 2 * n + 1), verify_zeta_222(n)?));
            }
        }
        Suite::LevelOne => {
            for n in (1..).take_while(|n| 2 * n + 1 <= cap) {
                eprintln!("level one, n = {n}");
                checks.push((format!("level-one identity n={n}"), verify_level_one_identity(n)?));
            }
        }
        Suite::CLemma => checks.push(("c_{a,b} lemma, a,b <= 10".into(), verify_c_lemma(10))),
        Suite::Binomial => checks.push(("binomial identity, a,b <= 8".into(), verify_binomial_identity(8))),
    }
    Ok(checks)
}

fn cmd_verify(out: &mut dyn Write, fmt: Format, suite: Suite) -> CmdResult {
    let checks = suite_checks(suite)?;
    let ok = checks.iter().all(|(_, b)| *b);
    match fmt {
        Format::Json => {
            let c: Vec<Value> = checks.iter().map(|(l, b)| json!({"check": l, "pass": b})).collect();
            emit_json(out, &document("verify", json!({"suite": format!("{suite:?}"), "pass": ok, "checks": c})))?;
        }
        _ => {
            for (label, pass) in &checks {
                writeln!(out, "{} {label}", if *pass { "ok  " } else { "FAIL" })?;
            }
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
