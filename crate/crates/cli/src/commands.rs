//! Subcommand implementations. Each returns a text rendering and a
//! structured (JSON) rendering of the same report.

use std::io::Read;

use clap::{Args, Subcommand, ValueEnum};
use freelnd::constants::{decode, enumerate_generators, eval_bracketed, rewrite_in_generators, t_sequence};
use freelnd::deriv::{exp, Derivation, DEFAULT_CAP};
use freelnd::ncalg::{NCPoly, Word};
use freelnd::oracle::{ak_basis, graded_kernel_basis};
use freelnd::verify::{self, Budget, CheckOutcome};
use serde::Serialize;
use thiserror::Error;

use crate::expr::{self, EvalError, ParseError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

impl From<freelnd::Error> for CliError {
    fn from(e: freelnd::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<EvalError> for CliError {
    fn from(e: EvalError) -> Self {
        CliError::Domain(e.to_string())
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Debug, Args)]
pub struct FArgs {
    /// f(X), a polynomial in X only; its degree is m
    #[arg(long = "f")]
    pub f: Option<String>,
    /// Expected degree of f; alone it selects f = X^m
    #[arg(long)]
    pub m: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression
    Eval {
        #[command(flatten)]
        fa: FArgs,
        /// Expression, or "-" to read stdin
        #[arg(long)]
        expr: String,
    },
    /// Apply the derivation X -> 0, Y -> f(X) n times
    Derive {
        #[command(flatten)]
        fa: FArgs,
        #[arg(long)]
        expr: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Apply the exponential of the derivation X -> 0, Y -> f(X)
    Expmap {
        #[command(flatten)]
        fa: FArgs,
        #[arg(long)]
        expr: String,
    },
    /// The sequence T_1 = [Y, X], T_(i+1) = box(T_i)
    Tseq {
        #[command(flatten)]
        fa: FArgs,
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// Free generators of the constants up to a weight
    Gens {
        #[command(flatten)]
        fa: FArgs,
        #[arg(long, default_value_t = 6)]
        weight_max: usize,
    },
    /// Bracketed generator with a given leading monomial
    Decode {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        word: String,
    },
    /// Write a constant as a polynomial in the free generators
    Rewrite {
        #[command(flatten)]
        fa: FArgs,
        #[arg(long)]
        expr: String,
        /// Generator table bound; defaults to the grade of the input
        #[arg(long)]
        weight_max: Option<usize>,
    },
    /// Basis of the constants of one weight, by exact linear algebra
    Kernel {
        #[command(flatten)]
        fa: FArgs,
        #[arg(long)]
        weight: usize,
    },
    /// Common constants of the derivations X -> 0, Y -> X^k, k <= m, and their X/Y switches
    Ak {
        #[arg(long)]
        weight: usize,
        /// Largest k in the family; defaults to max(weight, 6)
        #[arg(long)]
        m: Option<usize>,
    },
    /// Run the end-to-end checks under a weight budget
    Verify {
        #[arg(long, default_value_t = 12)]
        weight_max: usize,
        #[arg(long, default_value_t = 2019)]
        seed: u64,
        /// Randomized cases per property
        #[arg(long, default_value_t = 50)]
        n: usize,
    },
}

/// Echo of the inputs, in a fixed order.
#[derive(Debug, Default, Serialize)]
struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    f: Option<NCPoly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    expr: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    word: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    weight: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    weight_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
}

#[derive(Serialize)]
struct Report<'a, R: Serialize> {
    command: &'a str,
    params: &'a Params,
    result: R,
}

pub struct Output {
    pub text: String,
    pub structured: String,
    /// Nonzero when the command ran but reports a failure (`verify`).
    pub status: u8,
}

fn output<R: Serialize>(command: &str, params: &Params, result: R, text: String) -> Output {
    let structured = serde_json::to_string_pretty(&Report { command, params, result }).expect("serializable report");
    Output { text, structured, status: 0 }
}

fn parse_expr(src: &str) -> Result<expr::Expr> {
    let owned;
    let src = if src == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
        owned = buf;
        owned.trim_end()
    } else {
        src
    };
    expr::parse(src).map_err(|e: ParseError| CliError::Usage(format!("in expression: {e}")))
}

/// Resolves `--f`/`--m` to `(m, f)`.
fn resolve_f(fa: &FArgs, required: bool) -> Result<Option<(usize, NCPoly)>> {
    let Some(src) = &fa.f else {
        return match fa.m {
            Some(m) => Ok(Some((m, NCPoly::x_pow(m)))),
            None if required => Err(CliError::Usage("--f (or --m) is required".into())),
            None => Ok(None),
        };
    };
    let f = expr::eval(&parse_expr(src)?, None)?;
    if f.is_zero() || !f.is_in_x_only() {
        return Err(CliError::Domain(format!("f must be a nonzero polynomial in X, got {f}")));
    }
    let m = f.x_degree().expect("nonzero");
    if let Some(expected) = fa.m {
        if expected != m {
            return Err(freelnd::Error::DegreeMismatch { expected, found: m }.into());
        }
    }
    Ok(Some((m, f)))
}

fn required_f(fa: &FArgs) -> Result<(usize, NCPoly)> {
    Ok(resolve_f(fa, true)?.expect("required"))
}

#[derive(Serialize)]
struct Value<'a> {
    value: &'a NCPoly,
}

#[derive(Serialize)]
struct TseqItem {
    i: usize,
    value: NCPoly,
}

#[derive(Serialize)]
struct GenRow<'a> {
    bracketed: String,
    weight: usize,
    lm: &'a Word,
    value: &'a NCPoly,
}

#[derive(Serialize)]
struct Decoded {
    bracketed: String,
    weight: usize,
    value: NCPoly,
}

#[derive(Serialize)]
struct RewriteTerm {
    factors: Vec<String>,
    coeff: String,
}

#[derive(Serialize)]
struct Rewritten {
    terms: Vec<RewriteTerm>,
    value: NCPoly,
}

#[derive(Serialize)]
struct KernelResult<'a> {
    cumulative: bool,
    dimension: usize,
    basis: &'a [NCPoly],
}

#[derive(Serialize)]
struct AkResult<'a> {
    family_bound: usize,
    dimension: usize,
    basis: &'a [NCPoly],
}

#[derive(Serialize)]
struct CheckRow<'a> {
    id: usize,
    name: &'a str,
    passed: bool,
    limit_ms: u128,
    detail: &'a str,
}

fn check_passed(o: &CheckOutcome) -> bool {
    o.passed && o.within_time()
}

fn lines<I: IntoIterator<Item = String>>(it: I) -> String {
    it.into_iter().map(|l| l + "\n").collect()
}

pub fn run(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Eval { fa, expr } => {
            let f = resolve_f(fa, false)?;
            let e = parse_expr(expr)?;
            let value = expr::eval(&e, f.as_ref().map(|(_, f)| f))?;
            let params = Params { m: f.as_ref().map(|p| p.0), f: f.map(|p| p.1), expr: Some(e.to_string()), ..Params::default() };
            Ok(output("eval", &params, Value { value: &value }, format!("{value}\n")))
        }
        Command::Derive { fa, expr, n } => {
            let (m, f) = required_f(fa)?;
            let e = parse_expr(expr)?;
            let d = Derivation::triangular(f.clone());
            let mut value = expr::eval(&e, Some(&f))?;
            for _ in 0..*n {
                value = d.derive(&value);
            }
            let params = Params { m: Some(m), f: Some(f), expr: Some(e.to_string()), n: Some(*n), ..Params::default() };
            Ok(output("derive", &params, Value { value: &value }, format!("{value}\n")))
        }
        Command::Expmap { fa, expr } => {
            let (m, f) = required_f(fa)?;
            let e = parse_expr(expr)?;
            let d = Derivation::triangular(f.clone());
            let value = exp(&d, &expr::eval(&e, Some(&f))?, DEFAULT_CAP)?;
            let params = Params { m: Some(m), f: Some(f), expr: Some(e.to_string()), ..Params::default() };
            Ok(output("expmap", &params, Value { value: &value }, format!("{value}\n")))
        }
        Command::Tseq { fa, n } => {
            let (m, f) = required_f(fa)?;
            let items: Vec<TseqItem> = (1..=*n).map(|i| TseqItem { i, value: t_sequence(i, &f) }).collect();
            let text = lines(items.iter().map(|t| format!("T{} = {}", t.i, t.value)));
            let params = Params { m: Some(m), f: Some(f), n: Some(*n), ..Params::default() };
            Ok(output("tseq", &params, items, text))
        }
        Command::Gens { fa, weight_max } => {
            let (m, f) = required_f(fa)?;
            let table = enumerate_generators(m, &f, *weight_max)?;
            let rows: Vec<GenRow> = table
                .entries
                .iter()
                .map(|e| GenRow { bracketed: e.bw.to_string(), weight: e.weight, lm: &e.lm, value: &e.value })
                .collect();
            let text = lines(rows.iter().map(|r| format!("{:>3}  {:<24} {}", r.weight, r.bracketed, r.lm)));
            let params = Params { m: Some(m), f: Some(f.clone()), weight_max: Some(*weight_max), ..Params::default() };
            Ok(output("gens", &params, rows, text))
        }
        Command::Decode { m, word } => {
            let w: Word = word.parse().map_err(|e: freelnd::Error| CliError::Usage(e.to_string()))?;
            let bw = decode(&w, *m)?;
            let value = eval_bracketed(&bw, &NCPoly::x_pow(*m));
            let result = Decoded { bracketed: bw.to_string(), weight: bw.weight(*m), value };
            let params = Params { m: Some(*m), word: Some(w.to_string()), ..Params::default() };
            Ok(output("decode", &params, result, format!("{bw}\n")))
        }
        Command::Rewrite { fa, expr, weight_max } => {
            let (m, f) = required_f(fa)?;
            let e = parse_expr(expr)?;
            let value = expr::eval(&e, Some(&f))?;
            let bound = weight_max.unwrap_or_else(|| value.max_grade(m).unwrap_or(0));
            let table = enumerate_generators(m, &f, bound)?;
            let g = rewrite_in_generators(&value, &table)?;
            let text = format!("{}\n", g.display(&table));
            let terms = g
                .terms
                .iter()
                .map(|(factors, c)| RewriteTerm {
                    factors: factors.iter().map(|&k| table.entries[k].bw.to_string()).collect(),
                    coeff: c.to_string(),
                })
                .collect();
            let params = Params { m: Some(m), f: Some(f), expr: Some(e.to_string()), weight_max: Some(bound), ..Params::default() };
            Ok(output("rewrite", &params, Rewritten { terms, value }, text))
        }
        Command::Kernel { fa, weight } => {
            let (m, f) = required_f(fa)?;
            let kb = graded_kernel_basis(&Derivation::triangular(f.clone()), m, *weight)?;
            let header = format!("dimension {}", kb.dimension());
            let text = lines(std::iter::once(header).chain(kb.basis.iter().map(|p| p.to_string())));
            let result = KernelResult { cumulative: kb.component.cumulative, dimension: kb.dimension(), basis: &kb.basis };
            let params = Params { m: Some(m), f: Some(f), weight: Some(*weight), ..Params::default() };
            Ok(output("kernel", &params, result, text))
        }
        Command::Ak { weight, m } => {
            let bound = m.unwrap_or((*weight).max(6));
            let basis = ak_basis(bound, *weight)?;
            let header = format!("dimension {}", basis.len());
            let text = lines(std::iter::once(header).chain(basis.iter().map(|p| p.to_string())));
            let result = AkResult { family_bound: bound, dimension: basis.len(), basis: &basis };
            let params = Params { m: Some(bound), weight: Some(*weight), ..Params::default() };
            Ok(output("ak", &params, result, text))
        }
        Command::Verify { weight_max, seed, n } => {
            let budget = Budget { weight_max: *weight_max, seed: *seed, cases: *n };
            let outcomes = verify::run_all(&budget);
            for o in &outcomes {
                eprintln!("check {}: {} ms", o.id, o.elapsed_ms);
            }
            let rows: Vec<CheckRow> = outcomes
                .iter()
                .map(|o| CheckRow { id: o.id, name: &o.name, passed: check_passed(o), limit_ms: o.limit_ms, detail: &o.detail })
                .collect();
            let text = lines(rows.iter().map(|r| {
                format!("[{}] {}. {}: {}", if r.passed { "PASS" } else { "FAIL" }, r.id, r.name, r.detail)
            }));
            let failed = rows.iter().any(|r| !r.passed);
            let params = Params { weight_max: Some(*weight_max), n: Some(*n), seed: Some(*seed), ..Params::default() };
            let mut out = output("verify", &params, rows, text);
            out.status = u8::from(failed);
            Ok(out)
        }
    }
}
