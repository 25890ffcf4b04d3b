//! The `wittlab` command line: `poly`, `eval`, `verify` and `kernel`.
//!
//! Exit codes: 0 success, 1 a law failed, 2 usage or configuration error,
//! 3 internal invariant violation.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::error::Error;
use crate::harness::{self, LawConfig, Operators, Sabotage, SuiteOptions, TrialReport};
use crate::json;
use crate::kernel::{psi_map, FormalGroupLaw, KernelPoint, PsiPolicy};
use crate::ring::{Fraction, Order, Ring, RingElement, RingSpec, Valuation};
use crate::shifted::ShiftedWittVector;
use crate::witt::{self, GhostVector, PolyCache, UniversalOp, WittVector, DEFAULT_BUDGET};

#[derive(Debug, Parser)]
#[command(name = "wittlab", version, about = "Witt vector arithmetic and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print universal structure polynomials as JSON.
    Poly(PolyArgs),
    /// Apply one operator to JSON-encoded input.
    Eval(EvalArgs),
    /// Run law checks over a configuration matrix.
    Verify(VerifyArgs),
    /// Run the kernel checks for one formal group.
    Kernel(KernelArgs),
}

#[derive(Debug, clap::Args)]
struct PolyArgs {
    /// sum, prod, frobenius or mult-pi.
    #[arg(long)]
    op: UniversalOp,
    /// Highest component index.
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: u32,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Maximum estimated number of terms.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
}

#[derive(Debug, clap::Args)]
struct EvalArgs {
    /// Ring configuration: a JSON file, inline JSON, or a bare prime for Z.
    #[arg(long)]
    ring: String,
    #[arg(long)]
    op: String,
    /// Input value: a JSON file, inline JSON, or `-` for stdin.
    #[arg(long = "in")]
    input: String,
    /// Shift of shifted vectors and kernel points.
    #[arg(long)]
    m: Option<usize>,
    /// Tail length, vector length, degree or truncation depending on the op.
    #[arg(long)]
    n: Option<usize>,
    /// Target length for projections.
    #[arg(long)]
    k: Option<usize>,
    /// Formal group for kernel ops: ga, gm or a JSON file.
    #[arg(long, default_value = "ga")]
    group: String,
    /// Work modulo pi^prec.
    #[arg(long)]
    prec: Option<u64>,
}

#[derive(Debug, clap::Args)]
struct VerifyArgs {
    /// A law id, a comma-separated list, or `all`.
    #[arg(long, default_value = "all")]
    law: String,
    /// Primes for the integer configurations.
    #[arg(long, value_delimiter = ',')]
    p: Vec<u32>,
    /// Include Z[x]/(x^2-5) at p = 5.
    #[arg(long, action = clap::ArgAction::Set, default_value_t = true)]
    ramified: bool,
    /// Include Z_p[t] for the first prime.
    #[arg(long, action = clap::ArgAction::Set, default_value_t = true)]
    poly: bool,
    #[arg(long)]
    m_max: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    /// Overrides the per-law trial count.
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 6)]
    prec: u64,
    /// Write the JSON report array here.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Run with a deliberately broken operator.
    #[arg(long)]
    mutate: Option<Mutation>,
    /// Numeric trials only.
    #[arg(long)]
    no_symbolic: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mutation {
    LateralUnphi,
    ShiftDropsWrongEntry,
}

impl From<Mutation> for Sabotage {
    fn from(m: Mutation) -> Sabotage {
        match m {
            Mutation::LateralUnphi => Sabotage::LateralUnphi,
            Mutation::ShiftDropsWrongEntry => Sabotage::ShiftDropsWrongEntry,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Psi,
    Phi,
    Diff,
    All,
}

#[derive(Debug, clap::Args)]
struct KernelArgs {
    /// ga, gm or a JSON file with the coefficient table.
    #[arg(long, default_value = "gm")]
    group: String,
    #[arg(long, default_value_t = 5)]
    p: u32,
    #[arg(long, default_value_t = 1)]
    m: usize,
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[arg(long, default_value_t = 6)]
    prec: u64,
    #[arg(long, value_enum, default_value_t = Check::All)]
    check: Check,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{}: {}", .0.name(), .0)]
    Lib(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Lib(Error::Internal(_)) => 3,
            _ => 2,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let out = match cli.command {
        Command::Poly(a) => cmd_poly(&a),
        Command::Eval(a) => cmd_eval(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Kernel(a) => cmd_kernel(&a),
    };
    match out {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.code()
        }
    }
}

fn emit(v: &Value, out: Option<&Path>) -> CliResult<()> {
    let text = json::to_canonical_string(v);
    match out {
        Some(path) => fs::write(path, text).map_err(Error::from)?,
        None => io::stdout().write_all(text.as_bytes()).map_err(Error::from)?,
    }
    Ok(())
}

fn cmd_poly(a: &PolyArgs) -> CliResult<i32> {
    let ring = Ring::integers(a.p)?;
    let polys = PolyCache::global().get(a.op, a.n, &ring, a.budget)?;
    emit(&polys.to_json(), a.out.as_deref())?;
    Ok(0)
}

/// A JSON argument: `-` for stdin, an existing file, or inline text.
/// Parenthesised tuples like `(3,5)` are accepted as arrays.
fn read_value(arg: &str) -> CliResult<Value> {
    let text = if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(Error::from)?;
        s
    } else if Path::new(arg).is_file() {
        fs::read_to_string(arg).map_err(Error::from)?
    } else {
        arg.to_string()
    };
    let t = text.trim();
    let t = match t.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
        Some(inner) => format!("[{inner}]"),
        None => t.to_string(),
    };
    Ok(serde_json::from_str(&t).map_err(Error::from)?)
}

fn parse_ring(arg: &str) -> CliResult<Ring> {
    if let Ok(p) = arg.trim().parse::<u32>() {
        return Ok(Ring::integers(p)?);
    }
    let v = read_value(arg)?;
    let spec: RingSpec = serde_json::from_value(v).map_err(Error::from)?;
    Ok(Ring::from_spec(&spec)?)
}

fn parse_group(arg: &str, order: &Order) -> CliResult<Arc<FormalGroupLaw>> {
    Ok(Arc::new(match arg {
        "ga" => FormalGroupLaw::additive(order),
        "gm" => FormalGroupLaw::multiplicative(order),
        path => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("group must be ga, gm or a readable file: {path}: {e}")))?;
            let name = Path::new(path).file_stem().and_then(|s| s.to_str()).unwrap_or("custom");
            FormalGroupLaw::from_json(order, name, &text)?
        }
    }))
}

struct EvalCtx<'a> {
    args: &'a EvalArgs,
    ring: Ring,
}

impl EvalCtx<'_> {
    fn need(&self, v: Option<usize>, flag: &str, op: &str) -> CliResult<usize> {
        v.ok_or_else(|| CliError::Usage(format!("{op} needs --{flag}")))
    }

    /// Two arguments, as `{"x": .., "y": ..}` or a two-element array.
    fn pair<'v>(&self, v: &'v Value) -> CliResult<(&'v Value, &'v Value)> {
        match v {
            Value::Object(o) => match (o.get("x"), o.get("y")) {
                (Some(x), Some(y)) => Ok((x, y)),
                _ => Err(Error::Parse("binary input needs keys `x` and `y`".into()).into()),
            },
            Value::Array(a) if a.len() == 2 => Ok((&a[0], &a[1])),
            _ => Err(Error::Parse("binary input needs {\"x\", \"y\"} or a pair".into()).into()),
        }
    }

    fn elem(&self, v: &Value) -> CliResult<RingElement> {
        Ok(json::element_from_json(&self.ring, v)?)
    }

    fn witt(&self, v: &Value) -> CliResult<WittVector> {
        Ok(json::witt_from_json(&self.ring, v)?)
    }

    /// Head and tail from an object, or a flat array cut after `m + 1`.
    fn split(&self, v: &Value, op: &str) -> CliResult<(Vec<RingElement>, Vec<RingElement>)> {
        if v.is_object() {
            let s = json::shifted_from_json(&self.ring, &self.ring, v)?;
            return Ok((s.head().to_vec(), s.tail().to_vec()));
        }
        let m = self.need(self.args.m, "m", op)?;
        let all = json::elements_from_json(&self.ring, v)?;
        if all.len() < m + 1 {
            return Err(Error::BadLength(format!("need at least {} components for m = {m}", m + 1)).into());
        }
        if let Some(n) = self.args.n {
            if all.len() != m + 1 + n {
                return Err(Error::LengthMismatch { expected: m + 1 + n, found: all.len() }.into());
            }
        }
        let tail = all[m + 1..].to_vec();
        let mut head = all;
        head.truncate(m + 1);
        Ok((head, tail))
    }

    fn shifted(&self, v: &Value, op: &str) -> CliResult<ShiftedWittVector> {
        let (head, tail) = self.split(v, op)?;
        Ok(ShiftedWittVector::new(&self.ring, &self.ring, head, tail)?)
    }

    fn group(&self) -> CliResult<Arc<FormalGroupLaw>> {
        parse_group(&self.args.group, self.ring.order())
    }

    fn point_ring(&self) -> Ring {
        match self.args.prec {
            Some(n) => self.ring.truncated(n),
            None => self.ring.clone(),
        }
    }

    /// `{"m": .., "coords": [..]}` or a flat coordinate array with `--m`.
    fn point(&self, v: &Value, op: &str) -> CliResult<KernelPoint> {
        let (m, coords) = match v {
            Value::Object(o) => {
                let m = o.get("m").and_then(Value::as_u64).ok_or_else(|| Error::Parse("point needs `m`".into()))?;
                let c = o.get("coords").ok_or_else(|| Error::Parse("point needs `coords`".into()))?;
                (m as usize, c)
            }
            other => (self.need(self.args.m, "m", op)?, other),
        };
        let target = self.point_ring();
        let coords = json::elements_from_json(&self.ring, coords)?
            .into_iter()
            .map(|x| x.to_ring(&target))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(KernelPoint::new(&self.group()?, &self.ring, m, coords)?)
    }
}

fn shifted_ghost_json(g: &GhostVector) -> Value {
    let m = g.shift().unwrap_or(0);
    json::object(vec![
        ("m", Value::from(m)),
        ("n", Value::from(g.len() - m - 1)),
        ("head", json::elements_to_json(&g.entries()[..=m])),
        ("tail", json::elements_to_json(&g.entries()[m + 1..])),
    ])
}

fn fraction_json(order: &Order, f: &Fraction) -> Value {
    json::object(vec![("num", json::scalar_to_json(order, f.num())), ("den", json::int_to_json(f.den()))])
}

fn spec_json(ring: &Ring) -> CliResult<Value> {
    Ok(serde_json::to_value(ring.to_spec()).map_err(Error::from)?)
}

/// Operator names accepted by `eval`.
pub const EVAL_OPS: &[&str] = &[
    "make_ring_config",
    "adjoin_variables",
    "exact_div_pi",
    "pi_valuation",
    "phi_apply",
    "c_pi",
    "reduce_mod",
    "ghost",
    "ghost_solve",
    "witt_add",
    "witt_sub",
    "witt_mul",
    "witt_neg",
    "truncate",
    "frobenius",
    "verschiebung",
    "teichmuller",
    "mult_pi",
    "exp_delta",
    "delta",
    "universal_polynomials",
    "shifted_ghost",
    "shifted_ghost_solve",
    "shifted_add",
    "shifted_mul",
    "include_i",
    "restrict_t",
    "lateral_frobenius",
    "shift_e",
    "load_fgl",
    "formal_log",
    "psi_map",
    "kernel_embed",
    "kernel_add",
    "kernel_lateral_f",
    "kernel_phi",
    "kernel_project_u",
    "kernel_section_sigma",
    "difference_character",
];

fn canonical_op(name: &str) -> String {
    let s = name.trim().to_ascii_lowercase().replace('-', "_");
    match s.as_str() {
        "phi" => "phi_apply".into(),
        "add" => "witt_add".into(),
        "sub" => "witt_sub".into(),
        "mul" => "witt_mul".into(),
        "neg" => "witt_neg".into(),
        "include" => "include_i".into(),
        "restrict" => "restrict_t".into(),
        "psi" => "psi_map".into(),
        _ => s,
    }
}

fn eval_op(c: &EvalCtx, op: &str, input: &Value) -> CliResult<Value> {
    let a = c.args;
    let out = match op {
        "make_ring_config" => spec_json(&c.ring)?,
        "adjoin_variables" => {
            let names: Vec<String> = serde_json::from_value(input.clone()).map_err(Error::from)?;
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            spec_json(&c.ring.adjoin_variables(&refs)?)?
        }
        "exact_div_pi" => json::element_to_json(&c.elem(input)?.exact_div_pi()?),
        "pi_valuation" => match c.elem(input)?.pi_valuation() {
            Valuation::Finite(v) => Value::from(v),
            Valuation::Infinite => Value::from("inf"),
        },
        "phi_apply" => json::element_to_json(&c.elem(input)?.phi()),
        "c_pi" => {
            let (x, y) = c.pair(input)?;
            json::element_to_json(&witt::c_pi(&c.elem(x)?, &c.elem(y)?)?)
        }
        "reduce_mod" => {
            let n = c.need(a.n, "n", op)?;
            json::element_to_json(&c.elem(input)?.reduce_mod(n as u64)?)
        }
        "ghost" => json::ghost_to_json(&c.witt(input)?.ghost()),
        "ghost_solve" => json::witt_to_json(&WittVector::ghost_solve(&json::ghost_from_json(&c.ring, input)?)?),
        "witt_add" | "witt_sub" | "witt_mul" => {
            let (x, y) = c.pair(input)?;
            let (x, y) = (c.witt(x)?, c.witt(y)?);
            let r = match op {
                "witt_add" => x.add(&y)?,
                "witt_sub" => x.sub(&y)?,
                _ => x.mul(&y)?,
            };
            json::witt_to_json(&r)
        }
        "witt_neg" => json::witt_to_json(&c.witt(input)?.neg()),
        "truncate" => {
            let v = c.witt(input)?;
            json::witt_to_json(&match a.n {
                Some(n) => v.truncate_to(n)?,
                None => v.truncate()?,
            })
        }
        "frobenius" => json::witt_to_json(&c.witt(input)?.frobenius()?),
        "verschiebung" => json::witt_to_json(&c.witt(input)?.verschiebung()),
        "mult_pi" => json::witt_to_json(&c.witt(input)?.mult_pi()),
        "teichmuller" => json::witt_to_json(&WittVector::teichmuller(&c.elem(input)?, c.need(a.n, "n", op)?)),
        "exp_delta" => json::witt_to_json(&WittVector::exp_delta(&c.elem(input)?, c.need(a.n, "n", op)?)?),
        "delta" => json::element_to_json(&witt::delta(&c.elem(input)?)?),
        "universal_polynomials" => {
            let name = input.as_str().ok_or_else(|| Error::Parse("input is the op name, e.g. \"sum\"".into()))?;
            let u: UniversalOp = name.parse()?;
            PolyCache::global().get(u, c.need(a.n, "n", op)?, &c.ring, DEFAULT_BUDGET)?.to_json()
        }
        "shifted_ghost" => shifted_ghost_json(&c.shifted(input, op)?.shifted_ghost()),
        "shifted_ghost_solve" => {
            let (head, tail) = c.split(input, op)?;
            let g = GhostVector::shifted(head, tail)?;
            json::shifted_to_json(&ShiftedWittVector::shifted_ghost_solve(&c.ring, &c.ring, &g)?)
        }
        "shifted_add" | "shifted_mul" => {
            let (x, y) = c.pair(input)?;
            let (x, y) = (c.shifted(x, op)?, c.shifted(y, op)?);
            json::shifted_to_json(&if op == "shifted_add" { x.add(&y)? } else { x.mul(&y)? })
        }
        "include_i" => json::witt_to_json(&c.shifted(input, op)?.include()),
        "restrict_t" => json::shifted_to_json(&c.shifted(input, op)?.restrict_t()?),
        "lateral_frobenius" => json::shifted_to_json(&c.shifted(input, op)?.lateral_frobenius()?),
        "shift_e" => json::shifted_to_json(&c.shifted(input, op)?.shift_e()?),
        "load_fgl" => c.group()?.to_json(),
        "formal_log" => {
            let g = c.group()?;
            let d = c.need(a.n, "n", op)? as u32;
            Value::Array(g.log_coefficients(d)?.iter().map(|f| fraction_json(g.order(), f)).collect())
        }
        "psi_map" => {
            let t0 = c.elem(input)?;
            let m = c.need(a.m, "m", op)?;
            let g = c.group()?;
            json::element_to_json(&psi_map(&g, m, &t0, a.prec, PsiPolicy::Strict)?)
        }
        "kernel_embed" => json::shifted_to_json(&c.point(input, op)?.embed()),
        "kernel_add" => {
            let (x, y) = c.pair(input)?;
            json::point_to_json(&c.point(x, op)?.add(&c.point(y, op)?)?)
        }
        "kernel_lateral_f" => json::point_to_json(&c.point(input, op)?.lateral_f()?),
        "kernel_phi" => json::point_to_json(&c.point(input, op)?.phi_map()?),
        "kernel_project_u" => json::point_to_json(&c.point(input, op)?.project(c.need(a.k, "k", op)?)?),
        "kernel_section_sigma" => json::point_to_json(&c.point(input, op)?.section(c.need(a.n, "n", op)?)?),
        "difference_character" => json::witt_to_json(&c.point(input, op)?.difference_character()?),
        other => {
            return Err(CliError::Usage(format!("unknown op `{other}`; known ops: {}", EVAL_OPS.join(", "))));
        }
    };
    Ok(out)
}

fn cmd_eval(a: &EvalArgs) -> CliResult<i32> {
    let op = canonical_op(&a.op);
    if !EVAL_OPS.contains(&op.as_str()) {
        return Err(CliError::Usage(format!("unknown op `{}`; known ops: {}", a.op, EVAL_OPS.join(", "))));
    }
    let ring = parse_ring(&a.ring)?;
    let input = read_value(&a.input)?;
    let ctx = EvalCtx { args: a, ring };
    emit(&eval_op(&ctx, &op, &input)?, None)?;
    Ok(0)
}

fn print_reports(reports: &[TrialReport]) {
    for r in reports {
        let label = r.config.get("label").and_then(Value::as_str).unwrap_or("?");
        let range = |k: &str| {
            r.config.get(k).and_then(Value::as_array).map_or(String::from("?"), |v| {
                let (lo, hi) = (&v[0], &v[1]);
                if lo == hi { lo.to_string() } else { format!("{lo}..{hi}") }
            })
        };
        let mut line = format!(
            "{:<10} {:<9} {:<16} m={:<5} n={:<5} {:<7} {:>4} trials {:>6} ms",
            r.law,
            r.mode,
            label,
            range("m"),
            range("n"),
            r.status,
            r.trials,
            r.ms
        );
        if let Some(reason) = &r.reason {
            line.push_str(&format!("  ({reason})"));
        }
        println!("{line}");
        if let Some(ce) = &r.counterexample {
            println!("  counterexample: {ce}");
        }
    }
}

fn finish(reports: &[TrialReport], path: Option<&Path>) -> CliResult<i32> {
    print_reports(reports);
    let summary = harness::Summary::of(reports);
    println!("{summary}");
    if let Some(path) = path {
        emit(&harness::report::reports_to_json(reports), Some(path))?;
    }
    Ok(if summary.fail > 0 { 1 } else { 0 })
}

fn cmd_verify(a: &VerifyArgs) -> CliResult<i32> {
    // reject unknown ids before building anything
    harness::select(&a.law)?;
    let mut matrix = if a.p.is_empty() {
        harness::default_matrix()
    } else {
        let mut m = a.p.iter().map(|&p| LawConfig::integers(p)).collect::<Result<Vec<_>, _>>()?;
        if a.ramified {
            m.push(LawConfig::ramified()?);
        }
        if a.poly {
            m.push(LawConfig::polynomial(a.p[0])?);
        }
        m
    };
    if a.p.is_empty() && !a.ramified {
        matrix.retain(|c| c.ring.e() == 1);
    }
    if a.p.is_empty() && !a.poly {
        matrix.retain(|c| c.ring.nvars() == 0);
    }
    let matrix: Vec<LawConfig> = matrix
        .into_iter()
        .map(|c| {
            let (mm, nn) = (a.m_max.unwrap_or(c.m_max), a.n_max.unwrap_or(c.n_max));
            c.with_ranges(mm, nn).with_prec(a.prec)
        })
        .collect();
    let opts = SuiteOptions {
        trials: a.trials,
        ops: Operators { sabotage: a.mutate.map(Sabotage::from) },
        skip_symbolic: a.no_symbolic,
    };
    let (reports, _) = harness::run_suite(&a.law, &matrix, a.seed, &opts)?;
    finish(&reports, a.report.as_deref())
}

fn cmd_kernel(a: &KernelArgs) -> CliResult<i32> {
    let ring = Ring::integers(a.p)?;
    let group = parse_group(&a.group, ring.order())?;
    let wants_psi = matches!(a.check, Check::Psi | Check::All);
    if wants_psi && !ring.psi_integral() {
        return Err(Error::NonIntegralPsi("e ≤ p−2 violated".into()).into());
    }
    let laws = match a.check {
        Check::Psi => "L15",
        Check::Phi => "L12,L13",
        Check::Diff => "L14,L16",
        Check::All => "L11,L12,L13,L14,L15,L16,aux-group",
    };
    let cfg = LawConfig::new(&format!("Z{}", a.p), ring.clone(), a.m, a.n)
        .only(a.m, a.n)
        .with_prec(a.prec)
        .with_group(group.clone());
    let opts = SuiteOptions { trials: a.trials, ops: Operators::default(), skip_symbolic: false };
    let (reports, _) = harness::run_suite(laws, &[cfg], a.seed, &opts)?;
    let code = finish(&reports, a.report.as_deref())?;
    let target = if group.is_additive() { ring.clone() } else { ring.truncated(a.prec) };
    let prec = (!group.is_additive()).then_some(a.prec);
    let mut tail = vec![RingElement::zero(&target); a.n];
    if let Some(t0) = tail.first_mut() {
        *t0 = RingElement::one(&target);
    }
    let t = KernelPoint::new(&group, &ring, a.m, tail)?;
    let coords = |p: &KernelPoint| json::elements_to_json(p.coords());
    if matches!(a.check, Check::Psi | Check::All) && a.m >= 1 {
        let v = psi_map(&group, a.m, &t.coords()[0], prec, PsiPolicy::Strict)?;
        println!("sample: Psi^[{}](1) = {}", a.m, json::element_to_json(&v));
    }
    if matches!(a.check, Check::Phi | Check::All) && a.m >= 1 {
        println!("sample: Phi_[{}]{} = {}", a.m, coords(&t), coords(&t.phi_map()?));
    }
    if matches!(a.check, Check::Diff | Check::All) && a.n >= 2 {
        let d = t.difference_character()?;
        println!("sample: difference character of {} = {}", coords(&t), json::witt_to_json(&d));
    }
    Ok(code)
}
