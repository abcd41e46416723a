//! The `esym` command line.

pub mod java_compat;

use std::ffi::OsString;
use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::error::{EsymError, Result};
use crate::esp::build_table;
use crate::polyzero::{from_roots, Poly1};
use crate::scalar::{
    ComplexRing, ExactComplex, FloatComplex, Mode, Wrap64Complex, DEFAULT_TOLERANCE,
};
use crate::symalg::{
    alpha_gen, eval_genpoly, generator_partition, phi, shift_u, split_by_top_generator, GenPoly,
};
use crate::verify::{self, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "esym", version, about = "Elementary symmetric polynomials over Gaussian integers")]
pub struct Cli {
    #[command(flatten)]
    pub config: CliConfig,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct CliConfig {
    /// Arithmetic mode.
    #[arg(long, global = true, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Absolute tolerance for zero checks in float mode.
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    pub tolerance: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Replay the original console program (stdin/stdout, wrapping 64-bit).
    JavaCompat,

    /// Print the table of ε_k over every prefix of the values.
    Eps {
        #[arg(required = true, allow_hyphen_values = true)]
        values: Vec<String>,
    },

    /// Monic polynomial with the given zeroes.
    FromRoots {
        #[arg(allow_hyphen_values = true)]
        roots: Vec<String>,
    },

    /// Multiply by (z - lambda), or by (z + x) with --mul-linear.
    InsertZero {
        /// Leading-first coefficients, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "mul_linear")]
        lambda: Option<String>,
        #[arg(long, requires = "x")]
        mul_linear: bool,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
    },

    /// Synthetic division by (z - lambda).
    Deflate {
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },

    /// Evaluate a polynomial at a point.
    PolyEval {
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },

    /// Run the seeded property suite.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Swap in a broken table builder to exercise the failure path.
        #[arg(long, hide = true)]
        corrupt_recurrence: bool,
    },

    /// Generator-algebra operations (exact mode only).
    #[command(subcommand)]
    Sym(SymCommand),
}

#[derive(Debug, Subcommand)]
pub enum SymCommand {
    /// Apply the shift U.
    Shift(PolyArg),
    /// Apply the morphism Φ into ambient n+1.
    Phi(PolyArg),
    /// Split into the part free of e_n and the part containing it.
    Split(PolyArg),
    /// α(e_k) in ambient n+1.
    Alpha {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Generators α(e_1..e_n) and the complementary generator.
    Partition {
        #[arg(long)]
        n: usize,
    },
    /// Evaluate with e_k = ε_k(values).
    Eval {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(required = true, allow_hyphen_values = true)]
        values: Vec<String>,
    },
    Add(PolyPair),
    Mul(PolyPair),
}

#[derive(Debug, Args)]
pub struct PolyArg {
    #[arg(allow_hyphen_values = true)]
    pub poly: String,
    /// Ambient generator count; defaults to the largest index present.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct PolyPair {
    #[arg(allow_hyphen_values = true)]
    pub left: String,
    #[arg(allow_hyphen_values = true)]
    pub right: String,
    #[arg(long)]
    pub n: Option<usize>,
}

/// Split a comma-separated list, ignoring commas inside parentheses.
pub fn split_list(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for c in text.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut current));
                continue;
            }
            _ => {}
        }
        current.push(c);
    }
    out.push(current);
    out.into_iter()
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

fn parse_values<S: ComplexRing>(tokens: &[String]) -> Result<Vec<S>> {
    tokens.iter().map(|t| S::parse_literal(t)).collect()
}

fn parse_coeffs<S: ComplexRing>(text: &str) -> Result<Poly1<S>> {
    let values = parse_values::<S>(&split_list(text))?;
    if values.is_empty() {
        return Err(EsymError::parse(text, "empty coefficient list"));
    }
    Ok(Poly1::new(values))
}

fn joined<S: ComplexRing>(xs: &[S]) -> String {
    xs.iter().map(ComplexRing::literal).collect::<Vec<_>>().join(", ")
}

/// Zero test honouring the float tolerance.
trait NearZero: ComplexRing {
    fn near_zero(&self, _tolerance: f64) -> bool {
        self.is_zero()
    }
}

impl NearZero for ExactComplex {}
impl NearZero for Wrap64Complex {}
impl NearZero for FloatComplex {
    fn near_zero(&self, tolerance: f64) -> bool {
        self.approx_eq(FloatComplex::zero(), tolerance)
    }
}

/// What a command produced, before rendering.
enum Output {
    Text(String),
    Json(serde_json::Value),
}

struct Outcome {
    output: Output,
    code: i32,
}

impl Outcome {
    fn ok(output: Output) -> Self {
        Self {
            output,
            code: EXIT_OK,
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("serializable")
}

fn cmd_eps<S: NearZero>(cfg: &CliConfig, values: &[String]) -> Result<Outcome> {
    let xs = parse_values::<S>(values)?;
    let table = build_table(&xs)?;
    if cfg.json {
        return Ok(Outcome::ok(Output::Json(to_json(&table))));
    }
    let text: String = table
        .rows()
        .enumerate()
        .map(|(i, row)| format!("row {}: {}\n", i + 1, joined(row)))
        .collect();
    Ok(Outcome::ok(Output::Text(text)))
}

fn poly_report<S: NearZero>(cfg: &CliConfig, p: &Poly1<S>, extra: Vec<(&str, String)>) -> Output {
    if cfg.json {
        let mut v = to_json(p);
        v["pretty"] = json!(p.pretty());
        for (k, text) in extra {
            v[k] = json!(text);
        }
        return Output::Json(v);
    }
    let mut text = format!("coeffs: {}\n{}\n", joined(p.coeffs()), p.pretty());
    for (k, line) in extra {
        text.push_str(&format!("{k}: {line}\n"));
    }
    Output::Text(text)
}

fn cmd_from_roots<S: NearZero>(cfg: &CliConfig, roots: &[String]) -> Result<Outcome> {
    let roots = parse_values::<S>(roots)?;
    Ok(Outcome::ok(poly_report(cfg, &from_roots(&roots), Vec::new())))
}

fn cmd_insert_zero<S: NearZero>(
    cfg: &CliConfig,
    coeffs: &str,
    lambda: Option<&str>,
    x: Option<&str>,
) -> Result<Outcome> {
    let f = parse_coeffs::<S>(coeffs)?;
    let (g, zero) = match (lambda, x) {
        (Some(l), _) => {
            let l = S::parse_literal(l)?;
            (f.insert_zero(&l), l)
        }
        (None, Some(x)) => {
            let x = S::parse_literal(x)?;
            (f.mul_linear(&x), x.neg())
        }
        (None, None) => return Err(EsymError::parse("", "one of --lambda or --mul-linear --x is required")),
    };
    let residual = g.eval(&zero);
    let ok = residual.near_zero(cfg.tolerance);
    let check = format!("f({}) = {}", zero.literal(), residual.literal());
    Ok(Outcome {
        output: poly_report(cfg, &g, vec![("zero", check)]),
        code: if ok { EXIT_OK } else { EXIT_FAILURE },
    })
}

fn cmd_deflate<S: NearZero>(cfg: &CliConfig, coeffs: &str, lambda: &str) -> Result<Outcome> {
    let f = parse_coeffs::<S>(coeffs)?;
    let lambda = S::parse_literal(lambda)?;
    let (q, r) = f.deflate(&lambda)?;
    Ok(Outcome::ok(poly_report(cfg, &q, vec![("remainder", r.literal())])))
}

fn cmd_poly_eval<S: NearZero>(cfg: &CliConfig, coeffs: &str, at: &str) -> Result<Outcome> {
    let f = parse_coeffs::<S>(coeffs)?;
    let z = S::parse_literal(at)?;
    let v = f.eval(&z);
    Ok(Outcome::ok(if cfg.json {
        let (re, im) = v.parts();
        Output::Json(json!({"mode": S::MODE.as_str(), "value": [re, im]}))
    } else {
        Output::Text(format!("{}\n", v.literal()))
    }))
}

fn cmd_verify(cfg: &CliConfig, config: VerifyConfig, corrupt: bool) -> Result<Outcome> {
    let builder: verify::TableBuilder = if corrupt {
        verify::corrupted_build_table
    } else {
        build_table
    };
    let report = verify::run_with(config, builder)?;
    let code = if report.passed { EXIT_OK } else { EXIT_FAILURE };
    let output = if cfg.json {
        Output::Json(to_json(&report))
    } else {
        Output::Text(report.render_text())
    };
    Ok(Outcome { output, code })
}

fn poly_output(cfg: &CliConfig, p: &GenPoly) -> Output {
    if cfg.json {
        Output::Json(json!({"n": p.n(), "poly": p.to_string()}))
    } else {
        Output::Text(format!("{p}\n"))
    }
}

fn cmd_sym(cfg: &CliConfig, cmd: &SymCommand) -> Result<Outcome> {
    let parse = |a: &PolyArg| GenPoly::parse(&a.poly, a.n);
    let pair = |p: &PolyPair| -> Result<(GenPoly, GenPoly)> {
        let l = GenPoly::parse(&p.left, p.n)?;
        let r = GenPoly::parse(&p.right, p.n)?;
        // Without --n both sides share the larger inferred ambient count.
        let n = p.n.unwrap_or(l.n().max(r.n()));
        Ok((l.with_ambient(n)?, r.with_ambient(n)?))
    };
    let output = match cmd {
        SymCommand::Shift(a) => poly_output(cfg, &shift_u(&parse(a)?)),
        SymCommand::Phi(a) => poly_output(cfg, &phi(&parse(a)?)),
        SymCommand::Alpha { k, n } => poly_output(cfg, &alpha_gen(*k, *n)?),
        SymCommand::Add(p) => {
            let (l, r) = pair(p)?;
            poly_output(cfg, &l.add(&r)?)
        }
        SymCommand::Mul(p) => {
            let (l, r) = pair(p)?;
            poly_output(cfg, &l.mul(&r)?)
        }
        SymCommand::Split(a) => {
            let (free, top) = split_by_top_generator(&parse(a)?);
            if cfg.json {
                Output::Json(json!({"free": free.to_string(), "with_top": top.to_string()}))
            } else {
                Output::Text(format!("free: {free}\nwith e{}: {top}\n", free.n()))
            }
        }
        SymCommand::Partition { n } => {
            let (image, complement) = generator_partition(*n)?;
            let image: Vec<String> = image.iter().map(ToString::to_string).collect();
            if cfg.json {
                Output::Json(json!({"image": image, "complement": complement.to_string()}))
            } else {
                let mut text: String = image
                    .iter()
                    .enumerate()
                    .map(|(k, g)| format!("alpha(e{}) = {g}\n", k + 1))
                    .collect();
                text.push_str(&format!("complement = {complement}\n"));
                Output::Text(text)
            }
        }
        SymCommand::Eval { poly, values } => {
            let xs = parse_values::<ExactComplex>(values)?;
            let p = GenPoly::parse(&poly.poly, Some(poly.n.unwrap_or(xs.len())))?;
            let v = eval_genpoly(&p, &xs)?;
            if cfg.json {
                let (re, im) = v.parts();
                Output::Json(json!({"mode": "exact", "value": [re, im]}))
            } else {
                Output::Text(format!("{}\n", v.literal()))
            }
        }
    };
    Ok(Outcome::ok(output))
}

fn dispatch<S: NearZero>(cfg: &CliConfig, command: &Command) -> Result<Outcome> {
    match command {
        Command::Eps { values } => cmd_eps::<S>(cfg, values),
        Command::FromRoots { roots } => cmd_from_roots::<S>(cfg, roots),
        Command::InsertZero {
            coeffs, lambda, x, ..
        } => cmd_insert_zero::<S>(cfg, coeffs, lambda.as_deref(), x.as_deref()),
        Command::Deflate { coeffs, lambda } => cmd_deflate::<S>(cfg, coeffs, lambda),
        Command::PolyEval { coeffs, at } => cmd_poly_eval::<S>(cfg, coeffs, at),
        Command::Verify {
            max_n,
            trials,
            seed,
            corrupt_recurrence,
        } => cmd_verify(
            cfg,
            VerifyConfig {
                max_n: *max_n,
                trials: *trials,
                seed: *seed,
            },
            *corrupt_recurrence,
        ),
        Command::Sym(cmd) => {
            if cfg.mode != Mode::Exact {
                return Err(EsymError::parse(cfg.mode.as_str(), "sym commands require --mode exact"));
            }
            cmd_sym(cfg, cmd)
        }
        Command::JavaCompat => unreachable!("handled before dispatch"),
    }
}

/// Parse `args` and run; returns the process exit status.
pub fn run<I, T, R, W, E>(args: I, stdin: R, stdout: &mut W, stderr: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    R: BufRead,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };

    if let Command::JavaCompat = cli.command {
        return match java_compat::run(stdin, stdout) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(stderr, "{e}");
                EXIT_FAILURE
            }
        };
    }

    let cfg = cli.config;
    let result = match cfg.mode {
        Mode::Exact => dispatch::<ExactComplex>(&cfg, &cli.command),
        Mode::Wrap64 => dispatch::<Wrap64Complex>(&cfg, &cli.command),
        Mode::Float => dispatch::<FloatComplex>(&cfg, &cli.command),
    };
    match result {
        Ok(outcome) => {
            let written = match outcome.output {
                Output::Text(text) => write!(stdout, "{text}"),
                Output::Json(v) => writeln!(stdout, "{v}"),
            };
            if written.is_err() {
                return EXIT_FAILURE;
            }
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}
