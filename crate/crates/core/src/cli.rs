//! Command-line front end. Exit codes: 0 success, 1 verification or oracle
//! failure, 2 usage error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use crate::closed_bounds::{
    gegenbauer_bounds, jacobi_bounds, laguerre_bounds, ratio_decomposition, rho, BoundValue, Quantity,
};
use crate::error::{Error, Result};
use crate::euler_rayleigh::{rayleigh_sequences, DEFAULT_K};
use crate::poly_core::{gegenbauer_as_jacobi, transformed_coeffs, GegenbauerParams, JacobiParams, LaguerreParams};
use crate::render::{fixed_f64, scalar, significant, significant_f64, terminating, Rounding, DEFAULT_DIGITS};
use crate::scalar::{rational_text, Number, Rational, Scalar};
use crate::verification::grid::{run_grid, GridSpec};
use crate::zero_oracle::{gegenbauer_zeros, jacobi_zeros, laguerre_zeros, largest_zero_shifted, ZeroSet};

pub const THREADS_ENV: &str = "EXTREMAL_ZEROS_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "extremal-zeros", version, about = "Bounds on the extreme zeros of classical orthogonal polynomials")]
pub struct Cli {
    /// Significant digits in decimal output.
    #[arg(long, global = true, default_value_t = DEFAULT_DIGITS, value_parser = clap::value_parser!(u32).range(1..=60))]
    pub digits: u32,

    /// Read every parameter as an exact rational, including decimals.
    #[arg(long, global = true)]
    pub exact: bool,

    /// Write CSV to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Euler-Rayleigh power for brackets.
    #[arg(long, global = true, default_value_t = DEFAULT_K, value_parser = parse_k)]
    pub k: usize,

    #[command(subcommand)]
    pub command: Command,
}

fn parse_k(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(k) if (1..=64).contains(&k) => Ok(k),
        _ => Err(format!("expected an integer in 1..=64, got {s:?}")),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Jacobi,
    Gegenbauer,
    Laguerre,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    pub family: FamilyArg,
    #[arg(short = 'n')]
    pub n: usize,
    /// α (Jacobi, Laguerre).
    #[arg(short = 'a', allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// β (Jacobi).
    #[arg(short = 'b', allow_hyphen_values = true)]
    pub beta: Option<String>,
    /// λ (Gegenbauer).
    #[arg(short = 'l', allow_hyphen_values = true)]
    pub lambda: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every closed-form bound plus the Euler-Rayleigh bracket.
    Bounds {
        #[command(flatten)]
        params: FamilyArgs,
        /// Compare with the certified zero oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Certified zeros.
    Zeros {
        #[command(flatten)]
        params: FamilyArgs,
    },
    /// Run a verification grid.
    Verify {
        /// Built-in grid (default, small, empty) or a TOML grid file.
        #[arg(long, default_value = "default")]
        grid: String,
    },
    /// ρ(λ) over a range of λ, optionally with φ and r at degree n.
    Fig1 {
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        from: String,
        #[arg(long, default_value = "10")]
        to: String,
        #[arg(long, default_value = "1")]
        step: String,
        #[arg(short = 'n')]
        n: Option<usize>,
    },
}

/// Failure classes, mapped onto exit codes.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) | Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Failed(e.to_string()),
        }
    }
}

type Table = (Vec<&'static str>, Vec<Vec<String>>);

struct Ctx<'a> {
    digits: u32,
    exact: bool,
    out: Option<PathBuf>,
    k: usize,
    stdout: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn number(&self, s: &str) -> Result<Number> {
        if self.exact {
            Number::parse_exact(s)
        } else {
            Number::parse(s)
        }
    }

    fn emit(&mut self, table: &Table) -> std::result::Result<(), Failure> {
        write_table(self.stdout, table).map_err(io_failure)?;
        if let Some(path) = &self.out {
            write_csv_file(path, table)?;
        }
        Ok(())
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::Failed(format!("output error: {e}"))
}

fn write_table(w: &mut dyn Write, (header, rows): &Table) -> std::io::Result<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string()
    };
    writeln!(w, "{}", line(header.clone()))?;
    for row in rows {
        writeln!(w, "{}", line(row.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out)
}

fn write_csv_file(path: &PathBuf, (header, rows): &Table) -> std::result::Result<(), Failure> {
    let file = File::create(path).map_err(|e| Failure::Usage(format!("cannot create {}: {e}", path.display())))?;
    let mut w = csv_writer(BufWriter::new(file));
    let csv_err = |e: csv::Error| Failure::Failed(format!("writing {}: {e}", path.display()));
    w.write_record(header).map_err(csv_err)?;
    for row in rows {
        w.write_record(row).map_err(csv_err)?;
    }
    w.flush().map_err(io_failure)
}

fn param_text(n: &Number) -> String {
    match n {
        Number::Exact(r) => terminating(r).unwrap_or_else(|| rational_text(r)),
        Number::Float(x) => format!("{x}"),
    }
}

fn required(value: &Option<String>, flag: &str, family: &str) -> std::result::Result<String, Failure> {
    value.clone().ok_or_else(|| Failure::Usage(format!("{family} needs {flag}")))
}

fn forbid(value: &Option<String>, flag: &str, family: &str) -> std::result::Result<(), Failure> {
    match value {
        Some(_) => Err(Failure::Usage(format!("{flag} does not apply to {family}"))),
        None => Ok(()),
    }
}

/// Family parameters after parsing, each on its own numeric path.
enum Parsed {
    Jacobi { n: usize, alpha: Number, beta: Number },
    Gegenbauer { n: usize, lambda: Number },
    Laguerre { n: usize, alpha: Number },
}

impl Parsed {
    fn from_args(ctx: &Ctx, a: &FamilyArgs) -> std::result::Result<Self, Failure> {
        let num = |s: String| ctx.number(&s).map_err(Failure::from);
        Ok(match a.family {
            FamilyArg::Jacobi => {
                forbid(&a.lambda, "-l", "jacobi")?;
                Parsed::Jacobi {
                    n: a.n,
                    alpha: num(required(&a.alpha, "-a", "jacobi")?)?,
                    beta: num(required(&a.beta, "-b", "jacobi")?)?,
                }
            }
            FamilyArg::Gegenbauer => {
                forbid(&a.alpha, "-a", "gegenbauer")?;
                forbid(&a.beta, "-b", "gegenbauer")?;
                Parsed::Gegenbauer { n: a.n, lambda: num(required(&a.lambda, "-l", "gegenbauer")?)? }
            }
            FamilyArg::Laguerre => {
                forbid(&a.beta, "-b", "laguerre")?;
                forbid(&a.lambda, "-l", "laguerre")?;
                Parsed::Laguerre { n: a.n, alpha: num(required(&a.alpha, "-a", "laguerre")?)? }
            }
        })
    }

    fn family(&self) -> &'static str {
        match self {
            Parsed::Jacobi { .. } => "jacobi",
            Parsed::Gegenbauer { .. } => "gegenbauer",
            Parsed::Laguerre { .. } => "laguerre",
        }
    }

    fn n(&self) -> usize {
        match self {
            Parsed::Jacobi { n, .. } | Parsed::Gegenbauer { n, .. } | Parsed::Laguerre { n, .. } => *n,
        }
    }

    fn params_text(&self) -> String {
        match self {
            Parsed::Jacobi { alpha, beta, .. } => format!("alpha={};beta={}", param_text(alpha), param_text(beta)),
            Parsed::Gegenbauer { lambda, .. } => format!("lambda={}", param_text(lambda)),
            Parsed::Laguerre { alpha, .. } => format!("alpha={}", param_text(alpha)),
        }
    }

    /// Exact only when every parameter is exact.
    fn exact(&self) -> bool {
        match self {
            Parsed::Jacobi { alpha, beta, .. } => alpha.is_exact() && beta.is_exact(),
            Parsed::Gegenbauer { lambda, .. } => lambda.is_exact(),
            Parsed::Laguerre { alpha, .. } => alpha.is_exact(),
        }
    }
}

/// Converts a parameter onto the chosen path.
trait FromNumber: Scalar {
    fn from_number(n: &Number) -> Self;
}

impl FromNumber for f64 {
    fn from_number(n: &Number) -> Self {
        n.to_f64()
    }
}

impl FromNumber for Rational {
    fn from_number(n: &Number) -> Self {
        n.to_rational().expect("parsed numbers are finite")
    }
}

const BOUNDS_HEADER: [&str; 10] =
    ["family", "n", "params", "quantity", "method", "value", "direction", "applicable", "oracle", "pass"];

struct BoundsOut<'a> {
    family: &'static str,
    n: usize,
    params: String,
    digits: u32,
    oracle: Option<&'a dyn Fn(Quantity) -> Result<f64>>,
}

impl BoundsOut<'_> {
    fn row<T: Scalar>(
        &self,
        quantity: Quantity,
        method: &str,
        value: &T,
        direction: &str,
        applicable: bool,
        holds: impl Fn(f64) -> bool,
    ) -> Result<Vec<String>> {
        let (oracle, pass) = match self.oracle {
            Some(f) => {
                let truth = f(quantity)?;
                let pass = if applicable { if holds(truth) { "PASS" } else { "FAIL" } } else { "N/A" };
                (significant_f64(truth, self.digits, Rounding::HalfEven), pass.to_string())
            }
            None => (String::new(), String::new()),
        };
        Ok(vec![
            self.family.to_string(),
            self.n.to_string(),
            self.params.clone(),
            quantity.label().to_string(),
            method.to_string(),
            scalar(value, self.digits, Rounding::HalfEven),
            direction.to_string(),
            applicable.to_string(),
            oracle,
            pass,
        ])
    }

    fn bound<T: Scalar>(&self, b: &BoundValue<T>) -> Result<Vec<String>> {
        self.row(b.quantity, b.source.label(), &b.value, b.direction.label(), b.applicable(), |t| b.holds_for(t))
    }

    fn bracket<T: Scalar>(&self, p: &JacobiParams<T>, k: usize) -> Result<Vec<Vec<String>>> {
        let bracket = rayleigh_sequences(&transformed_coeffs(p), k)?;
        let method = format!("EULER_RAYLEIGH_K{k}");
        let strict = p.n > 1;
        let (lo, hi) = (bracket.lower_1mx, bracket.upper_1mx);
        let (lo_f, hi_f) = (lo.to_f64(), hi.to_f64());
        Ok(vec![
            self.row(Quantity::OneMinusXnn, &method, &lo, "LOWER", true, |t| {
                if strict { t > lo_f } else { t >= lo_f }
            })?,
            self.row(Quantity::OneMinusXnn, &method, &hi, "UPPER", true, |t| {
                if strict { t < hi_f } else { t <= hi_f }
            })?,
        ])
    }
}

fn jacobi_truth(p: &JacobiParams<f64>, q: Quantity) -> Result<f64> {
    match q {
        Quantity::OneMinusXnn => Ok(largest_zero_shifted(p)?.one_minus_x),
        Quantity::OnePlusX1n => Ok(largest_zero_shifted(&p.swapped())?.one_minus_x),
        Quantity::OneMinusXnnSq => {
            let y = largest_zero_shifted(p)?.one_minus_x;
            Ok(y * (2.0 - y))
        }
        Quantity::SmallestLaguerreZero => Err(Error::Domain("not a Jacobi quantity".into())),
    }
}

fn bounds_rows<T: Scalar + FromNumber>(parsed: &Parsed, digits: u32, k: usize, oracle: bool) -> Result<Vec<Vec<String>>> {
    let n = parsed.n();
    let mut out = BoundsOut { family: parsed.family(), n, params: parsed.params_text(), digits, oracle: None };
    let mut rows = Vec::new();
    match parsed {
        Parsed::Jacobi { alpha, beta, .. } => {
            let p = JacobiParams::new(n, T::from_number(alpha), T::from_number(beta))?;
            let pf = p.to_f64();
            let truth = move |q: Quantity| jacobi_truth(&pf, q);
            if oracle {
                out.oracle = Some(&truth);
            }
            for b in jacobi_bounds(&p) {
                rows.push(out.bound(&b)?);
            }
            rows.extend(out.bracket(&p, k)?);
        }
        Parsed::Gegenbauer { lambda, .. } => {
            let g = GegenbauerParams::new(n, T::from_number(lambda))?;
            let p = gegenbauer_as_jacobi(&g)?;
            let pf = p.to_f64();
            let truth = move |q: Quantity| jacobi_truth(&pf, q);
            if oracle {
                out.oracle = Some(&truth);
            }
            for b in gegenbauer_bounds(&g)? {
                rows.push(out.bound(&b)?);
            }
            rows.extend(out.bracket(&p, k)?);
        }
        Parsed::Laguerre { alpha, .. } => {
            let l = LaguerreParams::new(n, T::from_number(alpha))?;
            let lf = l.to_f64();
            let truth = move |_: Quantity| laguerre_zeros(&lf).map(|z| z.smallest());
            if oracle {
                out.oracle = Some(&truth);
            }
            for b in laguerre_bounds(&l) {
                rows.push(out.bound(&b)?);
            }
        }
    }
    Ok(rows)
}

fn cmd_bounds(ctx: &mut Ctx, args: &FamilyArgs, oracle: bool) -> std::result::Result<(), Failure> {
    let parsed = Parsed::from_args(ctx, args)?;
    let rows = if parsed.exact() {
        bounds_rows::<Rational>(&parsed, ctx.digits, ctx.k, oracle)?
    } else {
        bounds_rows::<f64>(&parsed, ctx.digits, ctx.k, oracle)?
    };
    let failed = rows.iter().any(|r| r[9] == "FAIL");
    ctx.emit(&(BOUNDS_HEADER.to_vec(), rows))?;
    if failed {
        return Err(Failure::Failed("a bound disagrees with the oracle".into()));
    }
    Ok(())
}

fn cmd_zeros(ctx: &mut Ctx, args: &FamilyArgs) -> std::result::Result<(), Failure> {
    let parsed = Parsed::from_args(ctx, args)?;
    let set: ZeroSet = match &parsed {
        Parsed::Jacobi { n, alpha, beta } => jacobi_zeros(&JacobiParams::new(*n, alpha.to_f64(), beta.to_f64())?)?,
        Parsed::Gegenbauer { n, lambda } => gegenbauer_zeros(&GegenbauerParams::new(*n, lambda.to_f64())?)?,
        Parsed::Laguerre { n, alpha } => laguerre_zeros(&LaguerreParams::new(*n, alpha.to_f64())?)?,
    };
    let err = significant_f64(set.certified_abs_error, 3, Rounding::Ceil);
    let rows = set
        .zeros
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            vec![
                parsed.family().to_string(),
                parsed.n().to_string(),
                parsed.params_text(),
                (i + 1).to_string(),
                fixed_f64(x, ctx.digits, Rounding::HalfEven),
                err.clone(),
            ]
        })
        .collect();
    ctx.emit(&(vec!["family", "n", "params", "index", "zero", "certified_error"], rows))
}

fn threads_from_env() -> std::result::Result<usize, Failure> {
    match std::env::var(THREADS_ENV) {
        Ok(v) if !v.trim().is_empty() => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{THREADS_ENV} must be a non-negative integer, got {v:?}"))),
        _ => Ok(0),
    }
}

fn cmd_verify(ctx: &mut Ctx, grid: &str) -> std::result::Result<(), Failure> {
    let spec = GridSpec::resolve(grid).map_err(|e| Failure::Usage(e.to_string()))?;
    let threads = threads_from_env()?;
    let report = run_grid(&spec, threads)?;
    if let Some(path) = &ctx.out {
        let file = File::create(path).map_err(|e| Failure::Usage(format!("cannot create {}: {e}", path.display())))?;
        report.write_csv(BufWriter::new(file), ctx.digits)?;
    }
    let s = report.summary;
    writeln!(
        ctx.stdout,
        "grid {}: {} rows, {} passed, {} failed, {} not applicable",
        report.name, s.rows, s.passed, s.failed, s.not_applicable
    )
    .map_err(io_failure)?;
    match report.first_failure() {
        None => {
            writeln!(ctx.stdout, "PASS").map_err(io_failure)?;
            Ok(())
        }
        Some(row) => {
            let mut line = row.record(ctx.digits).join(",");
            if !row.note.is_empty() {
                line = format!("{line} ({})", row.note);
            }
            writeln!(ctx.stdout, "FAIL first failing row: {line}").map_err(io_failure)?;
            Err(Failure::Failed("verification failed".into()))
        }
    }
}

fn lambda_text(r: &Rational, digits: u32) -> String {
    terminating(r).unwrap_or_else(|| significant(r, digits, Rounding::HalfEven))
}

fn cmd_fig1(ctx: &mut Ctx, from: &str, to: &str, step: &str, n: Option<usize>) -> std::result::Result<(), Failure> {
    let parse = |s: &str| Number::parse_exact(s).map(|v| v.to_rational().expect("exact")).map_err(Failure::from);
    let (from, to, step) = (parse(from)?, parse(to)?, parse(step)?);
    let half = Rational::new((-1).into(), 2.into());
    if from <= half {
        return Err(Failure::Usage("--from must exceed -1/2".into()));
    }
    if step <= Rational::zero() {
        return Err(Failure::Usage("--step must be positive".into()));
    }
    if to < from {
        return Err(Failure::Usage("--to must not be below --from".into()));
    }
    if n == Some(0) {
        return Err(Failure::Usage("-n must be at least 1".into()));
    }
    let count = ((&to - &from) / &step).floor().to_integer();
    let count: usize = count
        .try_into()
        .ok()
        .filter(|&c: &usize| c < 1_000_000)
        .ok_or_else(|| Failure::Usage("too many rows; use a larger --step".into()))?;
    let d = ctx.digits;
    let mut rows = Vec::with_capacity(count + 1);
    for i in 0..=count {
        let lambda = &from + &step * Rational::from_usize(i);
        let mut row = vec![lambda_text(&lambda, d)];
        match n {
            None => row.push(significant(&rho(&lambda), d, Rounding::HalfEven)),
            Some(n) => {
                let dec = ratio_decomposition(&GegenbauerParams::new(n, lambda.clone())?);
                row.push(n.to_string());
                for v in [&dec.rho, &dec.phi, &dec.r] {
                    row.push(significant(v, d, Rounding::HalfEven));
                }
            }
        }
        rows.push(row);
    }
    let header = match n {
        None => vec!["lambda", "rho"],
        Some(_) => vec!["lambda", "n", "rho", "phi", "r"],
    };
    let table = (header, rows);
    match ctx.out.clone() {
        Some(path) => write_csv_file(&path, &table),
        None => {
            let mut w = csv_writer(&mut *ctx.stdout);
            let csv_err = |e: csv::Error| Failure::Failed(format!("writing CSV: {e}"));
            w.write_record(&table.0).map_err(csv_err)?;
            for row in &table.1 {
                w.write_record(row).map_err(csv_err)?;
            }
            w.flush().map_err(io_failure)
        }
    }
}


/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(stderr, "{text}") } else { write!(stdout, "{text}") };
            return code;
        }
    };
    let mut ctx = Ctx { digits: cli.digits, exact: cli.exact, out: cli.out.clone(), k: cli.k, stdout };
    let result = match &cli.command {
        Command::Bounds { params, oracle } => cmd_bounds(&mut ctx, params, *oracle),
        Command::Zeros { params } => cmd_zeros(&mut ctx, params),
        Command::Verify { grid } => cmd_verify(&mut ctx, grid),
        Command::Fig1 { from, to, step, n } => cmd_fig1(&mut ctx, from, to, step, *n),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Failed(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_FAILURE
        }
    }
}
