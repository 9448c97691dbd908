//! Command-line driver for the lattice interpolation library.
//!
//! Five subcommands expose the library over uniform flags:
//!
//! * `coeffs` — the optimal coefficient vector at one evaluation point;
//! * `interp` — interpolant values at a point or over a uniform grid,
//!   with true-value and error columns when the data comes from a builtin;
//! * `error-norm` — the worst-case squared interpolation error;
//! * `convergence` — error and norm decay across a list of lattice sizes;
//! * `quad` — the nodal rectangle rule against midpoint quadrature of the
//!   interpolant.
//!
//! Output is CSV by default (`--format json-lines` switches to one JSON
//! object per row) and goes to stdout unless `--output FILE` is given.
//!
//! Exit codes: 0 success; 2 invalid flags or flag values; 3 unreadable or
//! malformed sample files; 4 numeric failure reported by the library.

mod samples;
mod table;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use lattice_interp::{
    error_norm_squared, integrate_interpolant, interpolate, optimal_coefficients, rectangle_rule,
    Error, LatticeGrid, PeriodicPoint, SampledPeriodicFunction, SeriesControl, SmoothnessOrder,
};

use samples::parse_samples;
use table::{Cell, Table};

/// Exit code for invalid flag combinations or flag values.
const EXIT_USAGE: u8 = 2;
/// Exit code for unreadable or malformed sample files.
const EXIT_SAMPLES: u8 = 3;
/// Exit code for numeric failures reported by the library.
const EXIT_NUMERIC: u8 = 4;

/// A classified failure: which exit code to use and what to print.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }

    fn samples(message: impl Into<String>) -> Self {
        Failure { code: EXIT_SAMPLES, message: message.into() }
    }

    fn numeric(err: Error) -> Self {
        Failure { code: EXIT_NUMERIC, message: err.to_string() }
    }
}

#[derive(Parser)]
#[command(
    name = "lattice-interp",
    version,
    about = "Optimal interpolation on uniform periodic lattices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the optimal coefficient vector at an evaluation point.
    Coeffs(CoeffsArgs),
    /// Interpolate sampled data at a point or over a uniform grid.
    Interp(InterpArgs),
    /// Evaluate the worst-case squared interpolation error.
    ErrorNorm(ErrorNormArgs),
    /// Measure error decay across a list of lattice sizes.
    Convergence(ConvergenceArgs),
    /// Compare the rectangle rule with quadrature of the interpolant.
    Quad(QuadArgs),
}

/// Convergence controls for the certified lattice sums.
#[derive(Args)]
struct SeriesArgs {
    /// Absolute tolerance for certified series tails.
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Term budget before a series is reported as not converged.
    #[arg(long = "max-terms", default_value_t = 100_000)]
    max_terms: usize,
}

/// Output destination and encoding.
#[derive(Args)]
struct OutputArgs {
    /// Output encoding.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write rows to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy)]
enum Format {
    /// Comma-separated values with a header line.
    Csv,
    /// One JSON object per row.
    JsonLines,
}

/// Builtin sample functions for demonstrations and cross-checks.
#[derive(ValueEnum, Clone, Copy)]
enum Builtin {
    /// sin(2πx).
    Sin2pi,
    /// The degree-10 periodic Bernoulli polynomial
    /// x¹⁰ − 5x⁹ + 7.5x⁸ − 7x⁶ + 5x⁴ − 1.5x² + 5/66 on the fractional part.
    Bernoulli10,
}

impl Builtin {
    fn function(self) -> fn(f64) -> f64 {
        match self {
            Builtin::Sin2pi => sin2pi,
            Builtin::Bernoulli10 => bernoulli10,
        }
    }
}

fn sin2pi(x: f64) -> f64 {
    (2.0 * std::f64::consts::PI * x).sin()
}

fn bernoulli10(x: f64) -> f64 {
    const COEFFS: [f64; 11] = [
        1.0,
        -5.0,
        7.5,
        0.0,
        -7.0,
        0.0,
        5.0,
        0.0,
        -1.5,
        0.0,
        5.0 / 66.0,
    ];
    let t = x - x.floor();
    COEFFS.iter().fold(0.0, |acc, &c| acc * t + c)
}

#[derive(Args)]
struct CoeffsArgs {
    /// Smoothness order (1..=12).
    #[arg(long = "m")]
    m: u32,
    /// Lattice size (at least 2).
    #[arg(long = "N")]
    n: u32,
    /// Evaluation point; any real number, reduced periodically.
    #[arg(long = "z")]
    z: f64,
    /// Print only the coefficient of this node (1..=N).
    #[arg(long = "beta")]
    beta: Option<u32>,
    #[command(flatten)]
    series: SeriesArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["builtin", "input"])))]
#[command(group(ArgGroup::new("points").required(true).args(["z", "grid"])))]
struct InterpArgs {
    /// Smoothness order (1..=12).
    #[arg(long = "m")]
    m: u32,
    /// Lattice size; required with --builtin, checked against --input.
    #[arg(long = "N")]
    n: Option<u32>,
    /// Single evaluation point.
    #[arg(long = "z")]
    z: Option<f64>,
    /// Evaluate at the K+1 uniform points i/K.
    #[arg(long = "grid")]
    grid: Option<u32>,
    /// Sample a builtin function at the lattice nodes.
    #[arg(long, value_enum)]
    builtin: Option<Builtin>,
    /// Read samples from a file ('beta,value' rows or one value per line).
    #[arg(long)]
    input: Option<PathBuf>,
    #[command(flatten)]
    series: SeriesArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
#[command(group(ArgGroup::new("points").required(true).args(["z", "grid"])))]
struct ErrorNormArgs {
    /// Smoothness order (1..=12).
    #[arg(long = "m")]
    m: u32,
    /// Lattice size (at least 2).
    #[arg(long = "N")]
    n: u32,
    /// Single evaluation point.
    #[arg(long = "z")]
    z: Option<f64>,
    /// Evaluate at the K+1 uniform points i/K.
    #[arg(long = "grid")]
    grid: Option<u32>,
    #[command(flatten)]
    series: SeriesArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct ConvergenceArgs {
    /// Smoothness order (1..=12).
    #[arg(long = "m")]
    m: u32,
    /// Comma-separated lattice sizes, e.g. 4,8,16,32.
    #[arg(long = "N", value_delimiter = ',', num_args = 1..)]
    n: Vec<u32>,
    /// Builtin function providing the samples and the true values.
    #[arg(long, value_enum)]
    builtin: Builtin,
    /// Resolution of the measurement grid: K+1 uniform points i/K.
    #[arg(long = "grid", default_value_t = 500)]
    grid: u32,
    #[command(flatten)]
    series: SeriesArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["builtin", "input"])))]
struct QuadArgs {
    /// Smoothness order (1..=12).
    #[arg(long = "m")]
    m: u32,
    /// Lattice size; required with --builtin, checked against --input.
    #[arg(long = "N")]
    n: Option<u32>,
    /// Sample a builtin function at the lattice nodes.
    #[arg(long, value_enum)]
    builtin: Option<Builtin>,
    /// Read samples from a file ('beta,value' rows or one value per line).
    #[arg(long)]
    input: Option<PathBuf>,
    #[command(flatten)]
    series: SeriesArgs,
    #[command(flatten)]
    out: OutputArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Coeffs(a) => {
            let t = cmd_coeffs(&a)?;
            write_table(&t, &a.out)
        }
        Command::Interp(a) => {
            let t = cmd_interp(&a)?;
            write_table(&t, &a.out)
        }
        Command::ErrorNorm(a) => {
            let t = cmd_error_norm(&a)?;
            write_table(&t, &a.out)
        }
        Command::Convergence(a) => {
            let t = cmd_convergence(&a)?;
            write_table(&t, &a.out)
        }
        Command::Quad(a) => {
            let t = cmd_quad(&a)?;
            write_table(&t, &a.out)
        }
    }
}

fn write_table(table: &Table, out: &OutputArgs) -> Result<(), Failure> {
    let rendered = match out.format {
        Format::Csv => table.to_csv(),
        Format::JsonLines => table.to_json_lines(),
    };
    match &out.output {
        None => {
            print!("{rendered}");
            Ok(())
        }
        Some(path) => fs::write(path, rendered)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
    }
}

// ---------------------------------------------------------------------------
// Flag-to-library adapters. Construction failures are usage errors (exit 2);
// anything the library reports after that point is a numeric error (exit 4).
// ---------------------------------------------------------------------------

fn parse_order(m: u32) -> Result<SmoothnessOrder, Failure> {
    SmoothnessOrder::new(m).map_err(|e| Failure::usage(e.to_string()))
}

fn parse_grid_size(n: u32) -> Result<LatticeGrid, Failure> {
    LatticeGrid::new(n).map_err(|e| Failure::usage(e.to_string()))
}

fn parse_point(z: f64) -> Result<PeriodicPoint, Failure> {
    PeriodicPoint::new(z).map_err(|e| Failure::usage(e.to_string()))
}

fn parse_control(series: &SeriesArgs) -> Result<SeriesControl, Failure> {
    SeriesControl::new(series.max_terms, series.tol).map_err(|e| Failure::usage(e.to_string()))
}

/// Warns when N < m: every result is still computed, but the sharp error
/// characterization is only guaranteed for N ≥ m.
fn warn_below_validity(m: SmoothnessOrder, n: u32) {
    if n < m.get() {
        eprintln!(
            "warning: lattice size N={n} is below the smoothness order m={}; \
             results are outside the stated validity range",
            m.get()
        );
    }
}

/// Expands `--z Z` or `--grid K` into the list of evaluation points.
///
/// Grid points are the K+1 values i/K including both endpoints; rows echo
/// the points exactly as produced here, before any periodic reduction.
fn points_from(z: Option<f64>, grid: Option<u32>) -> Result<Vec<f64>, Failure> {
    match (z, grid) {
        (Some(z), None) => Ok(vec![z]),
        (None, Some(0)) => Err(Failure::usage("--grid must be at least 1")),
        (None, Some(k)) => Ok((0..=k).map(|i| f64::from(i) / f64::from(k)).collect()),
        _ => unreachable!("the flag group admits exactly one of --z/--grid"),
    }
}

/// Builds the sampled function from either source flag.
///
/// Returns the samples plus the underlying function when one exists (builtin
/// sources only), so callers can emit true-value columns.
#[allow(clippy::type_complexity)]
fn load_samples(
    n: Option<u32>,
    builtin: Option<Builtin>,
    input: Option<&Path>,
) -> Result<(SampledPeriodicFunction, Option<fn(f64) -> f64>), Failure> {
    match (builtin, input) {
        (Some(builtin), None) => {
            let n = n.ok_or_else(|| Failure::usage("--N is required with --builtin"))?;
            let grid = parse_grid_size(n)?;
            let f = builtin.function();
            let phi = SampledPeriodicFunction::from_fn(grid, f).map_err(Failure::numeric)?;
            Ok((phi, Some(f)))
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::samples(format!("cannot read {}: {e}", path.display())))?;
            let values = parse_samples(&text).map_err(Failure::samples)?;
            if let Some(n) = n {
                if n as usize != values.len() {
                    return Err(Failure::samples(format!(
                        "samples file has {} rows but --N {n} was given",
                        values.len()
                    )));
                }
            }
            let grid = LatticeGrid::new(values.len() as u32)
                .map_err(|e| Failure::samples(e.to_string()))?;
            let phi = SampledPeriodicFunction::new(grid, values)
                .map_err(|e| Failure::samples(e.to_string()))?;
            Ok((phi, None))
        }
        _ => unreachable!("the flag group admits exactly one of --builtin/--input"),
    }
}

// ---------------------------------------------------------------------------
// Subcommands.
// ---------------------------------------------------------------------------

fn cmd_coeffs(a: &CoeffsArgs) -> Result<Table, Failure> {
    let m = parse_order(a.m)?;
    let grid = parse_grid_size(a.n)?;
    let z = parse_point(a.z)?;
    let ctl = parse_control(&a.series)?;
    if let Some(beta) = a.beta {
        if !(1..=a.n).contains(&beta) {
            return Err(Failure::usage(format!(
                "--beta {beta} is outside the node range 1..={}",
                a.n
            )));
        }
    }
    warn_below_validity(m, a.n);
    let c = optimal_coefficients(m, grid, z, &ctl).map_err(Failure::numeric)?;
    let betas: Vec<u32> = match a.beta {
        Some(only) => vec![only],
        None => (1..=a.n).collect(),
    };
    let mut table = Table::new(&["beta", "z", "C"]);
    for beta in betas {
        table.push(vec![
            Cell::Int(beta.into()),
            Cell::Float(a.z),
            Cell::Float(c.value(beta)),
        ]);
    }
    Ok(table)
}

fn cmd_interp(a: &InterpArgs) -> Result<Table, Failure> {
    let m = parse_order(a.m)?;
    let ctl = parse_control(&a.series)?;
    let (phi, truth) = load_samples(a.n, a.builtin, a.input.as_deref())?;
    warn_below_validity(m, phi.grid().size());
    let points = points_from(a.z, a.grid)?;
    let mut table = match truth {
        Some(_) => Table::new(&["z", "P_phi", "phi_true", "abs_err"]),
        None => Table::new(&["z", "P_phi"]),
    };
    for &z in &points {
        let p = interpolate(&phi, m, parse_point(z)?, &ctl).map_err(Failure::numeric)?;
        match truth {
            Some(f) => {
                let t = f(z);
                table.push(vec![
                    Cell::Float(z),
                    Cell::Float(p),
                    Cell::Float(t),
                    Cell::Float((p - t).abs()),
                ]);
            }
            None => table.push(vec![Cell::Float(z), Cell::Float(p)]),
        }
    }
    Ok(table)
}

fn cmd_error_norm(a: &ErrorNormArgs) -> Result<Table, Failure> {
    let m = parse_order(a.m)?;
    let grid = parse_grid_size(a.n)?;
    let ctl = parse_control(&a.series)?;
    warn_below_validity(m, a.n);
    let points = points_from(a.z, a.grid)?;
    let mut table = Table::new(&["z", "norm_sq"]);
    for &z in &points {
        let v = error_norm_squared(m, grid, parse_point(z)?, &ctl).map_err(Failure::numeric)?;
        table.push(vec![Cell::Float(z), Cell::Float(v)]);
    }
    Ok(table)
}

fn cmd_convergence(a: &ConvergenceArgs) -> Result<Table, Failure> {
    let m = parse_order(a.m)?;
    let ctl = parse_control(&a.series)?;
    if a.grid == 0 {
        return Err(Failure::usage("--grid must be at least 1"));
    }
    let f = a.builtin.function();
    let mut table = Table::new(&["N", "max_abs_err", "max_norm_sq", "empirical_order"]);
    let mut previous: Option<(u32, f64)> = None;
    for &n in &a.n {
        let grid = parse_grid_size(n)?;
        warn_below_validity(m, n);
        let phi = SampledPeriodicFunction::from_fn(grid, f).map_err(Failure::numeric)?;
        let mut max_err = 0.0_f64;
        let mut max_norm = 0.0_f64;
        for i in 0..=a.grid {
            let zf = f64::from(i) / f64::from(a.grid);
            let z = parse_point(zf)?;
            let p = interpolate(&phi, m, z, &ctl).map_err(Failure::numeric)?;
            max_err = max_err.max((p - f(zf)).abs());
            let v = error_norm_squared(m, grid, z, &ctl).map_err(Failure::numeric)?;
            max_norm = max_norm.max(v);
        }
        // Decay order between consecutive rows: log of the error ratio over
        // the log of the size ratio (equals the base-2 ratio when N doubles).
        // The first row, repeated sizes, and vanished errors leave it blank.
        let order = match previous {
            Some((pn, pe)) if pn != n && pe > 0.0 && max_err > 0.0 => {
                Cell::Float((pe / max_err).ln() / (f64::from(n) / f64::from(pn)).ln())
            }
            _ => Cell::Blank,
        };
        table.push(vec![
            Cell::Int(n.into()),
            Cell::Float(max_err),
            Cell::Float(max_norm),
            order,
        ]);
        previous = Some((n, max_err));
    }
    Ok(table)
}

fn cmd_quad(a: &QuadArgs) -> Result<Table, Failure> {
    let m = parse_order(a.m)?;
    let ctl = parse_control(&a.series)?;
    let (phi, _) = load_samples(a.n, a.builtin, a.input.as_deref())?;
    warn_below_validity(m, phi.grid().size());
    let rect = rectangle_rule(&phi);
    let panels = 10 * phi.grid().size();
    let quad = integrate_interpolant(&phi, m, &ctl, panels).map_err(Failure::numeric)?;
    let mut table = Table::new(&["rectangle_value", "interpolant_integral", "abs_diff"]);
    table.push(vec![
        Cell::Float(rect),
        Cell::Float(quad),
        Cell::Float((rect - quad).abs()),
    ]);
    Ok(table)
}
