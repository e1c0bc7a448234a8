//! The `qhm` command-line tool.
//!
//! ```text
//! qhm verify <FILE> [--oracle N] [--seed S]
//! qhm normal-form <FILE>
//! qhm generate hopf <n> | clifford <n> | phi-t <lambda> <t> | lift <FILE>
//! qhm classify <FILE>
//! ```
//!
//! `FILE` may be `-` for standard input. Global flags: `--json` for one-line
//! JSON reports, `--tol EPS` for the relative float tolerance (default from
//! `QHM_TOL`, else `1e-9`), `--out PATH` to write the output to a file.
//!
//! Exit codes: 0 success, 1 the input fails the mathematical requirement of
//! the command, 2 usage, parse or parameter error.

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::classify43::{self, UnitPhase};
use crate::clifford::{irreducible, qhm_from_clifford};
use crate::constructions::{complete_lift, hopf_construction};
use crate::error::Error;
use crate::map::QuadraticMap;
use crate::mapfile::{read_map, write_any, AnyMap};
use crate::report::{matrix_value, scalar_value, Report};
use crate::scalar::{is_exact_token, Rational, Scalar, Tolerance};
use crate::spectral::{is_umbilical, normal_form, q_rank, spectrum_report};
use crate::verify::{check_harmonic_morphism_with, conformality_oracle_with};

pub const TOLERANCE_ENV: &str = "QHM_TOL";

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qhm", version, about = "Quadratic harmonic morphisms between Euclidean spaces")]
pub struct Cli {
    /// Print reports as a single JSON line.
    #[arg(long, global = true)]
    pub json: bool,
    /// Relative tolerance for floating-point maps.
    #[arg(long, global = true, value_name = "EPS")]
    pub tol: Option<f64>,
    /// Write the output to PATH instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a map file is a harmonic morphism.
    Verify {
        file: String,
        /// Also run the sampling conformality check at N points.
        #[arg(long, value_name = "N")]
        oracle: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Q-rank, spectra, block normal form and umbilicity.
    NormalForm { file: String },
    /// Write a map file produced by one of the constructions.
    Generate {
        #[command(subcommand)]
        kind: Generator,
    },
    /// Witnesses exhibiting an R^4 -> R^3 morphism as a rotated multiple of the standard map.
    Classify { file: String },
}

#[derive(Debug, Subcommand)]
pub enum Generator {
    /// Hopf construction R^{2n} -> R^{n+1}, n in {1, 2, 4, 8}.
    Hopf { n: usize },
    /// Map of the irreducible Clifford system with n + 1 members.
    Clifford { n: usize },
    /// The R^4 -> R^3 family member with scale LAMBDA and angle T (radians).
    PhiT {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(allow_hyphen_values = true)]
        t: String,
    },
    /// Complete lift R^{2m} -> R^n of a harmonic morphism.
    Lift { file: String },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

type CmdResult = std::result::Result<Output, Failure>;

enum Output {
    Report(Report, bool),
    Text(String),
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn domain(err: Error) -> Failure {
    Failure { code: EXIT_DOMAIN, message: err.to_string() }
}

/// Generator parameters out of range are usage errors; anything else the
/// mathematics rejects is a domain failure.
fn generator_error(err: Error) -> Failure {
    match err {
        Error::UnsupportedDimension(_) | Error::ZeroCliffordIndex | Error::ZeroScale => usage(err.to_string()),
        other => domain(other),
    }
}

fn resolve_tolerance(flag: Option<f64>) -> std::result::Result<Tolerance, Failure> {
    let rel = match flag {
        Some(v) => v,
        None => match std::env::var(TOLERANCE_ENV) {
            Ok(s) => s.trim().parse().map_err(|_| usage(format!("{TOLERANCE_ENV}={s} is not a number")))?,
            Err(_) => Tolerance::DEFAULT_REL,
        },
    };
    if !(rel.is_finite() && rel > 0.0) {
        return Err(usage(format!("tolerance must be positive and finite (got {rel})")));
    }
    Ok(Tolerance::relative(rel))
}

fn load(file: &str, stdin: &mut dyn Read) -> std::result::Result<AnyMap, Failure> {
    let text = if file == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(|e| usage(format!("reading standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(file).map_err(|e| usage(format!("{file}: {e}")))?
    };
    read_map(&text).map_err(|e| usage(format!("{file}: {e}")))
}

fn violations<T: Scalar>(pairs: impl Iterator<Item = (usize, usize, T)>) -> Value {
    Value::Array(pairs.map(|(i, j, r)| json!({"i": i, "j": j, "residual": scalar_value(&r)})).collect())
}

fn mode_name<T: Scalar>() -> &'static str {
    if T::EXACT {
        "exact"
    } else {
        "float"
    }
}

fn verify_report<T: Scalar>(map: &QuadraticMap<T>, tol: Tolerance, oracle: Option<usize>, seed: u64) -> (Report, bool) {
    let hm = check_harmonic_morphism_with(map, tol);
    let mut r = Report::new();
    r.insert("command", "verify")
        .insert("mode", mode_name::<T>())
        .insert("m", map.domain_dim())
        .insert("n", map.codomain_dim())
        .insert("harmonic", hm.is_harmonic)
        .insert("anticommute", hm.anticommute_violations.is_empty())
        .insert("equal_squares", hm.square_violations.is_empty())
        .insert("hwc", hm.is_hwc)
        .insert("constant", hm.is_constant)
        .insert("harmonic_morphism", hm.is_harmonic_morphism)
        .insert(
            "trace_violations",
            Value::Array(
                hm.trace_violations
                    .iter()
                    .map(|v| json!({"index": v.index, "trace": scalar_value(&v.trace)}))
                    .collect(),
            ),
        )
        .insert(
            "anticommute_violations",
            violations(hm.anticommute_violations.into_iter().map(|v| (v.i, v.j, v.residual))),
        )
        .insert("square_violations", violations(hm.square_violations.into_iter().map(|v| (v.i, v.j, v.residual))));
    if let Some(samples) = oracle {
        let conformal = conformality_oracle_with(map, samples, seed, tol);
        r.insert("oracle_samples", samples).insert("oracle_seed", seed).insert("oracle_conformal", conformal);
    }
    (r, hm.is_harmonic_morphism)
}

fn normal_form_report<T: Scalar>(map: &QuadraticMap<T>) -> std::result::Result<Report, Error> {
    let spectrum = spectrum_report(map)?;
    let rank = q_rank(map)?;
    let nf = normal_form(map)?;
    let (umbilical, positives) = is_umbilical(map)?;
    let mut r = Report::new();
    r.insert("command", "normal-form")
        .insert("mode", mode_name::<T>())
        .insert("m", map.domain_dim())
        .insert("n", map.codomain_dim())
        .insert("q_rank", rank)
        .insert("k", nf.k)
        .insert("r", nf.r)
        .insert("component_ranks", spectrum.ranks.clone())
        .insert("rank_is_even", spectrum.rank_is_even)
        .insert("spectra_equal", spectrum.spectra_equal)
        .insert("plus_minus_paired", spectrum.plus_minus_paired)
        .insert("spectrum_exact", spectrum.exact)
        .insert_f64s("eigenvalues", &spectrum.eigenvalues[0])
        .insert_f64s("positive_eigenvalues", &positives)
        .insert("umbilical", umbilical);
    if umbilical {
        let a = map.component(0).matrix();
        let lambda2 = a.mul(a).trace() / T::from_i64(rank as i64);
        match lambda2.sqrt_exact() {
            Some(l) => r.insert_scalar("lambda", &l),
            None => r.insert_f64("lambda", lambda2.to_f64().sqrt()),
        };
    }
    r.insert_f64s("d", &nf.d)
        .insert("blocks", Value::Array(nf.blocks.iter().map(matrix_value).collect()))
        .insert_matrix("p", &nf.p)
        .insert_f64("constraint_residual", nf.constraint_residual());
    Ok(r)
}

fn classify_report<T: Scalar>(map: &QuadraticMap<T>) -> std::result::Result<Report, Error> {
    let c = classify43::classify(map)?;
    let sphere = classify43::sphere_restriction_check(map)?;
    let mut r = Report::new();
    r.insert("command", "classify")
        .insert_f64("lambda", c.lambda)
        .insert_f64("t", c.t)
        .insert("orientation_flipped", c.orientation_flipped)
        .insert_matrix("p", &c.p)
        .insert_matrix("g", &c.g)
        .insert_f64("residual", c.residual(map, 50, 0))
        .insert("sphere_restriction", sphere);
    Ok(r)
}

fn phi_t_map(lambda: &str, t: &str) -> std::result::Result<AnyMap, Failure> {
    let bad = |what: &str, tok: &str| usage(format!("invalid {what} `{tok}`"));
    let angle: f64 = t.parse().ok().filter(|v: &f64| v.is_finite()).ok_or_else(|| bad("angle", t))?;
    if is_exact_token(lambda) && angle == 0.0 {
        let l = Rational::parse_token(lambda).map_err(|_| bad("scale", lambda))?;
        return classify43::hopf_standard(l).map(AnyMap::Exact).map_err(generator_error);
    }
    let l = f64::parse_token(lambda).map_err(|_| bad("scale", lambda))?;
    classify43::phi_t(l, &UnitPhase::from_angle(angle)).map(AnyMap::Float).map_err(generator_error)
}

fn generate(kind: &Generator, stdin: &mut dyn Read) -> CmdResult {
    let map = match kind {
        Generator::Hopf { n } => hopf_construction::<Rational>(*n).map(AnyMap::Exact).map_err(generator_error)?,
        Generator::Clifford { n } => irreducible::<Rational>(*n)
            .and_then(|s| qhm_from_clifford(&s))
            .map(AnyMap::Exact)
            .map_err(generator_error)?,
        Generator::PhiT { lambda, t } => phi_t_map(lambda, t)?,
        Generator::Lift { file } => match load(file, stdin)? {
            AnyMap::Exact(m) => AnyMap::Exact(complete_lift(&m).map_err(domain)?),
            AnyMap::Float(m) => AnyMap::Float(complete_lift(&m).map_err(domain)?),
        },
    };
    Ok(Output::Text(write_any(&map)))
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> CmdResult {
    let tol = resolve_tolerance(cli.tol)?;
    match &cli.command {
        Command::Verify { file, oracle, seed } => {
            let (report, ok) = match load(file, stdin)? {
                AnyMap::Exact(m) => verify_report(&m, tol, *oracle, *seed),
                AnyMap::Float(m) => verify_report(&m, tol, *oracle, *seed),
            };
            Ok(Output::Report(report, ok))
        }
        Command::NormalForm { file } => {
            let report = match load(file, stdin)? {
                AnyMap::Exact(m) => normal_form_report(&m),
                AnyMap::Float(m) => normal_form_report(&m),
            };
            Ok(Output::Report(report.map_err(domain)?, true))
        }
        Command::Classify { file } => {
            let report = match load(file, stdin)? {
                AnyMap::Exact(m) => classify_report(&m),
                AnyMap::Float(m) => classify_report(&m),
            };
            Ok(Output::Report(report.map_err(domain)?, true))
        }
        Command::Generate { kind } => generate(kind, stdin),
    }
}

/// Run the tool on `args` (including the program name) and capture the
/// exit code and both output streams.
pub fn run<I, S>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let (code, body) = match execute(&cli, stdin) {
        Ok(Output::Text(text)) => (EXIT_OK, text),
        Ok(Output::Report(report, ok)) => {
            let body = if cli.json { report.to_json_line() + "\n" } else { report.to_text() };
            (if ok { EXIT_OK } else { EXIT_DOMAIN }, body)
        }
        Err(f) => return Outcome { code: f.code, stdout: String::new(), stderr: format!("error: {}\n", f.message) },
    };
    match &cli.out {
        Some(path) => match std::fs::write(path, &body) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
            Err(e) => {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {}: {e}\n", path.display()) }
            }
        },
        None => Outcome { code, stdout: body, stderr: String::new() },
    }
}
