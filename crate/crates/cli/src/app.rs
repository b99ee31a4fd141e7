//! Argument parsing and command dispatch.
//!
//! Exit codes: 0 success, 1 an identity or positivity check failed, 2 usage
//! error, 3 budget or precision exceeded.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sprout_core::oracles::{
    alternating_count, chromatic_sym, claw_graph, claw_matching, cyclically_alternating_count, piecewise_alt_count,
    rho_shape, rp_histogram, syt_count_brute, syt_count_det, uio_sum, IntervalOrder, SkewShape,
};
use sprout_core::positivity::{decimation_check, expansion_positivity, toeplitz_minors_with_budget, DEFAULT_MINOR_BUDGET};
use sprout_core::seeds::{phi_abs, CATALOG};
use sprout_core::sprout::{
    expansion_in, special_h_pair, special_hk_series, special_hooks, special_ones, special_s1n, special_sn,
};
use sprout_core::{Basis, Error, Partition, Series, SymFunc};
use num_traits::Signed;

use crate::format::{poly_text, rational_text, series_text, symfunc_latex, symfunc_text};
use crate::json::{rational_to_string, symfunc_to_json, MinorReportDoc, PositivityReportDoc};
use crate::seedfile::resolve_seed;
use crate::verify::{run_suite, Suite};
use crate::factorial_rational;

#[derive(Parser, Debug)]
#[command(name = "sprout", version, about = "Exact sprout sequences of symmetric functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print R_N in one basis.
    Expand {
        #[arg(long)]
        seed: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_basis)]
        basis: Basis,
        #[arg(long, value_enum, default_value_t = Scale::None)]
        scale: Scale,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The seed catalog.
    Seeds {
        #[command(subcommand)]
        action: SeedsAction,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        nmax: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Toeplitz minors of the seed, and optionally expansion positivity.
    Positivity {
        #[arg(long)]
        seed: String,
        #[arg(long, default_value_t = 3)]
        minor_order: usize,
        #[arg(long, default_value_t = 8)]
        degree: usize,
        /// Check the minors of `[a_{d(j-i)}]` instead.
        #[arg(long)]
        decimate: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MINOR_BUDGET)]
        budget: u64,
        #[arg(long, value_parser = parse_basis)]
        basis: Option<Basis>,
        #[arg(long, default_value_t = 5)]
        nmax: usize,
    },
    /// Closed-form specializations, each cross-checked against a generic extraction.
    Special {
        #[arg(long)]
        seed: String,
        #[arg(long, value_enum)]
        op: SpecialOp,
        /// Series precision, or the degree for `hooks`.
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        i: usize,
        #[arg(long, default_value_t = 1)]
        j: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Brute-force combinatorial oracles.
    Oracle {
        #[arg(long, value_enum)]
        op: OracleOp,
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// A partition such as `3,1,1`.
        #[arg(long, value_parser = parse_partition)]
        partition: Option<Partition>,
        /// A skew shape such as `3,2/1`.
        #[arg(long, value_parser = parse_skew)]
        shape: Option<SkewShape>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
enum SeedsAction {
    List,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Scale {
    None,
    /// Multiply R_N by (2N)!.
    Fact2n,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SpecialOp {
    Sn,
    S1n,
    Ones,
    Hk,
    Hpair,
    Hooks,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OracleOp {
    RpHist,
    AltCount,
    CycAlt,
    Piecewise,
    Syt,
    Rho,
    Uio,
    ClawCheck,
}

fn parse_basis(s: &str) -> Result<Basis, String> {
    Basis::from_symbol(s).ok_or_else(|| format!("unknown basis {s:?}; expected one of m, p, e, h, s"))
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    Suite::parse(s).ok_or_else(|| {
        let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
        format!("unknown suite {s:?}; expected one of {}", names.join(", "))
    })
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    if inner.trim().is_empty() {
        return Ok(Partition::empty());
    }
    let parts = inner
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| format!("bad part {p:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

fn parse_skew(s: &str) -> Result<SkewShape, String> {
    let (outer, inner) = s.split_once('/').unwrap_or((s, ""));
    SkewShape::new(parse_partition(outer)?, parse_partition(inner)?).map_err(|e| e.to_string())
}

/// What a command produced: text for stdout and whether its checks held.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Budget(_) | Error::PrecisionExceeded { .. } => 3,
        Error::Inconsistent(_) => 1,
        _ => 2,
    }
}

/// Parses `argv` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => {
            let _ = writeln!(out, "{}", outcome.text);
            if outcome.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(command: Command) -> sprout_core::Result<Outcome> {
    match command {
        Command::Expand { seed, n, basis, scale, format } => expand(&seed, n, basis, scale, format),
        Command::Seeds { action: SeedsAction::List } => Ok(Outcome::ok(
            CATALOG.iter().map(|(name, about)| format!("{name:<18} {about}")).collect::<Vec<_>>().join("\n"),
        )),
        Command::Verify { suite, nmax, jobs } => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.max(1))
                .build()
                .map_err(|e| Error::Invalid(e.to_string()))?;
            let report = pool.install(|| run_suite(suite, nmax))?;
            Ok(Outcome { text: report.to_string(), ok: report.passed() })
        }
        Command::Positivity { seed, minor_order, degree, decimate, budget, basis, nmax } => {
            positivity(&seed, minor_order, degree, decimate, budget, basis, nmax)
        }
        Command::Special { seed, op, n, k, i, j, format } => special(&seed, op, n, k, i, j, format),
        Command::Oracle { op, n, partition, shape, format } => oracle(op, n, partition, shape, format),
    }
}

fn render(f: &SymFunc, format: Format) -> String {
    match format {
        Format::Text => symfunc_text(f),
        Format::Json => symfunc_to_json(f),
        Format::Latex => symfunc_latex(f),
    }
}

fn expand(seed: &str, n: usize, basis: Basis, scale: Scale, format: Format) -> sprout_core::Result<Outcome> {
    let seed = resolve_seed(seed, n)?;
    let mut r = expansion_in(&seed, n, basis)?;
    if scale == Scale::Fact2n {
        r = r.scale(&factorial_rational(2 * n));
    }
    Ok(Outcome::ok(render(&r, format)))
}

fn positivity(
    seed: &str,
    order: usize,
    degree: usize,
    decimate: Option<usize>,
    budget: u64,
    basis: Option<Basis>,
    nmax: usize,
) -> sprout_core::Result<Outcome> {
    let d = decimate.unwrap_or(1);
    let needed = (d * degree).max(if basis.is_some() { nmax } else { 0 });
    let seed = resolve_seed(seed, needed)?;
    let minors = match decimate {
        Some(d) => decimation_check(&seed, d, order, degree)?,
        None => toeplitz_minors_with_budget(&seed, order, degree, budget)?,
    };
    let mut ok = minors.passed();
    let mut doc = json!({ "minors": MinorReportDoc::from(&minors) });
    if let Some(basis) = basis {
        let report = expansion_positivity(&seed, nmax, basis)?;
        ok &= report.passed();
        doc["expansion"] = serde_json::to_value(PositivityReportDoc::from(&report)).expect("serializable");
    }
    Ok(Outcome { text: serde_json::to_string_pretty(&doc).expect("serializable"), ok })
}

fn series_json(s: &Series) -> Value {
    Value::from(s.coeffs().iter().map(rational_to_string).collect::<Vec<_>>())
}

fn special(
    seed: &str,
    op: SpecialOp,
    n: usize,
    k: usize,
    i: usize,
    j: usize,
    format: Format,
) -> sprout_core::Result<Outcome> {
    let precision = match op {
        SpecialOp::Hk => k * n,
        SpecialOp::Hpair => i + j,
        _ => n,
    };
    let seed = resolve_seed(seed, precision)?;
    let series_out = |s: Series| match format {
        Format::Json => series_json(&s).to_string(),
        _ => series_text(&s),
    };
    let text = match op {
        SpecialOp::Sn => series_out(special_sn(&seed, n)?),
        SpecialOp::S1n => series_out(special_s1n(&seed, n)?),
        SpecialOp::Ones => series_out(special_ones(&seed, n, k)?),
        SpecialOp::Hk => series_out(special_hk_series(&seed, k, n)?),
        SpecialOp::Hpair => {
            let c = special_h_pair(&seed, i, j)?;
            match format {
                Format::Json => Value::from(rational_to_string(&c)).to_string(),
                _ => rational_text(&c),
            }
        }
        SpecialOp::Hooks => {
            let p = special_hooks(&seed, n)?;
            match format {
                Format::Json => Value::from(p.coeffs().iter().map(rational_to_string).collect::<Vec<_>>()).to_string(),
                _ => poly_text(&p, "u"),
            }
        }
    };
    Ok(Outcome::ok(text))
}

fn need<T>(value: Option<T>, flag: &str) -> sprout_core::Result<T> {
    value.ok_or_else(|| Error::Invalid(format!("this oracle needs --{flag}")))
}

fn oracle(
    op: OracleOp,
    n: usize,
    partition: Option<Partition>,
    shape: Option<SkewShape>,
    format: Format,
) -> sprout_core::Result<Outcome> {
    let (text, value, ok) = match op {
        OracleOp::RpHist => {
            let hist = rp_histogram(n)?;
            let mut lines = Vec::new();
            let mut rows = Vec::new();
            let mut ok = true;
            for (lambda, count) in hist.iter().rev() {
                let phi = phi_abs(lambda)?;
                ok &= phi == (*count).into();
                lines.push(format!("{lambda} {count} (|phi| = {phi})"));
                rows.push(json!({ "partition": lambda.parts(), "count": count, "phi_abs": phi.to_string() }));
            }
            (lines.join("\n"), Value::from(rows), ok)
        }
        OracleOp::AltCount => {
            let c = alternating_count(n)?;
            (c.to_string(), json!(c), true)
        }
        OracleOp::CycAlt => {
            let c = cyclically_alternating_count(n)?;
            (c.to_string(), json!(c), true)
        }
        OracleOp::Piecewise => {
            let c = piecewise_alt_count(&need(partition, "partition")?)?;
            (c.to_string(), json!(c), true)
        }
        OracleOp::Syt => {
            let shape = need(shape, "shape")?;
            let det = syt_count_det(&shape);
            let brute = if shape.cells() <= 12 { Some(syt_count_brute(&shape)?) } else { None };
            let ok = brute.is_none_or(|b| det == b.into());
            let text = match brute {
                Some(b) => format!("{shape}: {det} (brute force {b})"),
                None => format!("{shape}: {det}"),
            };
            (text, json!({ "shape": shape.to_string(), "det": det.to_string(), "brute": brute }), ok)
        }
        OracleOp::Rho => {
            let lambda = need(partition, "partition")?;
            let shape = rho_shape(&lambda);
            let det = syt_count_det(&shape);
            (format!("{shape} with {det} standard tableaux"), json!({ "shape": shape.to_string(), "syt": det.to_string() }), true)
        }
        OracleOp::Uio => {
            let f = uio_sum(n)?;
            let h = f.convert(Basis::H);
            let text = match format {
                Format::Latex => symfunc_latex(&h),
                _ => symfunc_text(&h),
            };
            (text, serde_json::from_str(&symfunc_to_json(&h)).expect("valid JSON"), true)
        }
        OracleOp::ClawCheck => {
            let g = IntervalOrder::from_matching(&claw_matching()).incomparability_graph();
            let s = chromatic_sym(&g, 4)?.convert(Basis::S);
            let negative = g == claw_graph() && s.terms().any(|(_, c)| c.is_negative());
            let text = format!("X_claw = {}\nnot Schur positive: {negative}", symfunc_text(&s));
            (text, json!({ "schur": serde_json::from_str::<Value>(&symfunc_to_json(&s)).expect("valid JSON"), "negative": negative }), negative)
        }
    };
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&value).expect("serializable"),
        _ => text,
    };
    Ok(Outcome { text, ok })
}
