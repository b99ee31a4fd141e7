//! Acceptance criteria, one PASS/FAIL line each. All comparisons are exact.
//!
//! `SPROUT_SLOW=1` adds the larger optional cases (rp at n = 5, the
//! matching sum at n = 5).

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Signed;
use sprout::json::{parse_rational, SymFuncDoc};
use sprout::verify::{run_suite, Suite};
use sprout::{factorial_rational, run};
use sprout_core::oracles::{chromatic_sym, claw_graph, matchings, piecewise_alt_count, rp_histogram};
use sprout_core::positivity::{expansion_positivity, toeplitz_minors};
use sprout_core::seeds::{euler_numbers, seed_by_name, SeedSpec};
use sprout_core::sprout::{sprout_m, Seed};
use sprout_core::{multinomial, rational, Basis, BigUint, Partition, Rational, Series};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, Box<dyn Fn() -> Outcome>);

fn slow() -> bool {
    std::env::var("SPROUT_SLOW").is_ok_and(|v| v == "1")
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn suite(s: Suite, nmax: usize) -> Outcome {
    let report = run_suite(s, nmax).map_err(|e| format!("{s}: {e}"))?;
    if report.passed() {
        Ok(format!("{s} nmax {nmax}: {} checks", report.checks.len()))
    } else {
        let first = report.checks.iter().find(|c| !c.passed).unwrap();
        Err(format!("{s}: {} failures, first: {}: {}", report.failures(), first.label, first.detail))
    }
}

fn all(parts: Vec<Outcome>) -> Outcome {
    let mut notes = Vec::new();
    for part in parts {
        notes.push(part?);
    }
    Ok(notes.join("; "))
}

fn ensure(cond: bool, what: impl Into<String>) -> Outcome {
    let what = what.into();
    if cond {
        Ok(what)
    } else {
        Err(what)
    }
}

fn h_table() -> Outcome {
    let table: [&[(&[usize], u64)]; 5] = [
        &[(&[1], 1)],
        &[(&[1, 1], 1), (&[2], 4)],
        &[(&[1, 1, 1], 1), (&[2, 1], 12), (&[3], 48)],
        &[(&[1, 1, 1, 1], 1), (&[2, 1, 1], 24), (&[3, 1], 256), (&[2, 2], 16), (&[4], 1088)],
        &[
            (&[1, 1, 1, 1, 1], 1),
            (&[2, 1, 1, 1], 40),
            (&[3, 1, 1], 800),
            (&[2, 2, 1], 80),
            (&[4, 1], 9280),
            (&[3, 2], 640),
            (&[5], 39680),
        ],
    ];
    for (i, row) in table.iter().enumerate() {
        let n = (i + 1).to_string();
        let argv = ["sprout", "expand", "--seed", "secsqrt", "--n", &n, "--basis", "h", "--scale", "fact2n", "--format", "json"];
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(argv, &mut out, &mut err);
        if code != 0 {
            return Err(format!("expand n={n} exited {code}: {}", String::from_utf8_lossy(&err)));
        }
        let doc: SymFuncDoc = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
        let got: BTreeMap<Vec<usize>, Rational> = doc
            .terms
            .iter()
            .map(|t| Ok((t.partition.clone(), parse_rational(&t.coeff).map_err(|e| e.to_string())?)))
            .collect::<Result<_, String>>()?;
        let expected: BTreeMap<Vec<usize>, Rational> =
            row.iter().map(|(l, c)| (l.to_vec(), Rational::from_integer((*c).into()))).collect();
        if got != expected || doc.basis != "h" {
            return Err(format!("n={n}: got {got:?}"));
        }
    }
    Ok("(2n)!A_n, n = 1..5, matches the table through the CLI".into())
}

fn m_coefficient() -> Outcome {
    let seed = seed_by_name(&SeedSpec::SecSqrt, 5).map_err(|e| e.to_string())?;
    let lambda = p(&[3, 1, 1]);
    let algebra = sprout_m(&seed, 5).map_err(|e| e.to_string())?.coeff(&lambda) * factorial_rational(10);
    let euler = euler_numbers(6);
    let formula = multinomial(10, &[6, 2, 2]).map_err(|e| e.to_string())? * &euler[6] * &euler[2] * &euler[2];
    let brute = piecewise_alt_count(&lambda).map_err(|e| e.to_string())?;
    let target = BigUint::from(76860u32);
    ensure(
        algebra == Rational::from_integer(76860.into()) && formula == target && BigUint::from(brute) == target,
        format!("10![m_311]A_5 = {algebra}, formula {formula}, brute force {brute}"),
    )
}

fn record_partitions() -> Outcome {
    let hist = rp_histogram(4).map_err(|e| e.to_string())?;
    let total: u64 = hist.values().sum();
    let mut parts = vec![suite(Suite::Rp, 4), ensure(total == 1385, format!("|A_8| = {total}"))];
    if slow() {
        parts.push(suite(Suite::Rp, 5));
    }
    all(parts)
}

fn uio() -> Outcome {
    let count = matchings(4).map_err(|e| e.to_string())?.len();
    let mut parts = vec![ensure(count == 105, format!("{count} matchings at n=4")), suite(Suite::Uio, 4)];
    if slow() {
        parts.push(suite(Suite::Uio, 5));
    }
    all(parts)
}

fn positivity() -> Outcome {
    let err = |e: sprout_core::Error| e.to_string();
    let sec = seed_by_name(&SeedSpec::SecSqrt, 10).map_err(err)?;
    let minors = toeplitz_minors(&sec, 4, 10).map_err(err)?;
    let h = expansion_positivity(&sec, 6, Basis::H).map_err(err)?;
    let s = expansion_positivity(&sec, 6, Basis::S).map_err(err)?;
    let claw = chromatic_sym(&claw_graph(), 4).map_err(err)?.convert(Basis::S);
    let claw_negative = claw.terms().any(|(_, c)| c.is_negative());
    let witness = Seed::new(Series::from_fn(6, |n| rational((n % 2 == 0) as i64, 1))).map_err(err)?;
    let witness_report = toeplitz_minors(&witness, 2, 6).map_err(err)?;
    let witness_fails = witness_report.violations.iter().any(|(r, c, d)| r.len() == 2 && c.len() == 2 && d.is_negative());
    all(vec![
        ensure(minors.passed(), format!("secsqrt: {} minors up to order 4, degree 10, none negative", minors.minors_checked)),
        ensure(h.passed() && s.passed(), "secsqrt h- and s-positive for n <= 6"),
        ensure(claw_negative, format!("claw Schur coefficient of s_22 = {}", claw.coeff(&p(&[2, 2])))),
        ensure(witness_fails, format!("(1,0,1,0,...) has {} negative minors", witness_report.violations.len())),
    ])
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("h-table of (2n)!A_n", Duration::from_secs(1), Box::new(h_table)),
        ("m-coefficient 76860", Duration::from_secs(60), Box::new(m_coefficient)),
        ("record partitions vs |phi|", Duration::from_secs(10), Box::new(record_partitions)),
        ("h-coefficient identities", Duration::from_secs(5), Box::new(|| suite(Suite::HSpecials, 6))),
        ("Schur coefficients count tableaux of rho(lambda)", Duration::from_secs(30), Box::new(|| suite(Suite::SchurSkew, 8))),
        ("matchings and interval orders", Duration::from_secs(30), Box::new(uio)),
        (
            "route agreement and internal product",
            Duration::from_secs(30),
            Box::new(|| all(vec![suite(Suite::Routes, 8), suite(Suite::Kronecker, 6)])),
        ),
        (
            "omega and specializations",
            Duration::from_secs(30),
            Box::new(|| all(vec![suite(Suite::Omega, 8), suite(Suite::Specials, 8)])),
        ),
        ("closed forms of the basic seeds", Duration::from_secs(5), Box::new(|| suite(Suite::Examples, 8))),
        ("positivity", Duration::from_secs(30), Box::new(positivity)),
        ("Euler and Bernoulli identities", Duration::from_secs(1), Box::new(|| suite(Suite::Numbers, 6))),
    ];
    let mut failures = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (tag, note) = match outcome {
            Ok(note) => ("PASS", note),
            Err(note) => ("FAIL", note),
        };
        let slow_note = if elapsed > *limit { format!(" (over the {limit:?} budget)") } else { String::new() };
        println!("[{tag}] {:>2}. {name}: {note} [{elapsed:.2?}]{slow_note}", i + 1);
        if tag == "FAIL" {
            failures += 1;
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
