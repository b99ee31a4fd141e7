//! Named verification suites: each pits an algebraic computation against a
//! closed form or a brute-force count, exactly.

use std::fmt;

use num_traits::One;
use rayon::prelude::*;
use sprout_core::oracles::{
    alternating_count, cyclically_alternating_count, matchings, piecewise_alt_count, rho_shape, rp_histogram,
    syt_count_brute, syt_count_det, uio_sum, IntervalOrder,
};
use sprout_core::seeds::{bernoulli, euler_numbers, phi_abs, seed_by_name, SeedSpec};
use sprout_core::sprout::{
    expansion_in, kronecker_hom_check, omega_seed, schur_coeff, special_h_pair, special_hk_series, special_hooks,
    special_ones, special_s1n, special_sn, sprout_m, sprout_p, Seed,
};
use sprout_core::{
    binomial, enumerate_partitions, multinomial, Basis, BigUint, Error, Partition, Rational, Result, SymFunc,
};

use crate::factorial_rational;
use crate::format::rational_text;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Rp,
    MExpansion,
    SchurSkew,
    Uio,
    HSpecials,
    Omega,
    Specials,
    Routes,
    Kronecker,
    Examples,
    Numbers,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Rp,
        Suite::MExpansion,
        Suite::SchurSkew,
        Suite::Uio,
        Suite::HSpecials,
        Suite::Omega,
        Suite::Specials,
        Suite::Routes,
        Suite::Kronecker,
        Suite::Examples,
        Suite::Numbers,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Rp => "rp",
            Suite::MExpansion => "m-expansion",
            Suite::SchurSkew => "schur-skew",
            Suite::Uio => "uio",
            Suite::HSpecials => "h-specials",
            Suite::Omega => "omega",
            Suite::Specials => "specials",
            Suite::Routes => "routes",
            Suite::Kronecker => "kronecker",
            Suite::Examples => "examples",
            Suite::Numbers => "numbers",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn eq<T: PartialEq + fmt::Display>(label: impl Into<String>, got: T, expected: T) -> Check {
        let passed = got == expected;
        let detail = if passed { format!("{got}") } else { format!("{got} != {expected}") };
        Check { label: label.into(), passed, detail }
    }

    fn holds(label: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
        Check { label: label.into(), passed, detail: detail.into() }
    }

    /// Turns a closed-form/generic disagreement reported by the library into a
    /// failed check; other errors propagate.
    fn consistent<T>(label: impl Into<String>, r: Result<T>, describe: impl FnOnce(T) -> String) -> Result<Check> {
        match r {
            Ok(v) => Ok(Check::holds(label, true, describe(v))),
            Err(Error::Inconsistent(why)) => Ok(Check::holds(label, false, why)),
            Err(e) => Err(e),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub nmax: usize,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.label, c.detail)?;
        }
        write!(
            f,
            "suite {} (nmax {}): {}/{} checks passed",
            self.suite,
            self.nmax,
            self.checks.len() - self.failures(),
            self.checks.len()
        )
    }
}

/// Runs `f` over `items` on the current rayon pool, keeping input order.
fn par_checks<T: Sync>(items: &[T], f: impl Fn(&T) -> Result<Vec<Check>> + Sync + Send) -> Result<Vec<Check>> {
    let parts: Vec<Vec<Check>> = items.par_iter().map(f).collect::<Result<_>>()?;
    Ok(parts.into_iter().flatten().collect())
}

fn secsqrt(precision: usize) -> Result<Seed> {
    seed_by_name(&SeedSpec::SecSqrt, precision)
}

fn big(n: u64) -> Rational {
    Rational::from_integer(n.into())
}

fn nat(n: &BigUint) -> Rational {
    Rational::from_integer(n.clone().into())
}

pub fn run_suite(suite: Suite, nmax: usize) -> Result<SuiteReport> {
    let ns: Vec<usize> = (1..=nmax).collect();
    let checks = match suite {
        Suite::Rp => par_checks(&ns, |&n| rp(n))?,
        Suite::MExpansion => {
            let seed = secsqrt(nmax)?;
            par_checks(&ns, |&n| m_expansion(&seed, n))?
        }
        Suite::SchurSkew => {
            let seed = secsqrt(nmax)?;
            par_checks(&ns, |&n| schur_skew(&seed, n))?
        }
        Suite::Uio => {
            let seed = secsqrt(nmax)?;
            par_checks(&ns, |&n| uio(&seed, n))?
        }
        Suite::HSpecials => {
            let seed = secsqrt(nmax)?;
            par_checks(&ns, |&n| h_specials(&seed, n))?
        }
        Suite::Omega => par_checks(&catalog(nmax)?, |seed| omega(seed, nmax))?,
        Suite::Specials => par_checks(&catalog(nmax)?, |seed| specials(seed, nmax))?,
        Suite::Routes => par_checks(&catalog(nmax)?, |seed| routes(seed, nmax))?,
        Suite::Kronecker => par_checks(&catalog(nmax)?, |seed| kronecker(seed, nmax))?,
        Suite::Examples => par_checks(&ns, |&n| examples(n))?,
        Suite::Numbers => numbers(nmax)?,
    };
    Ok(SuiteReport { suite, nmax, checks })
}

fn catalog(precision: usize) -> Result<Vec<Seed>> {
    SeedSpec::catalog().iter().map(|s| seed_by_name(s, precision)).collect()
}

fn seed_label(seed: &Seed) -> &str {
    seed.name().unwrap_or("seed")
}

fn rp(n: usize) -> Result<Vec<Check>> {
    let hist = rp_histogram(n)?;
    let mut checks = Vec::new();
    for lambda in enumerate_partitions(n) {
        let count = hist.get(&lambda).copied().unwrap_or(0);
        checks.push(Check::eq(format!("rp n={n} {lambda} count = |phi|"), BigUint::from(count), phi_abs(&lambda)?));
    }
    let total: u64 = hist.values().sum();
    checks.push(Check::eq(format!("rp n={n} total = E_{}", 2 * n), BigUint::from(total), euler_numbers(2 * n)[2 * n].clone()));
    Ok(checks)
}

fn m_expansion(seed: &Seed, n: usize) -> Result<Vec<Check>> {
    let euler = euler_numbers(2 * n);
    let scaled = sprout_m(seed, n)?.scale(&factorial_rational(2 * n));
    let mut checks = Vec::new();
    for lambda in enumerate_partitions(n) {
        let doubled: Vec<usize> = lambda.parts().iter().map(|&k| 2 * k).collect();
        let formula = lambda.parts().iter().fold(multinomial(2 * n, &doubled)?, |acc, &k| acc * &euler[2 * k]);
        let algebra = scaled.coeff(&lambda);
        let brute = piecewise_alt_count(&lambda)?;
        let label = format!("(2n)![m_{lambda}]A_{n} = piecewise count = multinomial formula");
        let passed = algebra == nat(&formula) && BigUint::from(brute) == formula;
        checks.push(Check::holds(label, passed, format!("{} / {brute} / {formula}", rational_text(&algebra))));
    }
    Ok(checks)
}

fn schur_skew(seed: &Seed, n: usize) -> Result<Vec<Check>> {
    let scale = factorial_rational(2 * n);
    let generic = expansion_in(seed, n, Basis::S)?;
    let mut checks = Vec::new();
    for lambda in enumerate_partitions(n) {
        let shape = rho_shape(&lambda);
        let det = syt_count_det(&shape);
        let jt = schur_coeff(seed, &lambda)? * &scale;
        let extracted = generic.coeff(&lambda) * &scale;
        let mut passed = jt == nat(&det) && extracted == jt;
        let mut detail = format!("{} = SYT({shape}) = {det}", rational_text(&jt));
        if 2 * n <= 10 {
            let brute = syt_count_brute(&shape)?;
            passed &= BigUint::from(brute) == det;
            detail.push_str(&format!(", brute {brute}"));
        }
        checks.push(Check::holds(format!("(2n)![s_{lambda}]A_{n}"), passed, detail));
    }
    Ok(checks)
}

fn uio(seed: &Seed, n: usize) -> Result<Vec<Check>> {
    let ms = matchings(n)?;
    let sane = ms.iter().all(|m| {
        let order = IntervalOrder::from_matching(m);
        order.is_strict_partial_order()
            && order.is_two_plus_two_free()
            && order.incomparability_graph().vertex_count() == n
    });
    let sum = uio_sum(n)?;
    let expected = sprout_m(seed, n)?.scale(&factorial_rational(2 * n));
    Ok(vec![
        Check::holds(format!("interval orders of {} matchings, n={n}", ms.len()), sane, "strict, (2+2)-free, n vertices"),
        Check::holds(
            format!("sum of omega X_Inc(P_M) = (2n)!A_{n}"),
            sum == expected,
            crate::format::symfunc_text(&sum.convert(Basis::H)),
        ),
    ])
}

fn h_specials(seed: &Seed, n: usize) -> Result<Vec<Check>> {
    let euler = euler_numbers(2 * n);
    let scale = factorial_rational(2 * n);
    let generic = expansion_in(seed, n, Basis::H)?.scale(&scale);
    let mut checks = Vec::new();

    let column = Partition::column(n);
    let via_series = special_hk_series(seed, 1, n).map(|s| s.coeff(n).cloned().unwrap_or_default() * &scale);
    checks.push(Check::consistent(format!("[h_1^{n}](2n)!A_{n} = 1"), via_series, |c| rational_text(&c))?);
    checks.push(Check::eq(format!("[h_1^{n}] generic"), generic.coeff(&column), Rational::one()));

    let e2n = nat(&euler[2 * n]);
    let closed_sum = special_sn(seed, n).map(|s| s.coeff(n).cloned().unwrap_or_default() * &scale);
    checks.push(Check::consistent(format!("a_{n}(2n)! = E_{}", 2 * n), closed_sum.clone(), |c| rational_text(&c))?);
    if let Ok(c) = closed_sum {
        checks.push(Check::eq(format!("a_{n}(2n)! = E_{} value", 2 * n), c, e2n.clone()));
    }
    let coeff_sum: Rational = generic.terms().map(|(_, c)| c.clone()).sum();
    checks.push(Check::eq(format!("sum of h-coefficients of (2n)!A_{n}"), coeff_sum, e2n));

    let e_prime = |m: usize| big(m as u64) * nat(&euler[2 * m - 1]);
    let hn = special_hk_series(seed, n, 1).map(|s| s.coeff(1).cloned().unwrap_or_default() * &scale);
    checks.push(Check::consistent(format!("[h_{n}] closed form"), hn.clone(), |c| rational_text(&c))?);
    if let Ok(c) = hn {
        checks.push(Check::eq(format!("[h_{n}](2n)!A_{n} = n E_{}", 2 * n - 1), c, e_prime(n)));
    }
    checks.push(Check::eq(format!("[h_{n}] generic"), generic.coeff(&Partition::row(n)), e_prime(n)));
    if 2 * n <= 12 {
        let cyc = cyclically_alternating_count(n)?;
        checks.push(Check::eq(format!("cyclically alternating count, 2n={}", 2 * n), big(cyc), e_prime(n)));
    }

    for j in 1..=n / 2 {
        let i = n - j;
        let expected = if i == j {
            (nat(&binomial(2 * n, n)) * e_prime(i) * e_prime(i) - e_prime(n)) / big(2)
        } else {
            nat(&binomial(2 * n, 2 * i)) * e_prime(i) * e_prime(j) - e_prime(n)
        };
        let pair = special_h_pair(seed, i, j).map(|c| c * &scale);
        checks.push(Check::consistent(format!("[h_{i} h_{j}] closed form = generic"), pair.clone(), |c| rational_text(&c))?);
        if let Ok(c) = pair {
            checks.push(Check::eq(format!("[h_{i} h_{j}](2n)!A_{n} = E' formula"), c, expected));
        }
    }
    Ok(checks)
}

fn omega(seed: &Seed, nmax: usize) -> Result<Vec<Check>> {
    let name = seed_label(seed);
    let dual = omega_seed(seed)?;
    let back = omega_seed(&dual)?;
    let mut checks = vec![Check::holds(format!("{name}: omega seed is an involution"), back.series() == seed.series(), "")];
    for n in 1..=nmax {
        let lhs = sprout_p(seed, n)?.omega();
        let rhs = sprout_p(&dual, n)?;
        checks.push(Check::holds(format!("{name}: omega R_{n} = R_{n}[1/F(-t)]"), lhs == rhs, ""));
        let lhs_s = expansion_in(seed, n, Basis::S)?.omega();
        let rhs_s = expansion_in(&dual, n, Basis::S)?;
        checks.push(Check::holds(format!("{name}: s-expansion conjugates, n={n}"), lhs_s == rhs_s, ""));
    }
    Ok(checks)
}

fn specials(seed: &Seed, nmax: usize) -> Result<Vec<Check>> {
    let name = seed_label(seed);
    let mut checks = vec![
        Check::consistent(format!("{name}: [s_n]R_n = a_n = sum of h-coefficients"), special_sn(seed, nmax), |s| {
            crate::format::series_text(&s)
        })?,
        Check::consistent(format!("{name}: sum [s_1^n]R_n t^n = 1/F(-t)"), special_s1n(seed, nmax), |s| {
            crate::format::series_text(&s)
        })?,
    ];
    for k in 0..=4 {
        checks.push(Check::consistent(format!("{name}: sum R_n(1^{k}) t^n = F^{k}"), special_ones(seed, nmax, k), |s| {
            crate::format::series_text(&s)
        })?);
    }
    for n in 1..=nmax {
        checks.push(Check::consistent(format!("{name}: P_{n}(u)/(1+u) = hook Schur coefficients"), special_hooks(seed, n), |p| {
            crate::format::poly_text(&p, "u")
        })?);
    }
    Ok(checks)
}

fn routes(seed: &Seed, nmax: usize) -> Result<Vec<Check>> {
    let name = seed_label(seed);
    let mut checks = Vec::new();
    for n in 0..=nmax {
        let m = sprout_m(seed, n)?;
        let mut passed = sprout_p(seed, n)?.convert(Basis::M) == m;
        for basis in Basis::ALL {
            passed &= expansion_in(seed, n, basis)?.convert(Basis::M) == m;
        }
        checks.push(Check::holds(format!("{name}: m, p and phi routes agree for R_{n}"), passed, format!("{} terms", m.len())));
    }
    Ok(checks)
}

fn kronecker(seed: &Seed, nmax: usize) -> Result<Vec<Check>> {
    let name = seed_label(seed);
    (1..=nmax)
        .map(|n| {
            let r = kronecker_hom_check(seed, n)?;
            Ok(Check::holds(
                format!("{name}: internal product with A(t) is multiplicative, n={n}"),
                r.passed(),
                format!("{} pairs, {} violations", r.pairs_checked, r.violations.len()),
            ))
        })
        .collect()
}

fn examples(n: usize) -> Result<Vec<Check>> {
    let build = |spec: SeedSpec| seed_by_name(&spec, n);
    let e_n = SymFunc::basis_element(Basis::E, Partition::row(n));
    let h_n = SymFunc::basis_element(Basis::H, Partition::row(n));
    let mut qfn = SymFunc::zero(Basis::H, n);
    for k in 0..=n {
        let term = SymFunc::basis_element(Basis::E, Partition::row(k))
            .multiply(&SymFunc::basis_element(Basis::H, Partition::row(n - k)));
        qfn = qfn.add(&term)?;
    }
    let p1n = SymFunc::basis_element(Basis::P, Partition::column(n)).scale(&(Rational::one() / factorial_rational(n)));
    let cases = [
        ("one_plus_t: R_n = e_n", SeedSpec::OnePlusT, e_n),
        ("geom: R_n = h_n", SeedSpec::Geom, h_n),
        ("qfn: R_n = sum e_k h_(n-k)", SeedSpec::Qfn, qfn),
        ("exp: R_n = p_1^n / n!", SeedSpec::Exp, p1n),
    ];
    cases
        .into_iter()
        .map(|(label, spec, expected)| {
            let r = sprout_m(&build(spec)?, n)?;
            Ok(Check::holds(format!("{label}, n={n}"), r == expected.convert(Basis::M), ""))
        })
        .collect()
}

fn numbers(nmax: usize) -> Result<Vec<Check>> {
    let euler = euler_numbers((2 * nmax).max(12));
    let b = bernoulli(2 * nmax);
    let mut checks = Vec::new();
    for k in 1..=nmax {
        let four_k = big(4u64.pow(k as u32));
        let abs_b = if b[2 * k] < Rational::default() { -b[2 * k].clone() } else { b[2 * k].clone() };
        let rhs = &four_k * (&four_k - big(1)) * abs_b / big(2 * k as u64);
        checks.push(Check::eq(format!("E_{} = 4^k(4^k-1)|B_{}|/(2k)", 2 * k - 1, 2 * k), nat(&euler[2 * k - 1]), rhs));
    }
    for n in 1..=nmax {
        let total = enumerate_partitions(n).iter().map(phi_abs).sum::<Result<BigUint>>()?;
        checks.push(Check::eq(format!("sum |phi(lambda)| over lambda of {n} = E_{}", 2 * n), total, euler[2 * n].clone()));
    }
    for (k, e) in euler.iter().enumerate().take((2 * nmax).min(10) + 1) {
        checks.push(Check::eq(format!("alternating permutations of {k} letters = E_{k}"), BigUint::from(alternating_count(k)?), e.clone()));
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::parse(s.name()), Some(s));
        }
        assert_eq!(Suite::parse("nope"), None);
    }

    #[test]
    fn small_suites_pass() {
        for s in Suite::ALL {
            let report = run_suite(s, 3).unwrap();
            assert!(report.passed(), "{report}");
            assert!(!report.checks.is_empty());
        }
    }

    #[test]
    fn budgets_surface_as_errors() {
        assert!(matches!(run_suite(Suite::Uio, 6), Err(Error::Budget(_))));
    }
}
