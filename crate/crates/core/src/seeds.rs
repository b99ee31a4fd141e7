//! Named seeds, Euler and Bernoulli numbers, and the record-partition weights.
//!
//! Seeds of the form `G(√t)` with `G` even (`sec`, `x/tanh x`, `(x/2)/sinh(x/2)`)
//! are built directly in `t` from the even parts of their expansions, so no
//! fractional powers appear anywhere.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::{as_natural, binomial, factorial, from_usize, to_rational};
use crate::partition::Partition;
use crate::series::Series;
use crate::sprout::Seed;
use crate::{Error, Rational, Result};

/// Catalog names with a one-line description, in listing order.
pub const CATALOG: &[(&str, &str)] = &[
    ("one_plus_t", "F = 1 + t; R_n = e_n"),
    ("geom", "F = 1/(1-t); R_n = h_n"),
    ("qfn", "F = (1+t)/(1-t); R_n = sum_k e_k h_(n-k)"),
    ("exp", "F = e^t; R_n = p_1^n / n!"),
    ("subset_exp(S)", "F = 1 + sum_(j in S) t^j / j!; type-restricted colorings, e.g. subset_exp(1,2)"),
    ("secsqrt", "F = sec(sqrt t); a_n = E_(2n)/(2n)!, alternating permutations"),
    ("l_genus", "F = sqrt(t)/tanh(sqrt(t)); Hirzebruch L-genus"),
    ("ahat", "F = (sqrt(t)/2)/sinh(sqrt(t)/2); A-hat genus"),
    ("decimate(NAME,d)", "F = sum_n a_(dn) t^n for the seed NAME"),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeedSpec {
    OnePlusT,
    Geom,
    Qfn,
    Exp,
    /// Positive block sizes allowed by the seed `1 + Σ_{j∈S} t^j/j!`.
    SubsetExp(Vec<usize>),
    SecSqrt,
    LGenus,
    AHat,
    Decimated(Box<SeedSpec>, usize),
}

impl SeedSpec {
    /// Parses catalog names such as `secsqrt`, `subset_exp(1,2)` or
    /// `decimate(secsqrt,2)`.
    pub fn parse(s: &str) -> Result<SeedSpec> {
        let s = s.trim();
        let unknown = || Error::UnknownSeed(s.to_string());
        let spec = match s {
            "one_plus_t" => SeedSpec::OnePlusT,
            "geom" => SeedSpec::Geom,
            "qfn" => SeedSpec::Qfn,
            "exp" => SeedSpec::Exp,
            "secsqrt" => SeedSpec::SecSqrt,
            "l_genus" => SeedSpec::LGenus,
            "ahat" => SeedSpec::AHat,
            _ => {
                if let Some(args) = s.strip_prefix("subset_exp(").and_then(|r| r.strip_suffix(')')) {
                    let args = args.trim_start_matches('{').trim_end_matches('}');
                    let mut set = args
                        .split(',')
                        .map(|x| x.trim().parse::<usize>().map_err(|_| unknown()))
                        .collect::<Result<Vec<_>>>()?;
                    set.retain(|&j| j > 0);
                    set.sort_unstable();
                    set.dedup();
                    if set.is_empty() {
                        return Err(unknown());
                    }
                    SeedSpec::SubsetExp(set)
                } else if let Some(args) = s.strip_prefix("decimate(").and_then(|r| r.strip_suffix(')')) {
                    let (inner, d) = args.rsplit_once(',').ok_or_else(unknown)?;
                    let d = d.trim().parse::<usize>().map_err(|_| unknown())?;
                    if d == 0 {
                        return Err(unknown());
                    }
                    SeedSpec::Decimated(Box::new(SeedSpec::parse(inner)?), d)
                } else {
                    return Err(unknown());
                }
            }
        };
        Ok(spec)
    }

    /// One instance of every catalog entry, with representative parameters.
    pub fn catalog() -> Vec<SeedSpec> {
        alloc::vec![
            SeedSpec::OnePlusT,
            SeedSpec::Geom,
            SeedSpec::Qfn,
            SeedSpec::Exp,
            SeedSpec::SubsetExp(alloc::vec![1, 2]),
            SeedSpec::SecSqrt,
            SeedSpec::LGenus,
            SeedSpec::AHat,
            SeedSpec::Decimated(Box::new(SeedSpec::SecSqrt), 2),
        ]
    }
}

impl fmt::Display for SeedSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeedSpec::OnePlusT => f.write_str("one_plus_t"),
            SeedSpec::Geom => f.write_str("geom"),
            SeedSpec::Qfn => f.write_str("qfn"),
            SeedSpec::Exp => f.write_str("exp"),
            SeedSpec::SubsetExp(set) => {
                let parts: Vec<String> = set.iter().map(|j| j.to_string()).collect();
                write!(f, "subset_exp({})", parts.join(","))
            }
            SeedSpec::SecSqrt => f.write_str("secsqrt"),
            SeedSpec::LGenus => f.write_str("l_genus"),
            SeedSpec::AHat => f.write_str("ahat"),
            SeedSpec::Decimated(inner, d) => write!(f, "decimate({inner},{d})"),
        }
    }
}

fn inverse_factorial(n: usize) -> Rational {
    Rational::one() / to_rational(&factorial(n))
}

/// Builds the named seed with coefficients `a_0..=a_precision`.
pub fn seed_by_name(spec: &SeedSpec, precision: usize) -> Result<Seed> {
    let int = |k: i64| Rational::from_integer(k.into());
    let series = match spec {
        SeedSpec::OnePlusT => Series::from_fn(precision, |n| int((n <= 1) as i64)),
        SeedSpec::Geom => Series::from_fn(precision, |_| int(1)),
        SeedSpec::Qfn => Series::from_fn(precision, |n| int(if n == 0 { 1 } else { 2 })),
        SeedSpec::Exp => Series::from_fn(precision, inverse_factorial),
        SeedSpec::SubsetExp(set) => Series::from_fn(precision, |n| {
            if n == 0 {
                int(1)
            } else if set.contains(&n) {
                inverse_factorial(n)
            } else {
                int(0)
            }
        }),
        SeedSpec::SecSqrt => {
            let euler = euler_numbers(2 * precision);
            Series::from_fn(precision, |n| to_rational(&euler[2 * n]) * inverse_factorial(2 * n))
        }
        SeedSpec::LGenus => {
            // cosh x / (sinh x / x) with x^2 = t
            let cosh = Series::from_fn(precision, |n| inverse_factorial(2 * n));
            let sinhc = Series::from_fn(precision, |n| inverse_factorial(2 * n + 1));
            cosh.mul(&sinhc.inverse()?)
        }
        SeedSpec::AHat => {
            // 1 / (sinh y / y) with y^2 = t / 4
            let sinhc = Series::from_fn(precision, |n| {
                inverse_factorial(2 * n + 1) / to_rational(&BigUint::from(4u32).pow(n as u32))
            });
            sinhc.inverse()?
        }
        SeedSpec::Decimated(inner, d) => {
            let base = seed_by_name(inner, precision * d)?;
            base.series().decimate(*d)?
        }
    };
    Seed::named(spec.to_string(), series)
}

/// Euler zigzag numbers `E_0..=E_max` from the Seidel–Entringer triangle.
pub fn euler_numbers(max: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(max + 1);
    let mut row = alloc::vec![BigUint::one()];
    out.push(BigUint::one());
    for k in 1..=max {
        let mut next = Vec::with_capacity(k + 1);
        next.push(BigUint::zero());
        for j in 1..=k {
            let v = &next[j - 1] + &row[k - j];
            next.push(v);
        }
        out.push(next[k].clone());
        row = next;
    }
    out
}

/// Bernoulli numbers `B_0..=B_max` with `B_1 = -1/2`.
pub fn bernoulli(max: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = alloc::vec![Rational::one()];
    for m in 1..=max {
        let s: Rational = (0..m).map(|k| to_rational(&binomial(m + 1, k)) * &b[k]).sum();
        b.push(-s / from_usize(m + 1));
    }
    b
}

/// `|φ(λ)| = (2n)! Π_k (1/m_k!) (E_{2k-1}/(2k)!)^{m_k}` for `λ ⊢ n`.
pub fn phi_abs(lambda: &Partition) -> Result<BigUint> {
    let n = lambda.size();
    let euler = euler_numbers((2 * lambda.part(0)).max(1));
    let mut value = to_rational(&factorial(2 * n));
    for (k, &m) in lambda.multiplicities().iter().enumerate().skip(1) {
        if m == 0 {
            continue;
        }
        let base = to_rational(&euler[2 * k - 1]) * inverse_factorial(2 * k);
        value = value * num_traits::pow(base, m) * inverse_factorial(m);
    }
    as_natural(&value).ok_or_else(|| Error::Inconsistent(format!("|phi({lambda})| = {value} is not an integer")))
}
