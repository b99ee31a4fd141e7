//! Finite shadows of total nonnegativity, and direct positivity of expansions.
//!
//! A seed `F` has s-positive sprouts exactly when its Toeplitz matrix
//! `[a_{j-i}]` is totally nonnegative. Only finitely many minors can ever be
//! looked at, so a passing report means "no violation up to this order and
//! degree" and nothing more.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{binomial, from_usize};
use crate::linalg::det_bigint;
use crate::partition::{enumerate_partitions, Partition};
use crate::sprout::{expansion_in, Seed};
use crate::symfunc::Basis;
use crate::{Error, Rational, Result};

/// Default cap on `C(max_degree + 1, max_order)^2`.
pub const DEFAULT_MINOR_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorReport {
    pub max_order: usize,
    pub max_degree: usize,
    /// `(rows, cols, det)` for each negative minor, sorted by `(rows, cols)`.
    pub violations: Vec<(Vec<usize>, Vec<usize>, Rational)>,
    pub minors_checked: u64,
    /// Set when the minors are those of `[a_{d(j-i)}]`, a submatrix of the
    /// full Toeplitz matrix.
    pub decimation: Option<usize>,
}

impl MinorReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `a_0..=a_degree` scaled by their common denominator `L`.
struct IntegerToeplitz {
    entries: Vec<BigInt>,
    scale: BigInt,
}

impl IntegerToeplitz {
    fn new(seed: &Seed, degree: usize) -> Result<Self> {
        let coeffs = &seed.series().coeffs();
        if degree >= coeffs.len() {
            return Err(Error::PrecisionExceeded { index: degree, precision: seed.precision() });
        }
        let coeffs = &coeffs[..=degree];
        let scale = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let entries = coeffs.iter().map(|c| c.numer() * (&scale / c.denom())).collect();
        Ok(IntegerToeplitz { entries, scale })
    }

    fn entry(&self, row: usize, col: usize) -> BigInt {
        if col < row {
            BigInt::zero()
        } else {
            self.entries[col - row].clone()
        }
    }

    /// `L^k` times the minor.
    fn scaled_minor(&self, rows: &[usize], cols: &[usize]) -> BigInt {
        let m = rows.iter().map(|&r| cols.iter().map(|&c| self.entry(r, c)).collect()).collect();
        det_bigint(m)
    }

    fn unscale(&self, det: BigInt, order: usize) -> Rational {
        Rational::new(det, num_traits::pow(self.scale.clone(), order))
    }
}

/// The minor of `[a_{j-i}]` on the given (increasing) rows and columns.
pub fn toeplitz_minor(seed: &Seed, rows: &[usize], cols: &[usize]) -> Result<Rational> {
    if rows.len() != cols.len() {
        return Err(Error::Invalid(format!("{} rows but {} columns", rows.len(), cols.len())));
    }
    if !is_increasing(rows) || !is_increasing(cols) {
        return Err(Error::Invalid("minor indices must be strictly increasing".into()));
    }
    let degree = rows.iter().chain(cols).copied().max().unwrap_or(0);
    let t = IntegerToeplitz::new(seed, degree)?;
    Ok(t.unscale(t.scaled_minor(rows, cols), rows.len()))
}

fn is_increasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

/// Rows and columns of the Toeplitz minor equal to the Jacobi–Trudi
/// determinant `det[a_{λ_i - i + j}]`.
pub fn straight_shape_indices(lambda: &Partition) -> (Vec<usize>, Vec<usize>) {
    let top = lambda.part(0);
    let rows = (0..lambda.len()).map(|i| top + i - lambda.part(i)).collect();
    let cols = (0..lambda.len()).map(|j| top + j).collect();
    (rows, cols)
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

pub fn toeplitz_minors(seed: &Seed, max_order: usize, max_degree: usize) -> Result<MinorReport> {
    toeplitz_minors_with_budget(seed, max_order, max_degree, DEFAULT_MINOR_BUDGET)
}

/// Every minor with order `≤ max_order` whose row and column indices lie in
/// `0..=max_degree`.
pub fn toeplitz_minors_with_budget(
    seed: &Seed,
    max_order: usize,
    max_degree: usize,
    budget: u64,
) -> Result<MinorReport> {
    if max_order == 0 || max_degree == 0 {
        return Err(Error::Invalid("order and degree must be positive".into()));
    }
    let per_side = binomial(max_degree + 1, max_order.min(max_degree + 1));
    let work = &per_side * &per_side;
    if work > budget.into() {
        return Err(Error::Budget(format!(
            "C({}, {max_order})^2 = {work} minors exceeds the budget {budget}",
            max_degree + 1
        )));
    }
    let t = IntegerToeplitz::new(seed, max_degree)?;
    let mut report = MinorReport {
        max_order,
        max_degree,
        violations: Vec::new(),
        minors_checked: 0,
        decimation: None,
    };
    for k in 1..=max_order.min(max_degree + 1) {
        let sets = subsets(max_degree + 1, k);
        for rows in &sets {
            for cols in &sets {
                report.minors_checked += 1;
                let det = t.scaled_minor(rows, cols);
                if det.is_negative() {
                    report.violations.push((rows.clone(), cols.clone(), t.unscale(det, k)));
                }
            }
        }
    }
    report.violations.sort_by(|x, y| (&x.0, &x.1).cmp(&(&y.0, &y.1)));
    Ok(report)
}

/// Minors of the decimated seed `Σ a_{dn} t^n`.
pub fn decimation_check(seed: &Seed, d: usize, max_order: usize, max_degree: usize) -> Result<MinorReport> {
    if d == 0 {
        return Err(Error::Invalid("decimation step must be positive".into()));
    }
    if d * max_degree > seed.precision() {
        return Err(Error::PrecisionExceeded { index: d * max_degree, precision: seed.precision() });
    }
    let decimated = Seed::new(seed.series().truncate(d * max_degree)?.decimate(d)?)?;
    let mut report = toeplitz_minors(&decimated, max_order, max_degree)?;
    report.decimation = Some(d);
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityReport {
    pub basis: Basis,
    pub n_max: usize,
    /// The first strictly negative coefficient, scanning `n` upwards and
    /// partitions in reverse-lexicographic order.
    pub first_negative: Option<(usize, Partition, Rational)>,
    /// For `E`: the first `n` with `a_n < 0` or `n a_n > a_1 a_{n-1}`.
    pub e_precheck_failure: Option<usize>,
}

impl PositivityReport {
    pub fn passed(&self) -> bool {
        self.first_negative.is_none()
    }
}

/// First `n ≤ n_max` at which the necessary condition for e-positivity,
/// `0 ≤ n a_n ≤ a_1 a_{n-1}`, fails.
pub fn e_positivity_precheck(seed: &Seed, n_max: usize) -> Result<Option<usize>> {
    let a1 = seed.a(1)?.clone();
    for n in 1..=n_max {
        let an = seed.a(n)?;
        if an.is_negative() || from_usize(n) * an > &a1 * seed.a(n - 1)? {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Expands `R_1, ..., R_{n_max}` in `basis` (one of `S`, `E`, `H`) and looks
/// for a negative coefficient.
pub fn expansion_positivity(seed: &Seed, n_max: usize, basis: Basis) -> Result<PositivityReport> {
    if !matches!(basis, Basis::S | Basis::E | Basis::H) {
        return Err(Error::Invalid(format!("positivity is checked in s, e or h, not {basis}")));
    }
    if n_max > seed.precision() {
        return Err(Error::PrecisionExceeded { index: n_max, precision: seed.precision() });
    }
    let e_precheck_failure = if basis == Basis::E { e_positivity_precheck(seed, n_max)? } else { None };
    let mut first_negative = None;
    'outer: for n in 1..=n_max {
        let r = expansion_in(seed, n, basis)?;
        for lambda in enumerate_partitions(n) {
            let c = r.coeff(&lambda);
            if c.is_negative() {
                first_negative = Some((n, lambda, c));
                break 'outer;
            }
        }
    }
    if let (Some(n), None) = (e_precheck_failure, &first_negative) {
        return Err(Error::Inconsistent(format!(
            "a_{n} violates the e-positivity inequality but no negative e-coefficient was found"
        )));
    }
    Ok(PositivityReport { basis, n_max, first_negative, e_precheck_failure })
}
