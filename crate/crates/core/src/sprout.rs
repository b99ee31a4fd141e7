//! Sprout sequences: `Σ R_n t^n = Π_i F(x_i t)` for a seed `F`.
//!
//! `R_n` is available along three independent routes: the monomial route
//! (`[m_λ]R_n = a_{λ_1} a_{λ_2} ...`), the power-sum route
//! (`[p_λ]R_n = z_λ^{-1} b_{λ_1} b_{λ_2} ...` with `log F = Σ b_n t^n / n`), and
//! the dual-basis route through the homomorphism `φ(h_n) = a_n`. The
//! `special_*` functions compute a closed form together with the generic
//! extraction and fail with [`Error::Inconsistent`] when the two disagree.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{from_usize, to_rational};
use crate::linalg::det_rational;
use crate::partition::{enumerate_partitions, Partition};
use crate::series::{Poly, Series};
use crate::symfunc::{Basis, SymFunc};
use crate::{Error, Rational, Result};

/// A seed series `F(t) = Σ a_n t^n` with `a_0 = 1`, together with the
/// logarithmic coefficients `b_n` (`log F = Σ_{n≥1} b_n t^n / n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    name: Option<String>,
    a: Series,
    b: Vec<Rational>,
}

impl Seed {
    pub fn new(a: Series) -> Result<Seed> {
        let log = a.log()?;
        let b = log
            .coeffs()
            .iter()
            .enumerate()
            .map(|(n, c)| if n == 0 { Rational::one() } else { from_usize(n) * c })
            .collect();
        Ok(Seed { name: None, a, b })
    }

    pub fn named(name: impl Into<String>, a: Series) -> Result<Seed> {
        Ok(Seed { name: Some(name.into()), ..Seed::new(a)? })
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn series(&self) -> &Series {
        &self.a
    }

    pub fn precision(&self) -> usize {
        self.a.precision()
    }

    pub fn a(&self, n: usize) -> Result<&Rational> {
        self.a.coeff(n)
    }

    /// `a_k` with `a_k = 0` for negative `k`.
    pub fn a_signed(&self, k: isize) -> Result<Rational> {
        if k < 0 {
            Ok(Rational::zero())
        } else {
            self.a.coeff(k as usize).cloned()
        }
    }

    /// `b_n`; `b_0 = 1` by convention.
    pub fn b(&self, n: usize) -> Result<&Rational> {
        self.b.get(n).ok_or(Error::PrecisionExceeded { index: n, precision: self.precision() })
    }

    /// `Σ_{n≥1} b_n t^n / n`, i.e. `log F`.
    pub fn log_series(&self) -> Series {
        Series::from_fn(self.precision(), |n| if n == 0 { Rational::zero() } else { &self.b[n] / from_usize(n) })
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.precision() {
            Err(Error::PrecisionExceeded { index: n, precision: self.precision() })
        } else {
            Ok(())
        }
    }

    fn a_product(&self, lambda: &Partition) -> Rational {
        lambda.parts().iter().map(|&k| &self.a.coeffs()[k]).product()
    }

    fn b_product(&self, lambda: &Partition) -> Rational {
        lambda.parts().iter().map(|&k| &self.b[k]).product()
    }
}

fn inconsistent(what: String) -> Error {
    Error::Inconsistent(what)
}

/// `R_n` in the monomial basis.
pub fn sprout_m(seed: &Seed, n: usize) -> Result<SymFunc> {
    seed.check(n)?;
    SymFunc::from_terms(Basis::M, n, enumerate_partitions(n).into_iter().map(|l| {
        let c = seed.a_product(&l);
        (l, c)
    }))
}

/// `R_n` in the power-sum basis.
pub fn sprout_p(seed: &Seed, n: usize) -> Result<SymFunc> {
    seed.check(n)?;
    SymFunc::from_terms(Basis::P, n, enumerate_partitions(n).into_iter().map(|l| {
        let c = seed.b_product(&l) / to_rational(&l.z());
        (l, c)
    }))
}

/// `⟨R_n, s_λ⟩ = det[a_{λ_i - i + j}]`.
pub fn schur_coeff(seed: &Seed, lambda: &Partition) -> Result<Rational> {
    seed.check(lambda.size())?;
    let l = lambda.len();
    let mut m = Vec::with_capacity(l);
    for i in 0..l {
        let row = (0..l)
            .map(|j| seed.a_signed(lambda.part(i) as isize - i as isize + j as isize))
            .collect::<Result<Vec<_>>>()?;
        m.push(row);
    }
    Ok(det_rational(&m))
}

/// The algebra map `φ` with `φ(h_n) = a_n`.
pub fn phi_hom(seed: &Seed, f: &SymFunc) -> Result<Rational> {
    seed.check(f.degree())?;
    Ok(f.convert(Basis::H).terms().map(|(l, c)| c * seed.a_product(l)).sum())
}

/// `R_n = Σ_λ φ(b*_λ) b_λ`, where `b*` is the dual basis of `basis`.
pub fn expansion_in(seed: &Seed, n: usize, basis: Basis) -> Result<SymFunc> {
    seed.check(n)?;
    let phi_of_h_form = |h_form: &SymFunc| -> Rational {
        h_form.terms().map(|(l, c)| c * seed.a_product(l)).sum()
    };
    let terms = enumerate_partitions(n).into_iter().map(|lambda| {
        let c = match basis {
            Basis::M => seed.a_product(&lambda),
            Basis::H => phi_of_h_form(&SymFunc::basis_element(Basis::M, lambda.clone()).convert(Basis::H)),
            Basis::P => {
                let dual = SymFunc::basis_element(Basis::P, lambda.clone())
                    .scale(&(Rational::one() / to_rational(&lambda.z())));
                phi_of_h_form(&dual.convert(Basis::H))
            }
            Basis::E => {
                // the dual of e_λ is ω m_λ; its h-form is the e-form of m_λ relabelled
                let e_form = SymFunc::basis_element(Basis::M, lambda.clone()).convert(Basis::E);
                e_form.terms().map(|(l, c)| c * seed.a_product(l)).sum()
            }
            Basis::S => phi_of_h_form(&SymFunc::basis_element(Basis::S, lambda.clone()).convert(Basis::H)),
        };
        (lambda, c)
    });
    SymFunc::from_terms(basis, n, terms.collect::<Vec<_>>())
}

/// The seed `1 / F(-t)` of the sequence `ω R_n`.
pub fn omega_seed(seed: &Seed) -> Result<Seed> {
    Seed::new(seed.a.negate_arg().inverse()?)
}

/// `Σ [s_n] R_n t^n`, which equals `F(t)`; also checks that `[s_n] R_n` is the
/// coefficient sum of the h-expansion.
pub fn special_sn(seed: &Seed, precision: usize) -> Result<Series> {
    seed.check(precision)?;
    for n in 0..=precision {
        let r = sprout_m(seed, n)?;
        let from_schur = r.convert(Basis::S).coeff(&Partition::row(n));
        let h_sum: Rational = r.convert(Basis::H).terms().map(|(_, c)| c.clone()).sum();
        let a_n = seed.a(n)?;
        if &from_schur != a_n || &h_sum != a_n {
            return Err(inconsistent(format!("[s_n]R_n at n = {n}: {from_schur} / h-sum {h_sum} vs a_n = {a_n}")));
        }
    }
    seed.a.truncate(precision)
}

/// `Σ [s_{1^n}] R_n t^n`, which equals `1 / F(-t)`.
pub fn special_s1n(seed: &Seed, precision: usize) -> Result<Series> {
    seed.check(precision)?;
    let closed = seed.a.negate_arg().inverse()?.truncate(precision)?;
    for n in 0..=precision {
        let generic = sprout_m(seed, n)?.convert(Basis::S).coeff(&Partition::column(n));
        if &generic != closed.coeff(n)? {
            return Err(inconsistent(format!("[s_(1^n)]R_n at n = {n}")));
        }
    }
    Ok(closed)
}

/// Series whose `n`-th coefficient is `[h_k^n] R_{kn}`.
///
/// The closed form is `1 / F(-t)` after replacing every `b_i` by `b_{ki}`,
/// i.e. `exp(-Σ_i b_{ki} (-t)^i / i)`; its linear coefficient is `b_k = [h_k]R_k`.
pub fn special_hk_series(seed: &Seed, k: usize, precision: usize) -> Result<Series> {
    if k == 0 {
        return Err(Error::Invalid("k must be positive".into()));
    }
    seed.check(k * precision)?;
    let exponent = Series::from_fn(precision, |i| {
        if i == 0 {
            return Rational::zero();
        }
        let c = &seed.b[k * i] / from_usize(i);
        // -(-1)^i
        if i % 2 == 1 { c } else { -c }
    });
    let closed = exponent.exp()?;
    for n in 0..=precision {
        let hk_n = Partition::from_unsorted(alloc::vec![k; n]);
        let generic = sprout_m(seed, k * n)?.convert(Basis::H).coeff(&hk_n);
        if &generic != closed.coeff(n)? {
            return Err(inconsistent(format!("[h_{k}^{n}]R_{}: {generic} vs {}", k * n, closed.coeff(n)?)));
        }
    }
    Ok(closed)
}

/// `[h_i h_j] R_{i+j}`: `b_i b_j - b_n` for `i ≠ j`, `(b_i^2 - b_n)/2` for `i = j`.
pub fn special_h_pair(seed: &Seed, i: usize, j: usize) -> Result<Rational> {
    if i == 0 || j == 0 {
        return Err(Error::Invalid("i and j must be positive".into()));
    }
    let n = i + j;
    seed.check(n)?;
    let (bi, bj, bn) = (&seed.b[i], &seed.b[j], &seed.b[n]);
    let closed = if i == j { (bi * bi - bn) / from_usize(2) } else { bi * bj - bn };
    let generic = sprout_m(seed, n)?.convert(Basis::H).coeff(&Partition::from_unsorted(alloc::vec![i, j]));
    if generic != closed {
        return Err(inconsistent(format!("[h_{i} h_{j}]R_{n}: {generic} vs {closed}")));
    }
    Ok(closed)
}

/// `Σ R_n(1^k) t^n`, which equals `F(t)^k`.
pub fn special_ones(seed: &Seed, precision: usize, k: usize) -> Result<Series> {
    seed.check(precision)?;
    let closed = seed.a.truncate(precision)?.pow(k as u32);
    for n in 0..=precision {
        let generic = sprout_m(seed, n)?.principal_specialize(k);
        if &generic != closed.coeff(n)? {
            return Err(inconsistent(format!("R_{n}(1^{k}): {generic} vs {}", closed.coeff(n)?)));
        }
    }
    Ok(closed)
}

/// `P_n(u) / (1 + u)` where `F(t) / F(-ut) = Σ P_n(u) t^n`; its coefficient of
/// `u^k` is the Schur coefficient of the hook `(n-k, 1^k)`.
pub fn special_hooks(seed: &Seed, n: usize) -> Result<Poly> {
    if n == 0 {
        return Err(Error::Invalid("hooks need n ≥ 1".into()));
    }
    seed.check(n)?;
    let ratio = seed.a.truncate(n)?.hook_ratio()?;
    let pn = ratio.coeff(n)?;
    if pn.degree().is_some_and(|d| d > n) {
        return Err(inconsistent(format!("P_{n}(u) has degree above {n}")));
    }
    let quotient = pn.div_one_plus_u()?;
    let hooks = (0..n)
        .map(|k| schur_coeff(seed, &Partition::hook(n, k)))
        .collect::<Result<Vec<_>>>()?;
    if quotient != Poly::new(hooks) {
        return Err(inconsistent(format!("hook Schur coefficients of R_{n} disagree with P_{n}(u)/(1+u)")));
    }
    Ok(quotient)
}

/// Outcome of checking `A(t) * (p_λ p_μ) = (A(t) * p_λ)(A(t) * p_μ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KroneckerReport {
    pub degree: usize,
    pub pairs_checked: usize,
    pub violations: Vec<(Partition, Partition)>,
}

impl KroneckerReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks, for every `λ ⊢ d`, `μ ⊢ n - d`, that the internal product with the
/// sprout sequence is multiplicative on `p_λ p_μ`, and that both sides equal
/// `b_λ b_μ p_{λ∪μ}`.
pub fn kronecker_hom_check(seed: &Seed, n: usize) -> Result<KroneckerReport> {
    seed.check(n)?;
    let r: Vec<SymFunc> = (0..=n).map(|d| sprout_p(seed, d)).collect::<Result<_>>()?;
    let mut report = KroneckerReport { degree: n, pairs_checked: 0, violations: Vec::new() };
    for d in 0..=n {
        for lambda in enumerate_partitions(d) {
            let p_lambda = SymFunc::basis_element(Basis::P, lambda.clone());
            let left_factor = r[d].kronecker(&p_lambda)?;
            for mu in enumerate_partitions(n - d) {
                let p_mu = SymFunc::basis_element(Basis::P, mu.clone());
                let lhs = r[n].kronecker(&p_lambda.multiply(&p_mu))?;
                let rhs = left_factor.multiply(&r[n - d].kronecker(&p_mu)?);
                let nu = lambda.union(&mu);
                let expected = SymFunc::from_terms(Basis::P, n, [(nu, seed.b_product(&lambda) * seed.b_product(&mu))])?;
                report.pairs_checked += 1;
                if lhs != rhs || lhs != expected {
                    report.violations.push((lambda.clone(), mu));
                }
            }
        }
    }
    Ok(report)
}
