//! Truncated formal power series with exact rational coefficients.
//!
//! A [`Series`] of precision `N` knows the coefficients of `t^0..=t^N` and
//! nothing beyond: asking for a higher coefficient is an error, never zero.
//! Binary operations truncate to the smaller precision of their operands.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::from_usize;
use crate::{Error, Rational, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// Coefficients for `t^0..=t^N`; at least one must be given.
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Invalid("a series needs at least its constant term".into()));
        }
        Ok(Series { coeffs })
    }

    pub fn from_fn(precision: usize, f: impl FnMut(usize) -> Rational) -> Self {
        Series { coeffs: (0..=precision).map(f).collect() }
    }

    pub fn one(precision: usize) -> Self {
        Series::from_fn(precision, |n| if n == 0 { Rational::one() } else { Rational::zero() })
    }

    pub fn zero(precision: usize) -> Self {
        Series::from_fn(precision, |_| Rational::zero())
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&Rational> {
        self.coeffs
            .get(n)
            .ok_or(Error::PrecisionExceeded { index: n, precision: self.precision() })
    }

    pub fn truncate(&self, precision: usize) -> Result<Series> {
        if precision > self.precision() {
            return Err(Error::PrecisionExceeded { index: precision, precision: self.precision() });
        }
        Ok(Series { coeffs: self.coeffs[..=precision].to_vec() })
    }

    fn common(&self, other: &Series) -> usize {
        self.precision().min(other.precision())
    }

    pub fn add(&self, other: &Series) -> Series {
        Series::from_fn(self.common(other), |n| &self.coeffs[n] + &other.coeffs[n])
    }

    pub fn sub(&self, other: &Series) -> Series {
        Series::from_fn(self.common(other), |n| &self.coeffs[n] - &other.coeffs[n])
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Cauchy product truncated to the common precision.
    pub fn mul(&self, other: &Series) -> Series {
        Series::from_fn(self.common(other), |n| {
            (0..=n).map(|k| &self.coeffs[k] * &other.coeffs[n - k]).sum()
        })
    }

    pub fn pow(&self, k: u32) -> Series {
        let mut acc = Series::one(self.precision());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    fn require_constant_one(&self) -> Result<()> {
        if self.coeffs[0].is_one() {
            Ok(())
        } else {
            Err(Error::ConstantTerm { expected: "1" })
        }
    }

    /// Multiplicative inverse; the constant term must be 1.
    pub fn inverse(&self) -> Result<Series> {
        self.require_constant_one()?;
        let mut g: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        g.push(Rational::one());
        for n in 1..self.coeffs.len() {
            let s: Rational = (1..=n).map(|k| &self.coeffs[k] * &g[n - k]).sum();
            g.push(-s);
        }
        Ok(Series { coeffs: g })
    }

    /// Formal logarithm of a series with constant term 1.
    pub fn log(&self) -> Result<Series> {
        self.require_constant_one()?;
        let f = &self.coeffs;
        // n L_n = n f_n - sum_{k=1}^{n-1} k L_k f_{n-k}
        let mut l: Vec<Rational> = alloc::vec![Rational::zero()];
        for n in 1..f.len() {
            let mut acc = from_usize(n) * &f[n];
            for k in 1..n {
                acc -= from_usize(k) * &l[k] * &f[n - k];
            }
            l.push(acc / from_usize(n));
        }
        Ok(Series { coeffs: l })
    }

    /// Formal exponential of a series with zero constant term.
    pub fn exp(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm { expected: "0" });
        }
        let f = &self.coeffs;
        // n g_n = sum_{k=1}^n k f_k g_{n-k}
        let mut g: Vec<Rational> = alloc::vec![Rational::one()];
        for n in 1..f.len() {
            let acc: Rational = (1..=n).map(|k| from_usize(k) * &f[k] * &g[n - k]).sum();
            g.push(acc / from_usize(n));
        }
        Ok(Series { coeffs: g })
    }

    /// `F(t) -> F(-t)`.
    pub fn negate_arg(&self) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Keeps every `d`-th coefficient: `sum a_{dn} t^n`, precision `floor(N/d)`.
    pub fn decimate(&self, d: usize) -> Result<Series> {
        if d == 0 {
            return Err(Error::Invalid("decimation step must be positive".into()));
        }
        Ok(Series { coeffs: self.coeffs.iter().step_by(d).cloned().collect() })
    }

    /// Expansion of `F(t) / F(-ut)` as `sum_n P_n(u) t^n`.
    pub fn hook_ratio(&self) -> Result<PolySeries> {
        self.require_constant_one()?;
        let denominator = PolySeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, a)| {
                    let sign = if n % 2 == 0 { a.clone() } else { -a };
                    Poly::monomial(n, sign)
                })
                .collect(),
        };
        let numerator = PolySeries {
            coeffs: self.coeffs.iter().map(|a| Poly::constant(a.clone())).collect(),
        };
        Ok(numerator.mul(&denominator.inverse()?))
    }
}

/// Dense univariate polynomial in `u`, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(alloc::vec![c])
    }

    pub fn monomial(k: usize, c: Rational) -> Self {
        let mut coeffs = alloc::vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::default();
        }
        let mut out = alloc::vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn eval(&self, u: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * u + c)
    }

    /// Exact quotient by `1 + u`; errors when the remainder is nonzero.
    pub fn div_one_plus_u(&self) -> Result<Poly> {
        let Some(deg) = self.degree() else {
            return Ok(Poly::default());
        };
        // synthetic division by (u + 1), highest degree first
        let mut quotient = alloc::vec![Rational::zero(); deg];
        let mut carry = Rational::zero();
        for k in (0..=deg).rev() {
            let v = &self.coeffs[k] - &carry;
            if k == 0 {
                if !v.is_zero() {
                    return Err(Error::Inconsistent("polynomial is not divisible by 1+u".into()));
                }
            } else {
                quotient[k - 1] = v.clone();
                carry = v;
            }
        }
        Ok(Poly::new(quotient))
    }
}

/// Truncated power series in `t` whose coefficients are polynomials in `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySeries {
    coeffs: Vec<Poly>,
}

impl PolySeries {
    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Result<&Poly> {
        self.coeffs
            .get(n)
            .ok_or(Error::PrecisionExceeded { index: n, precision: self.precision() })
    }

    pub fn mul(&self, other: &PolySeries) -> PolySeries {
        let precision = self.precision().min(other.precision());
        PolySeries {
            coeffs: (0..=precision)
                .map(|n| {
                    (0..=n).fold(Poly::default(), |acc, k| {
                        acc.add(&self.coeffs[k].mul(&other.coeffs[n - k]))
                    })
                })
                .collect(),
        }
    }

    pub fn inverse(&self) -> Result<PolySeries> {
        if self.coeffs[0] != Poly::constant(Rational::one()) {
            return Err(Error::ConstantTerm { expected: "1" });
        }
        let mut g: Vec<Poly> = alloc::vec![Poly::constant(Rational::one())];
        let minus_one = Poly::constant(-Rational::one());
        for n in 1..self.coeffs.len() {
            let s = (1..=n).fold(Poly::default(), |acc, k| acc.add(&self.coeffs[k].mul(&g[n - k])));
            g.push(s.mul(&minus_one));
        }
        Ok(PolySeries { coeffs: g })
    }
}
