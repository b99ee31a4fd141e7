//! Human-readable text and LaTeX renderings.
//!
//! Text terms run from `[1,1,...]` up to `[n]` (ascending lexicographic), so
//! `6! A_3` prints as `h[1,1,1] + 12·h[2,1] + 48·h[3]`.

use num_traits::{One, Signed, Zero};
use sprout_core::series::Poly;
use sprout_core::{Partition, Rational, Series, SymFunc};

/// `p/q`, or just `p` for integers.
pub fn rational_text(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Joins signed terms as `a + b - c`; `render` gets the absolute coefficient.
fn join_signed<'a, T: 'a>(
    terms: impl Iterator<Item = (&'a Rational, T)>,
    mut render: impl FnMut(&Rational, T) -> String,
) -> String {
    let mut out = String::new();
    for (c, item) in terms {
        let body = render(&c.abs(), item);
        match (out.is_empty(), c.is_negative()) {
            (true, false) => out.push_str(&body),
            (true, true) => out.push_str(&format!("-{body}")),
            (false, false) => out.push_str(&format!(" + {body}")),
            (false, true) => out.push_str(&format!(" - {body}")),
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

pub fn symfunc_text(f: &SymFunc) -> String {
    let sym = f.basis().symbol();
    join_signed(f.terms().rev().map(|(l, c)| (c, l)), |c, lambda| {
        if lambda.is_empty() {
            rational_text(c)
        } else if c.is_one() {
            format!("{sym}{lambda}")
        } else {
            format!("{}·{sym}{lambda}", rational_text(c))
        }
    })
}

fn latex_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

/// `h_{2} h_{1}^{2}` for multiplicative bases, `s_{2,1,1}` otherwise.
fn latex_basis_element(f: &SymFunc, lambda: &Partition) -> String {
    let sym = f.basis().symbol();
    if f.basis().is_multiplicative() {
        let mults = lambda.multiplicities();
        (1..mults.len())
            .rev()
            .filter(|&k| mults[k] > 0)
            .map(|k| match mults[k] {
                1 => format!("{sym}_{{{k}}}"),
                m => format!("{sym}_{{{k}}}^{{{m}}}"),
            })
            .collect::<Vec<_>>()
            .join(" ")
    } else {
        let parts: Vec<String> = lambda.parts().iter().map(|p| p.to_string()).collect();
        format!("{sym}_{{{}}}", parts.join(","))
    }
}

pub fn symfunc_latex(f: &SymFunc) -> String {
    join_signed(f.terms().rev().map(|(l, c)| (c, l)), |c, lambda| {
        if lambda.is_empty() {
            latex_rational(c)
        } else if c.is_one() {
            latex_basis_element(f, lambda)
        } else {
            format!("{} {}", latex_rational(c), latex_basis_element(f, lambda))
        }
    })
}

fn power(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.into(),
        _ => format!("{var}^{k}"),
    }
}

fn polynomial_text(coeffs: &[Rational], var: &str) -> String {
    let terms = coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (c, k));
    join_signed(terms, |c, k| match (k, c.is_one()) {
        (0, _) => rational_text(c),
        (_, true) => power(var, k),
        _ => format!("{}·{}", rational_text(c), power(var, k)),
    })
}

/// `1 + 1/2·t + 5/24·t^2 + O(t^3)`.
pub fn series_text(s: &Series) -> String {
    format!("{} + O(t^{})", polynomial_text(s.coeffs(), "t"), s.precision() + 1)
}

pub fn poly_text(p: &Poly, var: &str) -> String {
    polynomial_text(p.coeffs(), var)
}
