//! Homogeneous symmetric functions in the m, p, e, h and s bases.
//!
//! Conversions go through the power sums: every element is first rewritten in
//! `p`, then read off in the target basis. Coefficients in `h`, `e` and `s` are
//! extracted with the Hall inner product against the dual basis
//! (`m`, `ω m` and `s` respectively).

mod tables;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::arith::{factorial, to_rational};
use crate::partition::Partition;
use crate::{Error, Rational, Result};
use tables::{tables, Tables};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    /// Monomial `m_λ`.
    M,
    /// Power sum `p_λ`.
    P,
    /// Elementary `e_λ`.
    E,
    /// Complete homogeneous `h_λ`.
    H,
    /// Schur `s_λ`.
    S,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::M, Basis::P, Basis::E, Basis::H, Basis::S];

    pub fn symbol(self) -> char {
        match self {
            Basis::M => 'm',
            Basis::P => 'p',
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::S => 's',
        }
    }

    pub fn from_symbol(s: &str) -> Option<Basis> {
        Basis::ALL.into_iter().find(|b| s.len() == 1 && s.starts_with(b.symbol()))
    }

    /// Bases whose elements multiply by concatenating indices.
    pub fn is_multiplicative(self) -> bool {
        matches!(self, Basis::P | Basis::E | Basis::H)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A homogeneous symmetric function with exact coefficients in one basis.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// elements (within one basis).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    degree: usize,
    terms: BTreeMap<Partition, Rational>,
}

impl SymFunc {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        SymFunc { basis, degree, terms: BTreeMap::new() }
    }

    /// The constant 1 (degree 0).
    pub fn one(basis: Basis) -> Self {
        SymFunc::basis_element(basis, Partition::empty())
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let degree = lambda.size();
        let mut terms = BTreeMap::new();
        terms.insert(lambda, Rational::one());
        SymFunc { basis, degree, terms }
    }

    /// Sums repeated keys and drops zeros; every key must have size `degree`.
    pub fn from_terms(
        basis: Basis,
        degree: usize,
        terms: impl IntoIterator<Item = (Partition, Rational)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<Partition, Rational> = BTreeMap::new();
        for (lambda, c) in terms {
            if lambda.size() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: lambda.size() });
            }
            *map.entry(lambda).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(SymFunc { basis, degree, terms: map })
    }

    fn from_dense(basis: Basis, t: &Tables, coeffs: Vec<Rational>) -> Self {
        let terms = t
            .parts
            .iter()
            .zip(coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| (p.clone(), c))
            .collect();
        SymFunc { basis, degree: t.parts[0].size(), terms }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Nonzero terms in reverse-lexicographic partition order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &Rational)> {
        self.terms.iter().rev()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> SymFunc {
        let terms = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect()
        };
        SymFunc { terms, ..self.clone() }
    }

    /// Sum in `self`'s basis (the other operand is converted if needed).
    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        let other = other.convert(self.basis);
        let mut terms = self.terms.clone();
        for (k, v) in other.terms {
            *terms.entry(k).or_insert_with(Rational::zero) += v;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(SymFunc { terms, ..self.clone() })
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.add(&other.scale(&-Rational::one()))
    }

    fn to_power_dense(&self, t: &Tables) -> Vec<Rational> {
        let mut out = alloc::vec![Rational::zero(); t.parts.len()];
        let axpy = |out: &mut Vec<Rational>, c: &Rational, row: &[Rational]| {
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o += c * r;
                }
            }
        };
        for (lambda, c) in &self.terms {
            let i = t.index[lambda];
            match self.basis {
                Basis::P => out[i] += c,
                Basis::M => axpy(&mut out, c, &t.m_in_p[i]),
                Basis::H => axpy(&mut out, c, &t.h_in_p[i]),
                Basis::S => axpy(&mut out, c, &t.s_in_p[i]),
                Basis::E => {
                    // e_λ = ω h_λ
                    for ((o, r), sign) in out.iter_mut().zip(&t.h_in_p[i]).zip(&t.omega_sign) {
                        if !r.is_zero() {
                            *o += c * r * sign;
                        }
                    }
                }
            }
        }
        out
    }

    fn from_power_dense(g: &[Rational], target: Basis, t: &Tables) -> SymFunc {
        let len = t.parts.len();
        // ⟨g, f⟩ = Σ z_μ g_μ f_μ in power-sum coordinates
        let pair = |weights: &[Rational], row: &[Rational]| -> Rational {
            weights.iter().zip(row).filter(|(w, _)| !w.is_zero()).map(|(w, r)| w * r).sum()
        };
        let weighted: Vec<Rational> = g.iter().zip(&t.z).map(|(c, z)| c * z).collect();
        let coeffs: Vec<Rational> = match target {
            Basis::P => g.to_vec(),
            Basis::M => (0..len)
                .map(|lam| (0..len).filter(|&mu| !g[mu].is_zero()).map(|mu| &g[mu] * &t.p_in_m[mu][lam]).sum())
                .collect(),
            Basis::H => (0..len).map(|lam| pair(&weighted, &t.m_in_p[lam])).collect(),
            Basis::E => {
                let flipped: Vec<Rational> = weighted.iter().zip(&t.omega_sign).map(|(w, s)| w * s).collect();
                (0..len).map(|lam| pair(&flipped, &t.m_in_p[lam])).collect()
            }
            Basis::S => (0..len).map(|lam| pair(&weighted, &t.s_in_p[lam])).collect(),
        };
        SymFunc::from_dense(target, t, coeffs)
    }

    /// The same element written in another basis.
    pub fn convert(&self, target: Basis) -> SymFunc {
        if target == self.basis {
            return self.clone();
        }
        let t = tables(self.degree);
        let g = self.to_power_dense(&t);
        SymFunc::from_power_dense(&g, target, &t)
    }

    /// Product. Same-basis operands keep their basis; mixed operands give a
    /// power-sum result.
    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        let target = if self.basis == other.basis { self.basis } else { Basis::P };
        let work = if target.is_multiplicative() { target } else { Basis::P };
        let (a, b) = (self.convert(work), other.convert(work));
        let mut terms: BTreeMap<Partition, Rational> = BTreeMap::new();
        for (la, ca) in &a.terms {
            for (lb, cb) in &b.terms {
                *terms.entry(la.union(lb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        SymFunc { basis: work, degree: self.degree + other.degree, terms }.convert(target)
    }

    /// The involution ω: `p_n -> (-1)^{n-1} p_n`, `e_λ <-> h_λ`, `s_λ -> s_λ'`.
    pub fn omega(&self) -> SymFunc {
        match self.basis {
            Basis::H => SymFunc { basis: Basis::E, ..self.clone() },
            Basis::E => SymFunc { basis: Basis::H, ..self.clone() },
            Basis::S => SymFunc {
                terms: self.terms.iter().map(|(k, v)| (k.conjugate(), v.clone())).collect(),
                ..self.clone()
            },
            Basis::P => SymFunc {
                terms: self
                    .terms
                    .iter()
                    .map(|(k, v)| {
                        let v = if (self.degree - k.len()).is_multiple_of(2) { v.clone() } else { -v };
                        (k.clone(), v)
                    })
                    .collect(),
                ..self.clone()
            },
            Basis::M => self.convert(Basis::P).omega().convert(Basis::M),
        }
    }

    /// Hall inner product; zero for different degrees.
    pub fn scalar_product(&self, other: &SymFunc) -> Rational {
        if self.degree != other.degree {
            return Rational::zero();
        }
        let t = tables(self.degree);
        let (a, b) = (self.to_power_dense(&t), other.to_power_dense(&t));
        a.iter().zip(&b).zip(&t.z).map(|((x, y), z)| x * y * z).sum()
    }

    /// Internal product, `p_λ * p_μ = δ_{λμ} z_λ p_λ`, returned in `self`'s basis.
    pub fn kronecker(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        let t = tables(self.degree);
        let (a, b) = (self.to_power_dense(&t), other.to_power_dense(&t));
        let g: Vec<Rational> = a.iter().zip(&b).zip(&t.z).map(|((x, y), z)| x * y * z).collect();
        Ok(SymFunc::from_dense(Basis::P, &t, g).convert(self.basis))
    }

    /// `⟨f, p_1^n⟩`.
    pub fn dim(&self) -> Rational {
        let p1n = self.convert(Basis::P).coeff(&Partition::column(self.degree));
        p1n * to_rational(&factorial(self.degree))
    }

    /// Value at `x_1 = ... = x_k = 1`, all other variables 0.
    pub fn principal_specialize(&self, k: usize) -> Rational {
        let m = self.convert(Basis::M);
        m.terms
            .iter()
            .filter(|(lambda, _)| lambda.len() <= k)
            .map(|(lambda, c)| {
                // distinct arrangements of the parts into k slots
                let slots = lambda
                    .multiplicities()
                    .iter()
                    .fold(factorial(k) / factorial(k - lambda.len()), |acc, &m| acc / factorial(m));
                c * to_rational(&slots)
            })
            .sum()
    }
}

/// Rows are the basis elements of `from`, columns their coefficients in `to`,
/// both in reverse-lexicographic order.
pub fn transition_matrix(from: Basis, to: Basis, n: usize) -> Vec<Vec<Rational>> {
    let t = tables(n);
    t.parts
        .iter()
        .map(|lambda| {
            let f = SymFunc::basis_element(from, lambda.clone()).convert(to);
            t.parts.iter().map(|mu| f.coeff(mu)).collect()
        })
        .collect()
}

/// Partitions of `n` in the order used by [`transition_matrix`].
pub fn basis_index(n: usize) -> Vec<Partition> {
    tables(n).parts.clone()
}

/// `Σ_λ p_λ / z_λ`, the unit of the internal product in degree `n`.
pub fn kronecker_unit(n: usize) -> SymFunc {
    let t = tables(n);
    let coeffs = t.z.iter().map(|z| Rational::one() / z).collect();
    SymFunc::from_dense(Basis::P, &t, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;
    use crate::partition::enumerate_partitions;
    use alloc::vec;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn el(b: Basis, parts: &[usize]) -> SymFunc {
        SymFunc::basis_element(b, p(parts))
    }

    fn sf(b: Basis, n: usize, terms: &[(&[usize], i64, i64)]) -> SymFunc {
        SymFunc::from_terms(b, n, terms.iter().map(|&(l, a, q)| (p(l), rational(a, q)))).unwrap()
    }

    #[test]
    fn newton_relation() {
        let expect = sf(Basis::P, 2, &[(&[1, 1], 1, 2), (&[2], -1, 2)]);
        assert_eq!(el(Basis::M, &[1, 1]).convert(Basis::P), expect);
        assert_eq!(el(Basis::H, &[2]).convert(Basis::M), sf(Basis::M, 2, &[(&[2], 1, 1), (&[1, 1], 1, 1)]));
    }

    #[test]
    fn monomial_in_elementary() {
        let e = el(Basis::M, &[3]).convert(Basis::E);
        assert_eq!(e.coeff(&p(&[1, 1, 1])), rational(1, 1));
        assert_eq!(e.coeff(&p(&[2, 1])), rational(-3, 1));
        assert_eq!(e.coeff(&p(&[3])), rational(3, 1));
    }

    #[test]
    fn lemma_on_leading_elementary_coefficients() {
        for n in 2..=8 {
            let top = p(&vec![1; n]);
            let next = Partition::from_unsorted([vec![2], vec![1; n - 2]].concat());
            for lambda in enumerate_partitions(n) {
                let e = SymFunc::basis_element(Basis::M, lambda.clone()).convert(Basis::E);
                let first = if lambda == Partition::row(n) { 1 } else { 0 };
                assert_eq!(e.coeff(&top), rational(first, 1), "{lambda}");
                let second = if lambda == Partition::row(n) {
                    -(n as i64)
                } else if lambda == Partition::from_unsorted(vec![n - 1, 1]) {
                    1
                } else {
                    0
                };
                assert_eq!(e.coeff(&next), rational(second, 1), "{lambda}");
            }
        }
    }

    #[test]
    fn multiplication() {
        assert_eq!(el(Basis::P, &[2]).multiply(&el(Basis::P, &[1])), el(Basis::P, &[2, 1]));
        let h11 = el(Basis::H, &[1]).multiply(&el(Basis::H, &[1]));
        assert_eq!(h11, el(Basis::H, &[1, 1]));
        assert_eq!(h11.convert(Basis::M), sf(Basis::M, 2, &[(&[2], 1, 1), (&[1, 1], 2, 1)]));
        let e21 = el(Basis::E, &[2]).multiply(&el(Basis::E, &[1]));
        assert_eq!(e21.convert(Basis::M).coeff(&p(&[2, 1])), rational(1, 1));
        let mixed = el(Basis::M, &[1]).multiply(&el(Basis::S, &[1]));
        assert_eq!(mixed.basis(), Basis::P);
        let schur = el(Basis::S, &[1]).multiply(&el(Basis::S, &[1]));
        assert_eq!(schur, sf(Basis::S, 2, &[(&[2], 1, 1), (&[1, 1], 1, 1)]));
    }

    #[test]
    fn omega_examples() {
        for n in 1..=6 {
            assert_eq!(el(Basis::H, &[n]).omega().convert(Basis::E), el(Basis::E, &[n]));
            let sn = el(Basis::S, &[n]).convert(Basis::P).omega().convert(Basis::S);
            assert_eq!(sn, SymFunc::basis_element(Basis::S, Partition::column(n)));
        }
    }

    #[test]
    fn inner_products() {
        for n in 1..=6 {
            let p1n = SymFunc::basis_element(Basis::P, Partition::column(n));
            assert_eq!(p1n.scalar_product(&p1n), to_rational(&factorial(n)));
        }
        assert_eq!(el(Basis::H, &[2]).scalar_product(&el(Basis::M, &[2])), rational(1, 1));
        assert_eq!(el(Basis::H, &[2]).scalar_product(&el(Basis::M, &[1])), rational(0, 1));
        for n in 1..=6 {
            let parts = enumerate_partitions(n);
            for a in &parts {
                for b in &parts {
                    let v = SymFunc::basis_element(Basis::S, a.clone())
                        .scalar_product(&SymFunc::basis_element(Basis::S, b.clone()));
                    assert_eq!(v, rational((a == b) as i64, 1));
                }
            }
        }
    }

    #[test]
    fn monomials_and_complete_are_dual() {
        for n in 0..=8 {
            let parts = enumerate_partitions(n);
            for a in &parts {
                let m = SymFunc::basis_element(Basis::M, a.clone());
                for b in &parts {
                    let v = m.scalar_product(&SymFunc::basis_element(Basis::H, b.clone()));
                    assert_eq!(v, rational((a == b) as i64, 1), "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn kronecker_products() {
        assert_eq!(el(Basis::P, &[2]).kronecker(&el(Basis::P, &[2])).unwrap(), sf(Basis::P, 2, &[(&[2], 2, 1)]));
        assert!(el(Basis::P, &[2]).kronecker(&el(Basis::P, &[1, 1])).unwrap().is_zero());
        assert_eq!(el(Basis::H, &[2]).kronecker(&el(Basis::H, &[2])).unwrap(), el(Basis::H, &[2]));
        assert!(el(Basis::H, &[2]).kronecker(&el(Basis::H, &[1])).is_err());
    }

    #[test]
    fn kronecker_unit_is_h_n() {
        for n in 0..=6 {
            assert_eq!(kronecker_unit(n).convert(Basis::H), SymFunc::basis_element(Basis::H, Partition::row(n)));
            for lambda in enumerate_partitions(n) {
                for b in Basis::ALL {
                    let f = SymFunc::basis_element(b, lambda.clone());
                    assert_eq!(f.kronecker(&kronecker_unit(n)).unwrap(), f);
                }
            }
        }
    }

    #[test]
    fn dimensions() {
        for n in 1..=6 {
            assert_eq!(el(Basis::H, &[n]).dim(), rational(1, 1));
            let p1n = SymFunc::basis_element(Basis::P, Partition::column(n));
            assert_eq!(p1n.scale(&(Rational::one() / to_rational(&factorial(n)))).dim(), rational(1, 1));
        }
        assert_eq!(el(Basis::S, &[2, 1]).dim(), rational(2, 1));
        assert_eq!(el(Basis::S, &[3, 2]).dim(), rational(5, 1));
    }

    #[test]
    fn principal_specializations() {
        for n in 0..=5 {
            let h_n = SymFunc::basis_element(Basis::H, Partition::row(n));
            assert_eq!(h_n.principal_specialize(0), rational((n == 0) as i64, 1));
            for k in 1..=5 {
                let expect = crate::arith::binomial(n + k - 1, n);
                assert_eq!(h_n.principal_specialize(k), to_rational(&expect));
            }
        }
        assert_eq!(el(Basis::E, &[4]).principal_specialize(3), rational(0, 1));
        assert_eq!(el(Basis::M, &[1, 1]).principal_specialize(3), rational(3, 1));
    }

    #[test]
    fn round_trips_through_every_basis_pair() {
        for n in 0..=8 {
            for lambda in enumerate_partitions(n) {
                for from in Basis::ALL {
                    let f = SymFunc::basis_element(from, lambda.clone());
                    for to in Basis::ALL {
                        assert_eq!(f.convert(to).convert(from), f, "{from}{lambda} via {to}");
                    }
                }
            }
        }
    }

    #[test]
    fn transition_matrices_are_mutually_inverse() {
        let n = 5;
        let a = transition_matrix(Basis::S, Basis::M, n);
        let b = transition_matrix(Basis::M, Basis::S, n);
        let len = a.len();
        for i in 0..len {
            for j in 0..len {
                let v: Rational = (0..len).map(|k| &a[i][k] * &b[k][j]).sum();
                assert_eq!(v, rational((i == j) as i64, 1));
            }
        }
        assert_eq!(basis_index(n).len(), len);
    }

    #[test]
    fn construction_rejects_wrong_degree() {
        assert!(SymFunc::from_terms(Basis::M, 3, [(p(&[2]), rational(1, 1))]).is_err());
        let z = SymFunc::from_terms(Basis::M, 2, [(p(&[2]), rational(1, 1)), (p(&[2]), rational(-1, 1))]).unwrap();
        assert!(z.is_zero());
        assert!(el(Basis::M, &[2]).add(&el(Basis::M, &[1])).is_err());
        assert_eq!(Basis::from_symbol("h"), Some(Basis::H));
        assert_eq!(Basis::from_symbol("x"), None);
    }

    fn arb_element(max_degree: usize) -> impl Strategy<Value = SymFunc> {
        (0..=max_degree, 0usize..5, proptest::collection::vec(-5i64..6, 11)).prop_map(|(n, b, cs)| {
            let parts = enumerate_partitions(n);
            SymFunc::from_terms(
                Basis::ALL[b],
                n,
                parts.into_iter().zip(cs).map(|(l, c)| (l, rational(c, 1))),
            )
            .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn omega_is_an_involutive_ring_map(f in arb_element(3), g in arb_element(3)) {
            prop_assert_eq!(f.omega().omega(), f.clone());
            let lhs = f.multiply(&g).omega().convert(Basis::P);
            let rhs = f.omega().multiply(&g.omega()).convert(Basis::P);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn omega_is_an_isometry(f in arb_element(6)) {
            let g = SymFunc::basis_element(Basis::H, Partition::row(f.degree()));
            prop_assert_eq!(f.omega().scalar_product(&g.omega()), f.scalar_product(&g));
        }
    }

    #[test]
    fn degree_six_omega_involution() {
        let f = sf(Basis::S, 6, &[(&[3, 2, 1], 2, 1), (&[4, 1, 1], -1, 3), (&[6], 5, 1)]);
        for b in Basis::ALL {
            let g = f.convert(b);
            assert_eq!(g.omega().omega(), g);
        }
    }
}
