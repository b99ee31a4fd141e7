//! Per-degree transition data with the power sums as pivot.
//!
//! Every row below is indexed by the partitions of `n` in reverse-lexicographic
//! order and stored densely.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::Deref;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::race::OnceBox;

use crate::arith::to_rational;
use crate::linalg::solve_bigint;
use crate::partition::{enumerate_partitions, Partition};
use crate::Rational;

pub(crate) struct Tables {
    pub parts: Vec<Partition>,
    pub index: BTreeMap<Partition, usize>,
    pub z: Vec<Rational>,
    /// `(-1)^{n - l(λ)}`, the eigenvalue of ω on `p_λ`.
    pub omega_sign: Vec<Rational>,
    /// Row λ: the monomial expansion of `p_λ` (integers).
    pub p_in_m: Vec<Vec<Rational>>,
    /// Row λ: the power-sum expansion of `m_λ`.
    pub m_in_p: Vec<Vec<Rational>>,
    /// Row λ: the power-sum expansion of `h_λ`.
    pub h_in_p: Vec<Vec<Rational>>,
    /// Row λ: the power-sum expansion of `s_λ`.
    pub s_in_p: Vec<Vec<Rational>>,
}

const CACHED_DEGREES: usize = 25;

static CACHE: [OnceBox<Tables>; CACHED_DEGREES] = [const { OnceBox::new() }; CACHED_DEGREES];

pub(crate) enum TablesRef {
    Cached(&'static Tables),
    Owned(Box<Tables>),
}

impl Deref for TablesRef {
    type Target = Tables;

    fn deref(&self) -> &Tables {
        match self {
            TablesRef::Cached(t) => t,
            TablesRef::Owned(t) => t,
        }
    }
}

/// Tables for degree `n`, built once per process for small degrees.
pub(crate) fn tables(n: usize) -> TablesRef {
    match CACHE.get(n) {
        Some(slot) => TablesRef::Cached(slot.get_or_init(|| Box::new(Tables::build(n)))),
        None => TablesRef::Owned(Box::new(Tables::build(n))),
    }
}

type IntForm = BTreeMap<Partition, BigInt>;

/// `p_k * m_μ` for every term of an integer monomial expansion.
///
/// Adding `k` to one occurrence of a part `v` (or appending a new part `k`)
/// gives `ν`; its coefficient is the multiplicity in `ν` of the enlarged part.
fn power_sum_times_monomials(k: usize, form: &IntForm) -> IntForm {
    let mut out = IntForm::new();
    for (mu, c) in form {
        let mut targets: Vec<(Partition, usize)> = Vec::new();
        let mut last = None;
        for (i, &v) in mu.parts().iter().enumerate() {
            if last == Some(v) {
                continue;
            }
            last = Some(v);
            let mut parts = mu.parts().to_vec();
            parts[i] += k;
            targets.push((Partition::from_unsorted(parts), v + k));
        }
        let mut parts = mu.parts().to_vec();
        parts.push(k);
        targets.push((Partition::from_unsorted(parts), k));
        for (nu, grown) in targets {
            let mult = nu.parts().iter().filter(|&&p| p == grown).count();
            *out.entry(nu).or_insert_with(BigInt::zero) += c * BigInt::from(mult);
        }
    }
    out
}

/// `s_λ = det[h_{λ_i - i + j}]` expanded over the nonzero permutation terms,
/// row by row, keyed by the set of used columns.
fn jacobi_trudi_h(lambda: &Partition) -> IntForm {
    let l = lambda.len();
    let mut states: BTreeMap<u64, IntForm> = BTreeMap::new();
    let mut start = IntForm::new();
    start.insert(Partition::empty(), BigInt::one());
    states.insert(0, start);
    for i in 0..l {
        let mut next: BTreeMap<u64, IntForm> = BTreeMap::new();
        for (mask, form) in &states {
            for j in 0..l {
                if mask & (1 << j) != 0 {
                    continue;
                }
                let idx = lambda.part(i) as isize - i as isize + j as isize;
                if idx < 0 {
                    continue;
                }
                let inversions = (mask >> (j + 1)).count_ones();
                let sign = if inversions % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                let slot = next.entry(mask | (1 << j)).or_default();
                for (nu, c) in form {
                    let key = if idx == 0 { nu.clone() } else { nu.union(&Partition::row(idx as usize)) };
                    *slot.entry(key).or_insert_with(BigInt::zero) += c * &sign;
                }
            }
        }
        states = next;
    }
    states.into_values().next().unwrap_or_default()
}

fn dense(form: impl IntoIterator<Item = (Partition, Rational)>, index: &BTreeMap<Partition, usize>) -> Vec<Rational> {
    let mut row = alloc::vec![Rational::zero(); index.len()];
    for (nu, c) in form {
        row[index[&nu]] += c;
    }
    row
}

/// Product of two power-sum expansions (multiset union of indices).
fn power_product(a: &BTreeMap<Partition, Rational>, b: &BTreeMap<Partition, Rational>) -> BTreeMap<Partition, Rational> {
    let mut out = BTreeMap::new();
    for (la, ca) in a {
        for (lb, cb) in b {
            *out.entry(la.union(lb)).or_insert_with(Rational::zero) += ca * cb;
        }
    }
    out
}

impl Tables {
    fn build(n: usize) -> Tables {
        let parts = enumerate_partitions(n);
        let index: BTreeMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let z: Vec<Rational> = parts.iter().map(|p| to_rational(&p.z())).collect();
        let omega_sign = parts
            .iter()
            .map(|p| if (n - p.len()).is_multiple_of(2) { Rational::one() } else { -Rational::one() })
            .collect();

        let p_in_m_int: Vec<Vec<BigInt>> = parts
            .iter()
            .map(|lambda| {
                let mut form = IntForm::new();
                form.insert(Partition::empty(), BigInt::one());
                for &k in lambda.parts() {
                    form = power_sum_times_monomials(k, &form);
                }
                let mut row = alloc::vec![BigInt::zero(); parts.len()];
                for (nu, c) in form {
                    row[index[&nu]] = c;
                }
                row
            })
            .collect();
        let p_in_m = p_in_m_int
            .iter()
            .map(|row| row.iter().map(|c| Rational::from_integer(c.clone())).collect())
            .collect();

        // p = C m  =>  m = C^{-1} p
        let identity: Vec<Vec<BigInt>> = (0..parts.len())
            .map(|i| (0..parts.len()).map(|j| BigInt::from((i == j) as u8)).collect())
            .collect();
        let m_in_p = solve_bigint(&p_in_m_int, &identity).expect("p-to-m transition matrix is invertible");

        // h_k = sum_{μ ⊢ k} p_μ / z_μ
        let h_single: Vec<BTreeMap<Partition, Rational>> = (0..=n)
            .map(|k| {
                enumerate_partitions(k)
                    .into_iter()
                    .map(|mu| {
                        let c = Rational::one() / to_rational(&mu.z());
                        (mu, c)
                    })
                    .collect()
            })
            .collect();
        let h_in_p: Vec<Vec<Rational>> = parts
            .iter()
            .map(|lambda| {
                let mut form = BTreeMap::new();
                form.insert(Partition::empty(), Rational::one());
                for &k in lambda.parts() {
                    form = power_product(&form, &h_single[k]);
                }
                dense(form, &index)
            })
            .collect();

        // Jacobi–Trudi rows of s_λ in the h basis
        let s_in_h: Vec<Vec<Rational>> = parts
            .iter()
            .map(|lambda| {
                dense(
                    jacobi_trudi_h(lambda).into_iter().map(|(nu, c)| (nu, Rational::from_integer(c))),
                    &index,
                )
            })
            .collect();
        let s_in_p = s_in_h
            .iter()
            .map(|row| {
                let mut out = alloc::vec![Rational::zero(); parts.len()];
                for (i, c) in row.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (o, h) in out.iter_mut().zip(&h_in_p[i]) {
                        *o += c * h;
                    }
                }
                out
            })
            .collect();

        Tables { parts, index, z, omega_sign, p_in_m, m_in_p, h_in_p, s_in_p }
    }
}
