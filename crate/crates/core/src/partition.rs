//! Integer partitions.
//!
//! Lists of partitions of a fixed `n` are always produced in reverse-lexicographic
//! order (`[4], [3,1], [2,2], [2,1,1], [1,1,1,1]`). The derived `Ord` is plain
//! lexicographic order on the parts, so iterating a `BTreeMap<Partition, _>`
//! backwards yields the same canonical order.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::factorial;
use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid("partition parts must be weakly decreasing".into()));
        }
        let size = parts.iter().sum();
        Ok(Partition { parts, size })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition `(n)`; empty when `n == 0`.
    pub fn row(n: usize) -> Self {
        Partition::from_unsorted(alloc::vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition::from_unsorted(alloc::vec![1; n])
    }

    /// The hook `(n - k, 1^k)` for `k < n`.
    pub fn hook(n: usize, k: usize) -> Self {
        assert!(k < n, "hook (n-k,1^k) needs k < n");
        let mut parts = alloc::vec![n - k];
        parts.extend(core::iter::repeat_n(1, k));
        Partition { parts, size: n }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// `m[i]` is the number of parts equal to `i`; `m[0]` is unused.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = alloc::vec![0; self.parts.first().map_or(1, |&p| p + 1)];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts, size: self.size }
    }

    /// `z_λ = prod_i i^{m_i} m_i!`, the order of the centralizer of a
    /// permutation of cycle type λ.
    pub fn z(&self) -> BigUint {
        self.multiplicities()
            .iter()
            .enumerate()
            .skip(1)
            .fold(BigUint::one(), |acc, (i, &m)| {
                acc * BigUint::from(i).pow(m as u32) * factorial(m)
            })
    }

    /// Multiset union of parts; the product index for multiplicative bases.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            if j == other.len() || (i < self.len() && self.parts[i] >= other.parts[j]) {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        Partition { parts, size: self.size + other.size }
    }

    /// Whether every part of `inner` fits inside `self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Formats as `[5,3,1,1]`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone(), size: n });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), n, &mut out);
    out
}

/// `n! / prod parts[i]!`.
pub fn multinomial(n: usize, parts: &[usize]) -> Result<BigUint> {
    let sum: usize = parts.iter().sum();
    if sum != n {
        return Err(Error::PartsSum { n, sum });
    }
    Ok(parts.iter().fold(factorial(n), |acc, &p| acc / factorial(p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// p(n) from Euler's pentagonal number theorem.
    fn pentagonal_counts(max: usize) -> Vec<u64> {
        let mut counts = vec![0i64; max + 1];
        counts[0] = 1;
        for n in 1..=max {
            let mut total = 0i64;
            for k in 1.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > n {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                total += sign * counts[n - g1];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= n {
                    total += sign * counts[n - g2];
                }
            }
            counts[n] = total;
        }
        counts.into_iter().map(|c| c as u64).collect()
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(
            enumerate_partitions(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(enumerate_partitions(10).len(), 42);
    }

    #[test]
    fn enumeration_counts_match_pentagonal_recurrence() {
        let counts = pentagonal_counts(30);
        for n in 0..=30 {
            assert_eq!(enumerate_partitions(n).len() as u64, counts[n], "n = {n}");
        }
    }

    #[test]
    fn enumeration_is_strictly_reverse_lex() {
        for n in 1..=12 {
            let list = enumerate_partitions(n);
            assert!(list.windows(2).all(|w| w[0] > w[1]));
            assert!(list.iter().all(|l| l.size() == n));
        }
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[5, 3, 1, 1]).conjugate(), p(&[4, 2, 2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(Partition::row(6).conjugate(), Partition::column(6));
    }

    #[test]
    fn conjugate_is_an_involution() {
        for n in 0..=12 {
            for l in enumerate_partitions(n) {
                assert_eq!(l.conjugate().conjugate(), l);
            }
        }
    }

    #[test]
    fn z_examples() {
        assert_eq!(Partition::column(5).z(), factorial(5));
        assert_eq!(p(&[2, 1]).z(), BigUint::from(2u32));
        assert_eq!(Partition::empty().z(), BigUint::from(1u32));
    }

    fn cycle_type(perm: &[usize]) -> Partition {
        let mut seen = vec![false; perm.len()];
        let mut parts = Vec::new();
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
                len += 1;
            }
            parts.push(len);
        }
        Partition::from_unsorted(parts)
    }

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for mut q in all_perms(n - 1) {
            for pos in 0..n {
                q.insert(pos, n - 1);
                out.push(q.clone());
                q.remove(pos);
            }
        }
        out
    }

    #[test]
    fn z_times_class_size_is_n_factorial() {
        for n in 0..=7 {
            let mut classes = alloc::collections::BTreeMap::new();
            for perm in all_perms(n) {
                *classes.entry(cycle_type(&perm)).or_insert(0u64) += 1;
            }
            for l in enumerate_partitions(n) {
                let size = classes.get(&l).copied().unwrap_or(0);
                assert_eq!(l.z() * BigUint::from(size), factorial(n), "{l}");
            }
        }
    }

    #[test]
    fn multinomial_values() {
        let oracle = factorial(10) / (factorial(6) * factorial(2) * factorial(2));
        assert_eq!(multinomial(10, &[6, 2, 2]).unwrap(), oracle);
        assert_eq!(oracle, BigUint::from(1260u32));
        assert_eq!(multinomial(10, &[4, 4, 2]).unwrap(), BigUint::from(3150u32));
        assert_eq!(multinomial(7, &[7]).unwrap(), BigUint::from(1u32));
        assert_eq!(multinomial(6, &[4, 2]).unwrap(), BigUint::from(15u32));
        assert_eq!(multinomial(5, &[4, 2]), Err(Error::PartsSum { n: 5, sum: 6 }));
    }

    #[test]
    fn construction_validates() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from_unsorted(vec![1, 0, 3, 1]), p(&[3, 1, 1]));
        assert_eq!(Partition::hook(4, 2), p(&[2, 1, 1]));
        assert_eq!(p(&[3, 1]).union(&p(&[2, 1])), p(&[3, 2, 1, 1]));
        assert_eq!(p(&[5, 3, 1, 1]).to_string(), "[5,3,1,1]");
    }

    proptest! {
        #[test]
        fn union_is_sorted_and_additive(a in proptest::collection::vec(1usize..6, 0..5),
                                        b in proptest::collection::vec(1usize..6, 0..5)) {
            let (a, b) = (Partition::from_unsorted(a), Partition::from_unsorted(b));
            let u = a.union(&b);
            prop_assert_eq!(u.size(), a.size() + b.size());
            prop_assert!(Partition::new(u.parts().to_vec()).is_ok());
            prop_assert_eq!(u, b.union(&a));
        }
    }
}
