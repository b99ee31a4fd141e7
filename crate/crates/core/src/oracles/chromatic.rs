//! Perfect matchings, their interval orders, and chromatic symmetric functions.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::budget;
use crate::arith::{factorial, to_rational};
use crate::partition::Partition;
use crate::symfunc::{Basis, SymFunc};
use crate::{Error, Rational, Result};

/// A perfect matching of `{1, ..., 2n}`; pairs are `(a, b)` with `a < b`,
/// sorted by `a`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut pairs: Vec<(usize, usize)> = pairs.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        pairs.sort();
        let mut seen: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        seen.sort();
        if seen.iter().enumerate().any(|(i, &v)| v != i + 1) {
            return Err(Error::Invalid("a matching must cover 1..=2n exactly once".into()));
        }
        Ok(Matching { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Formats as `{1,8} {2,3} {4,5} {6,7}`.
impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{{{a},{b}}}")?;
        }
        Ok(())
    }
}

/// All `(2n-1)!!` perfect matchings of `{1, ..., 2n}` in lexicographic order.
pub fn matchings(n: usize) -> Result<Vec<Matching>> {
    budget("n", n, 6)?;
    fn go(free: &mut Vec<usize>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Matching>) {
        if free.is_empty() {
            out.push(Matching { pairs: cur.clone() });
            return;
        }
        let a = free.remove(0);
        for i in 0..free.len() {
            let b = free.remove(i);
            cur.push((a, b));
            go(free, cur, out);
            cur.pop();
            free.insert(i, b);
        }
        free.insert(0, a);
    }
    let mut out = Vec::new();
    go(&mut (1..=2 * n).collect(), &mut Vec::new(), &mut out);
    Ok(out)
}

/// The interval order on the pairs of a matching: `{a,b} < {c,d}` iff
/// `max{a,b} < min{c,d}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalOrder {
    elements: Vec<(usize, usize)>,
}

impl IntervalOrder {
    pub fn from_matching(m: &Matching) -> Self {
        IntervalOrder { elements: m.pairs.clone() }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        self.elements[i].1 < self.elements[j].0
    }

    pub fn is_strict_partial_order(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| !self.less(i, i))
            && (0..n).all(|i| {
                (0..n).all(|j| !self.less(i, j) || (0..n).all(|k| !self.less(j, k) || self.less(i, k)))
            })
    }

    /// No induced `2 + 2`: whenever `a < b` and `c < d`, also `a < d` or `c < b`.
    pub fn is_two_plus_two_free(&self) -> bool {
        let n = self.len();
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| self.less(i, j)).collect();
        pairs.iter().all(|&(a, b)| pairs.iter().all(|&(c, d)| self.less(a, d) || self.less(c, b)))
    }

    pub fn incomparability_graph(&self) -> Graph {
        let n = self.len();
        let mut g = Graph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                if !self.less(i, j) && !self.less(j, i) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

/// A simple undirected graph on `0..n` stored as adjacency bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<u32>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        assert!(n <= 32, "at most 32 vertices");
        Graph { adj: alloc::vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(Error::Invalid(format!("bad edge ({u}, {v}) on {n} vertices")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1 << v) != 0
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    fn is_stable(&self, set: u32) -> bool {
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            if self.adj[v] & set != 0 {
                return false;
            }
            rest &= rest - 1;
        }
        true
    }
}

/// `K_{1,3}`, with vertex 0 as the centre.
pub fn claw_graph() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).expect("valid edges")
}

/// `{1,8} {2,3} {4,5} {6,7}`, whose interval order has the claw as
/// incomparability graph.
pub fn claw_matching() -> Matching {
    Matching::new([(1, 8), (2, 3), (4, 5), (6, 7)]).expect("valid matching")
}

/// Calls `f` with the block sizes of every partition of the vertex set into
/// stable sets.
fn stable_partitions(g: &Graph, remaining: u32, sizes: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if remaining == 0 {
        f(sizes);
        return;
    }
    let v = remaining.trailing_zeros();
    let others = remaining & !(1 << v) & !g.adj[v as usize];
    // every subset of the non-neighbours of v, joined with v
    let mut sub = others;
    loop {
        let block = sub | (1 << v);
        if g.is_stable(block) {
            sizes.push(block.count_ones() as usize);
            stable_partitions(g, remaining & !block, sizes, f);
            sizes.pop();
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & others;
    }
}

/// `X_G` in the monomial basis: `[m_λ] X_G` is `Π_i m_i(λ)!` times the number
/// of stable set partitions with block sizes `λ`.
pub fn chromatic_sym(g: &Graph, degree: usize) -> Result<SymFunc> {
    if g.vertex_count() != degree {
        return Err(Error::DegreeMismatch { left: degree, right: g.vertex_count() });
    }
    budget("vertex count", degree, 8)?;
    let mut counts: alloc::collections::BTreeMap<Partition, u64> = Default::default();
    stable_partitions(g, (1u32 << degree) - 1, &mut Vec::new(), &mut |sizes| {
        *counts.entry(Partition::from_unsorted(sizes.to_vec())).or_insert(0) += 1;
    });
    SymFunc::from_terms(
        Basis::M,
        degree,
        counts.into_iter().map(|(lambda, c)| {
            let aug = lambda.multiplicities().iter().fold(Rational::from_integer(c.into()), |acc, &m| {
                acc * to_rational(&factorial(m))
            });
            (lambda, aug)
        }),
    )
}

/// `Σ_M ω X_{Inc(P_M)}` over all perfect matchings of `{1, ..., 2n}`, in the
/// monomial basis.
pub fn uio_sum(n: usize) -> Result<SymFunc> {
    budget("n", n, 5)?;
    let mut total = SymFunc::zero(Basis::P, n);
    for m in matchings(n)? {
        let g = IntervalOrder::from_matching(&m).incomparability_graph();
        total = total.add(&chromatic_sym(&g, n)?.convert(Basis::P))?;
    }
    Ok(total.omega().convert(Basis::M))
}
