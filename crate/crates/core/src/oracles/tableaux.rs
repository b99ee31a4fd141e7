//! Skew shapes and standard Young tableaux.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use super::budget;
use crate::arith::{as_natural, factorial, to_rational};
use crate::linalg::det_rational;
use crate::partition::Partition;
use crate::{Error, Rational, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Invalid(format!("{inner} does not fit inside {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(shape: Partition) -> Self {
        SkewShape { outer: shape, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn cells(&self) -> usize {
        self.outer.size() - self.inner.size()
    }
}

/// Formats as `[12,7,6,3,2]/[4,3,2,1]`.
impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// `ρ(λ) = σ/τ` with `σ_i = 2λ'_i + ℓ(λ') - i` and `τ_j = ℓ(λ') - j`: rows of
/// length `2λ'_i`, each starting one cell left of the row above.
pub fn rho_shape(lambda: &Partition) -> SkewShape {
    let conj = lambda.conjugate();
    let l = conj.len();
    let outer = (1..=l).map(|i| 2 * conj.part(i - 1) + l - i).collect();
    let inner = (1..=l).map(|j| l - j).collect();
    SkewShape { outer: Partition::from_unsorted(outer), inner: Partition::from_unsorted(inner) }
}

/// `N! det[1/(σ_i - τ_j - i + j)!]` for a shape with `N` cells.
pub fn syt_count_det(shape: &SkewShape) -> BigUint {
    let l = shape.outer.len();
    let m: Vec<Vec<Rational>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let k = shape.outer.part(i) as isize - shape.inner.part(j) as isize - i as isize + j as isize;
                    if k < 0 {
                        Rational::default()
                    } else {
                        Rational::from_integer(1.into()) / to_rational(&factorial(k as usize))
                    }
                })
                .collect()
        })
        .collect();
    let value = det_rational(&m) * to_rational(&factorial(shape.cells()));
    as_natural(&value).expect("Aitken determinant is a nonnegative integer")
}

/// Counts standard fillings by placing `1, 2, ...` one cell at a time.
pub fn syt_count_brute(shape: &SkewShape) -> Result<u64> {
    budget("cells", shape.cells(), 12)?;
    let outer = shape.outer.parts().to_vec();
    let inner: Vec<usize> = (0..outer.len()).map(|i| shape.inner.part(i)).collect();
    fn go(outer: &[usize], inner: &[usize], filled: &mut [usize], left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for i in 0..outer.len() {
            let col = inner[i] + filled[i];
            if col >= outer[i] || (i > 0 && col >= inner[i - 1] + filled[i - 1]) {
                continue;
            }
            filled[i] += 1;
            total += go(outer, inner, filled, left - 1);
            filled[i] -= 1;
        }
        total
    }
    Ok(go(&outer, &inner, &mut alloc::vec![0; outer.len()], shape.cells()))
}
