//! Fraction-free exact linear algebra.
//!
//! Determinants and solves run Bareiss elimination over `BigInt`; rational
//! inputs are cleared of denominators row by row first.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn det_bigint(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Determinant of a square rational matrix.
pub fn det_rational(m: &[Vec<Rational>]) -> Rational {
    let mut scale = BigInt::one();
    let rows = m
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    Rational::new(det_bigint(rows), scale)
}

/// Solves `A X = B` for square nonsingular integer `A`.
///
/// Returns `None` when `A` is singular.
pub fn solve_bigint(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Option<Vec<Vec<Rational>>> {
    let n = a.len();
    let k = b.first().map_or(0, Vec::len);
    let width = n + k;
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().chain(rb).cloned().collect())
        .collect();
    let mut prev = BigInt::one();
    for c in 0..n {
        let pivot = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, pivot);
        for i in c + 1..n {
            for j in c + 1..width {
                let v = &m[c][c] * &m[i][j] - &m[i][c] * &m[c][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[c][c].clone();
    }
    // back substitution over the rationals
    let mut x = alloc::vec![alloc::vec![Rational::zero(); k]; n];
    for i in (0..n).rev() {
        for col in 0..k {
            let mut acc = Rational::from_integer(m[i][n + col].clone());
            for j in i + 1..n {
                if !m[i][j].is_zero() {
                    acc -= Rational::from_integer(m[i][j].clone()) * &x[j][col];
                }
            }
            x[i][col] = acc / Rational::from_integer(m[i][i].clone());
        }
    }
    Some(x)
}

/// Sign of a determinant as -1, 0 or 1.
pub fn det_sign(m: Vec<Vec<BigInt>>) -> i8 {
    let d = det_bigint(m);
    if d.is_zero() {
        0
    } else if d.is_negative() {
        -1
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;
    use alloc::vec;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    /// Leibniz expansion, the reference for small matrices.
    fn leibniz(m: &[Vec<Rational>]) -> Rational {
        fn go(m: &[Vec<Rational>], row: usize, used: &mut Vec<bool>, sign: i32) -> Rational {
            let n = m.len();
            if row == n {
                return rational(sign as i64, 1);
            }
            let mut total = Rational::zero();
            for c in 0..n {
                if used[c] {
                    continue;
                }
                let inversions = used[c + 1..].iter().filter(|&&u| u).count() as i32;
                used[c] = true;
                let s = if inversions % 2 == 0 { sign } else { -sign };
                total += &m[row][c] * go(m, row + 1, used, s);
                used[c] = false;
            }
            total
        }
        go(m, 0, &mut vec![false; m.len()], 1)
    }

    #[test]
    fn integer_determinants() {
        assert_eq!(det_bigint(vec![]), BigInt::one());
        assert_eq!(det_bigint(ints(&[&[1, 1], &[1, 1]])), BigInt::zero());
        assert_eq!(det_bigint(ints(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(det_bigint(ints(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]])), BigInt::from(6));
        assert_eq!(det_sign(ints(&[&[0, 1], &[1, 0]])), -1);
    }

    #[test]
    fn rational_determinant_matches_leibniz() {
        let m: Vec<Vec<Rational>> = (0..4)
            .map(|i| (0..4).map(|j| rational((i * 7 + j * 3) as i64 % 5 - 2, (i + j + 1) as i64)).collect())
            .collect();
        assert_eq!(det_rational(&m), leibniz(&m));
        let jt = vec![
            vec![rational(1, 2), rational(5, 24)],
            vec![rational(1, 1), rational(1, 2)],
        ];
        assert_eq!(det_rational(&jt), rational(1, 24));
    }

    #[test]
    fn solve_recovers_inverse() {
        let a = ints(&[&[2, 1, 0], &[0, 1, 3], &[1, 0, 1]]);
        let id = ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let x = solve_bigint(&a, &id).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let v: Rational = (0..3).map(|k| Rational::from_integer(a[i][k].clone()) * &x[k][j]).sum();
                assert_eq!(v, rational((i == j) as i64, 1));
            }
        }
        assert!(solve_bigint(&ints(&[&[1, 2], &[2, 4]]), &ints(&[&[1], &[1]])).is_none());
    }
}
