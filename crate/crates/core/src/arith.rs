use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

/// Exact scalar used throughout the crate.
pub type Rational = BigRational;

/// Shorthand for the fraction `num/den`. Panics if `den == 0`.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

pub(crate) fn to_rational(n: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n.clone()))
}

pub(crate) fn from_usize(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `Some(n)` when `q` is a nonnegative integer.
pub(crate) fn as_natural(q: &Rational) -> Option<BigUint> {
    if q.is_integer() {
        q.to_integer().to_biguint()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(factorial(0), BigUint::from(1u32));
        assert_eq!(factorial(10), BigUint::from(3_628_800u32));
        assert_eq!(binomial(6, 4), BigUint::from(15u32));
        assert_eq!(binomial(3, 5), BigUint::default());
        assert_eq!(as_natural(&rational(6, 3)), Some(BigUint::from(2u32)));
        assert_eq!(as_natural(&rational(-2, 1)), None);
        assert_eq!(as_natural(&rational(1, 2)), None);
    }
}
