//! Command-line front end for `sprout-core`: text, JSON and LaTeX output,
//! seed files, and the named verification suites.

pub mod app;
pub mod format;
pub mod json;
pub mod seedfile;
pub mod verify;

pub use app::run;

use sprout_core::{factorial, BigInt, Rational};

/// `n!` as a rational.
pub fn factorial_rational(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(factorial(n)))
}
