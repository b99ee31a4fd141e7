//! Exact arithmetic for sprout sequences of symmetric functions.
//!
//! A seed power series `F(t) = 1 + a_1 t + a_2 t^2 + ...` determines homogeneous
//! symmetric functions `R_n` through `sum_n R_n t^n = prod_i F(x_i t)`. This crate
//! builds those functions, expands them in the monomial, power-sum, elementary,
//! complete homogeneous and Schur bases, tests positivity through Toeplitz minors,
//! and ships brute-force combinatorial counters (alternating permutations, skew
//! tableaux, chromatic symmetric functions) that cross-check the algebra.
//!
//! Everything is exact: the scalar type is [`Rational`], an arbitrary precision
//! fraction. The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod arith;
mod error;
pub mod linalg;
pub mod oracles;
pub mod partition;
pub mod positivity;
pub mod seeds;
pub mod series;
pub mod sprout;
pub mod symfunc;

pub use arith::{binomial, factorial, rational, Rational};
pub use error::{Error, Result};
pub use num_bigint::{BigInt, BigUint};
pub use partition::{enumerate_partitions, multinomial, Partition};
pub use seeds::{SeedSpec, CATALOG};
pub use series::{Poly, PolySeries, Series};
pub use sprout::Seed;
pub use symfunc::{Basis, SymFunc};
