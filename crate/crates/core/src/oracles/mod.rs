//! Brute-force combinatorial models that the algebraic side is checked against.

pub mod alternating;
pub mod chromatic;
pub mod tableaux;

pub use alternating::{
    alternating_count, cyclically_alternating_count, for_each_alternating, is_alternating, piecewise_alt_count,
    record_partition, record_partition_hat, rp_histogram,
};
pub use chromatic::{chromatic_sym, claw_graph, claw_matching, matchings, uio_sum, Graph, IntervalOrder, Matching};
pub use tableaux::{rho_shape, syt_count_brute, syt_count_det, SkewShape};

use alloc::format;

use crate::{Error, Result};

pub(crate) fn budget(what: &str, value: usize, max: usize) -> Result<()> {
    if value > max {
        Err(Error::Budget(format!("{what} = {value} exceeds the limit {max}")))
    } else {
        Ok(())
    }
}
