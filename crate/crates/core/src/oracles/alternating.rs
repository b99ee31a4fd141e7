//! Alternating permutations (`w_1 > w_2 < w_3 > ...`) and their record partitions.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::budget;
use crate::partition::Partition;
use crate::{Error, Result};

const MAX_LETTERS: usize = 12;

/// Visits every permutation of `1..=len` accepted by `ok`, which sees the
/// prefix built so far and the candidate next letter.
fn backtrack(len: usize, ok: &impl Fn(&[usize], usize) -> bool, visit: &mut impl FnMut(&[usize])) {
    fn go(
        len: usize,
        used: &mut [bool],
        w: &mut Vec<usize>,
        ok: &impl Fn(&[usize], usize) -> bool,
        visit: &mut impl FnMut(&[usize]),
    ) {
        if w.len() == len {
            visit(w);
            return;
        }
        for v in 1..=len {
            if used[v] || !ok(w, v) {
                continue;
            }
            used[v] = true;
            w.push(v);
            go(len, used, w, ok, visit);
            w.pop();
            used[v] = false;
        }
    }
    go(len, &mut alloc::vec![false; len + 1], &mut Vec::with_capacity(len), ok, visit);
}

/// Whether `next` may follow `prefix` in a down-up word starting at `start`.
fn down_up_step(prefix: &[usize], start: usize, next: usize) -> bool {
    let j = prefix.len() - start;
    match j {
        0 => true,
        _ if j % 2 == 1 => next < prefix[prefix.len() - 1],
        _ => next > prefix[prefix.len() - 1],
    }
}

pub fn is_alternating(w: &[usize]) -> bool {
    (1..w.len()).all(|i| down_up_step(&w[..i], 0, w[i]))
}

/// Calls `f` on each alternating permutation of `1..=k`, in lexicographic order.
pub fn for_each_alternating(k: usize, mut f: impl FnMut(&[usize])) -> Result<()> {
    budget("length", k, MAX_LETTERS)?;
    backtrack(k, &|w: &[usize], v| down_up_step(w, 0, v), &mut f);
    Ok(())
}

/// Number of alternating permutations of `1..=k`, i.e. `E_k`.
pub fn alternating_count(k: usize) -> Result<u64> {
    let mut count = 0;
    for_each_alternating(k, |_| count += 1)?;
    Ok(count)
}

/// Record partition of the sequence `ŵ`: with records (left-to-right maxima)
/// at positions `r_1 = 1 < r_2 < ... < r_j`, the parts are
/// `r_2 - r_1, ..., n + 1 - r_j` sorted.
pub fn record_partition_hat(w_hat: &[usize]) -> Partition {
    let mut records = Vec::new();
    let mut best = None;
    for (i, &v) in w_hat.iter().enumerate() {
        if best.is_none_or(|b| v > b) {
            best = Some(v);
            records.push(i + 1);
        }
    }
    records.push(w_hat.len() + 1);
    Partition::from_unsorted(records.windows(2).map(|r| r[1] - r[0]).collect())
}

/// Record partition of an alternating permutation of even length, read off
/// its odd-position letters.
pub fn record_partition(w: &[usize]) -> Result<Partition> {
    if !w.len().is_multiple_of(2) || !is_alternating(w) {
        return Err(Error::NotAlternating);
    }
    let w_hat: Vec<usize> = w.iter().step_by(2).copied().collect();
    Ok(record_partition_hat(&w_hat))
}

/// How many alternating permutations of `1..=2n` have each record partition.
pub fn rp_histogram(n: usize) -> Result<BTreeMap<Partition, u64>> {
    budget("2n", 2 * n, MAX_LETTERS)?;
    let mut hist = BTreeMap::new();
    for_each_alternating(2 * n, |w| {
        let w_hat: Vec<usize> = w.iter().step_by(2).copied().collect();
        *hist.entry(record_partition_hat(&w_hat)).or_insert(0) += 1;
    })?;
    Ok(hist)
}

/// Permutations of `1..=2n` whose consecutive blocks of lengths
/// `2λ_1, 2λ_2, ...` are each alternating.
pub fn piecewise_alt_count(lambda: &Partition) -> Result<u64> {
    let len = 2 * lambda.size();
    budget("2|λ|", len, MAX_LETTERS)?;
    let mut block_start = Vec::with_capacity(len);
    for (b, &part) in lambda.parts().iter().enumerate() {
        let start = 2 * lambda.parts()[..b].iter().sum::<usize>();
        block_start.extend(core::iter::repeat_n(start, 2 * part));
    }
    let mut count = 0;
    backtrack(len, &|w: &[usize], v| down_up_step(w, block_start[w.len()], v), &mut |_| count += 1);
    Ok(count)
}

/// Alternating permutations of `1..=2n` with `w_{2n} < w_1`.
pub fn cyclically_alternating_count(n: usize) -> Result<u64> {
    budget("2n", 2 * n, MAX_LETTERS)?;
    let mut count = 0;
    for_each_alternating(2 * n, |w| {
        if w.last() < w.first() {
            count += 1;
        }
    })?;
    Ok(count)
}
