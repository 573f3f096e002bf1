//! Explicit construction of `AP(n)`.
//!
//! Each partition is built the same way a single one is found by hand: pick a
//! length `d` from the divisor set for the parity of `k`, take the k-arithmetic
//! quotient `n ⊘ₖ d`, and read off the first term `n ⊘ₖ d − d + 1`.
//!
//! Output order is fixed: the constant partitions first (by length), then all
//! positive even differences, then all odd differences; within each block by
//! difference, then by length.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;

use crate::count::square;
use crate::error::{Error, Result};
use crate::kcore::{self, Parity};

/// Largest `n` accepted for full enumeration by default.
pub const ENUMERATE_MAX_N: u64 = 10_000_000;

/// One partition of `n` into `length` parts `first, first + diff, …`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ApPartition {
    n: u64,
    first: u64,
    diff: u64,
    length: u64,
}

impl ApPartition {
    pub fn new(n: u64, first: u64, diff: u64, length: u64) -> Result<Self> {
        let invalid = |why: &str| {
            Err(Error::InvalidArgument(format!(
                "({first}, {diff}, {length}) is not a partition of {n}: {why}"
            )))
        };
        if first == 0 || length == 0 {
            return invalid("first term and length must be positive");
        }
        if length == 1 && diff != 0 {
            return invalid("a single part has difference 0");
        }
        let sum = u128::from(length) * u128::from(first)
            + u128::from(length) * u128::from(length - 1) / 2 * u128::from(diff);
        if sum != u128::from(n) {
            return invalid("parts do not sum to n");
        }
        Ok(ApPartition {
            n,
            first,
            diff,
            length,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn first(&self) -> u64 {
        self.first
    }

    pub fn diff(&self) -> u64 {
        self.diff
    }

    pub fn length(&self) -> u64 {
        self.length
    }

    pub fn last(&self) -> u64 {
        self.first + (self.length - 1) * self.diff
    }

    /// The parts, lazily.
    pub fn parts(&self) -> impl Iterator<Item = u64> {
        let (first, diff) = (self.first, self.diff);
        (0..self.length).map(move |i| first + i * diff)
    }

    /// Position in the canonical output order.
    pub fn order_key(&self) -> (u8, u64, u64) {
        let block = match self.diff {
            0 => 0,
            k if k % 2 == 0 => 1,
            _ => 2,
        };
        (block, self.diff, self.length)
    }
}

impl PartialOrd for ApPartition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ApPartition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, self.order_key()).cmp(&(other.n, other.order_key()))
    }
}

/// `a₁ + a₂ + … = n`
impl fmt::Display for ApPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, part) in self.parts().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, " = {}", self.n)
    }
}

/// Materialize the parts of `p`.
pub fn expand(p: &ApPartition) -> Result<Vec<u64>> {
    Error::check_bound("expansion length", p.length, ENUMERATE_MAX_N)?;
    Ok(p.parts().collect())
}

/// The partition of `n` into `d` parts with difference `k`, if its first term
/// is positive.
///
/// Length 1 only yields the single-part partition, and only under `k = 0`.
pub fn partition_for(n: u64, d: u64, k: u64) -> Result<Option<ApPartition>> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidArgument("n and d must be positive".into()));
    }
    if d == 1 {
        return Ok((k == 0).then_some(ApPartition {
            n,
            first: n,
            diff: 0,
            length: 1,
        }));
    }
    let to_i64 = |x: u64| i64::try_from(x).map_err(|_| Error::Overflow("partition_for"));
    let (ni, di, ki) = (to_i64(n)?, to_i64(d)?, to_i64(k)?);
    let Some(anchor) = kcore::k_quotient(ni, di, ki)? else {
        return Ok(None);
    };
    let first = anchor - di + 1;
    if first < 1 {
        return Ok(None);
    }
    Ok(Some(ApPartition {
        n,
        first: first as u64,
        diff: k,
        length: d,
    }))
}

/// Stream `AP(n)` in canonical order without materializing it.
///
/// The visitor may stop early by returning `ControlFlow::Break`.
pub fn visit_ap<F>(n: u64, visit: F) -> Result<()>
where
    F: FnMut(ApPartition) -> ControlFlow<()>,
{
    visit_ap_bounded(n, ENUMERATE_MAX_N, visit)
}

/// [`visit_ap`] with an explicit bound on `n`.
pub fn visit_ap_bounded<F>(n: u64, max_n: u64, mut visit: F) -> Result<()>
where
    F: FnMut(ApPartition) -> ControlFlow<()>,
{
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    Error::check_bound("enumeration", n, max_n.min(crate::count::COUNT_MAX_N))?;

    let even = kcore::divisor_set(n, Parity::Even)?;
    for d in even.iter() {
        let p = ApPartition {
            n,
            first: n / d,
            diff: 0,
            length: d,
        };
        if visit(p).is_break() {
            return Ok(());
        }
    }

    let twice = u128::from(n) * 2;
    let even_lengths: Vec<u64> = even
        .iter()
        .filter(|&d| d > 1 && square(d) <= u128::from(n))
        .collect();
    let odd_lengths: Vec<u64> = kcore::divisor_set(n, Parity::Odd)?
        .iter()
        .filter(|&d| d > 1 && square(d) < twice)
        .collect();

    for (lengths, start) in [(&even_lengths, 2u64), (&odd_lengths, 1u64)] {
        // k_d decreases with d, so the admissible lengths for a given k form
        // a prefix of the ascending list.
        let mut k = start;
        loop {
            let admissible = |d: u64| u128::from(k) * u128::from(d) * u128::from(d - 1) < twice;
            let mut any = false;
            for &d in lengths.iter().take_while(|&&d| admissible(d)) {
                any = true;
                let p = partition_for(n, d, k)?
                    .expect("every d in the divisor set with k < k_d has a positive first term");
                if visit(p).is_break() {
                    return Ok(());
                }
            }
            if !any {
                break;
            }
            k += 2;
        }
    }
    Ok(())
}

/// Every member of `AP(n)`, once each, in canonical order.
pub fn enumerate_ap(n: u64) -> Result<Vec<ApPartition>> {
    let mut out = Vec::new();
    visit_ap(n, |p| {
        out.push(p);
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// `APdiv(n)`: all usual divisors of `n`, plus the even odd-case lengths
/// `d ∈ D_O(n)` with `d² < 2n`.
pub fn ap_lengths(n: u64) -> Result<BTreeSet<u64>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    Error::check_bound("counting", n, crate::count::COUNT_MAX_N)?;
    let twice = 2 * n;
    let mut lengths: BTreeSet<u64> = kcore::divisor_set(n, Parity::Even)?.iter().collect();
    lengths.extend(
        kcore::divisor_set(n, Parity::Odd)?
            .iter()
            .filter(|&d| d % 2 == 0 && d > 1 && square(d) < u128::from(twice)),
    );
    Ok(lengths)
}
