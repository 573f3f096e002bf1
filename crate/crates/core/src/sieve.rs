//! Range tables of `|AP(n)|` and `|APdiv(n)|` for `n = 1..=N`.
//!
//! Rather than factoring each `n`, every candidate length `d` pushes its
//! contribution to the `n` it can split: multiples of `d` for the even case and
//! for odd `d` in the odd case, and `n ≡ d/2 (mod d)` for even `d` in the odd
//! case (that residue class is exactly `d | 2n, d ∤ n`). Total work is
//! `O(N log N)`.

use std::fmt;

use crate::count::{count_even_below, count_odd_below, Rational};
use crate::error::{Error, Result};

/// Default upper limit for a range table.
pub const SIEVE_MAX_N: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    /// `|AP(n)|`
    ApCount,
    /// `|APdiv(n)|`
    ApDivCount,
}

impl SequenceKind {
    pub fn oeis_id(&self) -> &'static str {
        match self {
            SequenceKind::ApCount => "A049988",
            SequenceKind::ApDivCount => "A175239",
        }
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceKind::ApCount => f.write_str("ap"),
            SequenceKind::ApDivCount => f.write_str("apdiv"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable {
    kind: SequenceKind,
    // values[0] is unused
    values: Vec<u64>,
}

impl SequenceTable {
    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn upper(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    /// Value at `n`, for `1 <= n <= upper`.
    pub fn get(&self, n: u64) -> Option<u64> {
        if n == 0 {
            return None;
        }
        self.values.get(n as usize).copied()
    }

    /// `(n, value)` pairs in increasing `n`.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.values
            .iter()
            .copied()
            .enumerate()
            .skip(1)
            .map(|(n, v)| (n as u64, v))
    }

    pub fn values(&self) -> &[u64] {
        &self.values[1..]
    }
}

pub fn table(kind: SequenceKind, upper: u64) -> Result<SequenceTable> {
    match kind {
        SequenceKind::ApCount => ap_count_range(upper),
        SequenceKind::ApDivCount => apdiv_count_range(upper),
    }
}

pub fn ap_count_range(upper: u64) -> Result<SequenceTable> {
    ap_count_range_bounded(upper, SIEVE_MAX_N)
}

pub fn ap_count_range_bounded(upper: u64, max_n: u64) -> Result<SequenceTable> {
    let mut values = tau_table(upper, max_n)?;
    let n_max = upper as usize;

    // positive even differences, d | n with d^2 <= n
    let mut d = 2usize;
    while d * d <= n_max {
        let pairs = (d * (d - 1)) as u64;
        for n in (d * d..=n_max).step_by(d) {
            values[n] += count_even_below(Rational::new(2 * n as u64, pairs)?);
        }
        d += 1;
    }

    // odd differences, d in D_O(n) with d^2 < 2n
    let mut d = 2usize;
    while d * d < 2 * n_max {
        let pairs = (d * (d - 1)) as u64;
        let start = if d % 2 == 1 { d } else { d / 2 };
        for n in (start..=n_max).step_by(d).filter(|&n| 2 * n > d * d) {
            values[n] += count_odd_below(Rational::new(2 * n as u64, pairs)?);
        }
        d += 1;
    }

    Ok(SequenceTable {
        kind: SequenceKind::ApCount,
        values,
    })
}

pub fn apdiv_count_range(upper: u64) -> Result<SequenceTable> {
    apdiv_count_range_bounded(upper, SIEVE_MAX_N)
}

pub fn apdiv_count_range_bounded(upper: u64, max_n: u64) -> Result<SequenceTable> {
    let mut values = tau_table(upper, max_n)?;
    let n_max = upper as usize;

    // even lengths d in D_O(n) \ D_E(n): n ≡ d/2 (mod d), d^2 < 2n
    let mut d = 2usize;
    while d * d < 2 * n_max {
        for n in (d / 2..=n_max).step_by(d).filter(|&n| 2 * n > d * d) {
            values[n] += 1;
        }
        d += 2;
    }

    Ok(SequenceTable {
        kind: SequenceKind::ApDivCount,
        values,
    })
}

// tau(n) for n in 0..=upper, with tau(0) = 0
fn tau_table(upper: u64, max_n: u64) -> Result<Vec<u64>> {
    if upper == 0 {
        return Err(Error::InvalidArgument(
            "range upper bound must be positive".into(),
        ));
    }
    Error::check_bound("range table", upper, max_n)?;
    let n_max = usize::try_from(upper).map_err(|_| Error::Overflow("range table size"))?;
    let mut tau = vec![0u64; n_max + 1];
    for d in 1..=n_max {
        for n in (d..=n_max).step_by(d) {
            tau[n] += 1;
        }
    }
    Ok(tau)
}
