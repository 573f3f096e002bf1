//! Brute-force reference for `AP(n)`.
//!
//! Walks every (length, first term) pair and solves for the difference. It
//! does not touch the divisor machinery in `kcore`, `count` or `enumerate`.

use crate::error::{Error, Result};

pub const ORACLE_MAX_N: u64 = 5000;

/// All nondecreasing arithmetic progressions of positive integers summing to
/// `n`, as explicit part lists, in the canonical order.
pub fn brute_enumerate(n: u64) -> Result<Vec<Vec<u64>>> {
    check(n)?;
    let mut found = vec![vec![n]];
    for len in 2..=n {
        let pairs = len * (len - 1);
        let mut first = 1;
        while len * first <= n {
            let slack = 2 * (n - len * first);
            if slack.is_multiple_of(pairs) {
                let diff = slack / pairs;
                found.push((0..len).map(|i| first + i * diff).collect());
            }
            first += 1;
        }
    }
    found.sort_by_key(|parts| order_key(parts));
    Ok(found)
}

pub fn brute_count(n: u64) -> Result<u64> {
    Ok(brute_enumerate(n)?.len() as u64)
}

// (zero / even / odd block, difference, length)
fn order_key(parts: &[u64]) -> (u8, u64, usize) {
    let diff = if parts.len() > 1 {
        parts[1] - parts[0]
    } else {
        0
    };
    let block = if diff == 0 {
        0
    } else if diff % 2 == 0 {
        1
    } else {
        2
    };
    (block, diff, parts.len())
}

fn check(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    Error::check_bound("oracle", n, ORACLE_MAX_N)
}
