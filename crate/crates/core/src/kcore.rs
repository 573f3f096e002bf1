//! The k-arithmetic: integers with the usual sum and order, and the product
//! `m ⊙ₖ n` defined as the sum of `n` terms of an arithmetic progression with
//! difference `k` that starts at `m − n + 1`.
//!
//! With `k = 2` this is the ordinary product. A positive `d` divides `a` in
//! the k-arithmetic when `a` is the sum of `d` consecutive terms of an integer
//! progression with difference `k`; which `d` qualify depends only on the
//! parity of `k`.
//!
//! All arithmetic is checked `i64`. Overflow is reported, never wrapped.

use std::fmt;

use crate::error::{Error, Result};

/// Parity class of the common difference `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => f.write_str("even"),
            Parity::Odd => f.write_str("odd"),
        }
    }
}

/// `m ⊙ₖ n = (m − n + 1)·n + n·(n − 1)·k / 2`.
///
/// `n` may be any integer; `n·(n − 1)` is always even so the halving is exact.
pub fn k_product(m: i64, n: i64, k: i64) -> Result<i64> {
    const WHAT: &str = "k-arithmetic product";
    let ovf = || Error::Overflow(WHAT);
    let first = m
        .checked_sub(n)
        .and_then(|x| x.checked_add(1))
        .ok_or_else(ovf)?;
    let head = first.checked_mul(n).ok_or_else(ovf)?;
    let pairs = n
        .checked_mul(n.checked_sub(1).ok_or_else(ovf)?)
        .ok_or_else(ovf)?
        / 2;
    let tail = pairs.checked_mul(k).ok_or_else(ovf)?;
    head.checked_add(tail).ok_or_else(ovf)
}

/// The k-arithmetic quotient `a ⊘ₖ b`: the unique `c` with `c ⊙ₖ b = a`, when
/// it is an integer.
///
/// `c = a/b + (b − 1)(1 − k/2) = t / 2b` with `t = 2a + b(b − 1)(2 − k)`, so the
/// quotient exists exactly when `2b | t`.
pub fn k_quotient(a: i64, b: i64, k: i64) -> Result<Option<i64>> {
    const WHAT: &str = "k-arithmetic quotient";
    if b == 0 {
        return Err(Error::ZeroDivisor);
    }
    let ovf = || Error::Overflow(WHAT);
    let two_a = a.checked_mul(2).ok_or_else(ovf)?;
    let slope = 2i64.checked_sub(k).ok_or_else(ovf)?;
    let shift = b
        .checked_mul(b.checked_sub(1).ok_or_else(ovf)?)
        .and_then(|x| x.checked_mul(slope))
        .ok_or_else(ovf)?;
    let t = two_a.checked_add(shift).ok_or_else(ovf)?;
    let two_b = b.checked_mul(2).ok_or_else(ovf)?;
    if t % two_b == 0 {
        Ok(Some(t / two_b))
    } else {
        Ok(None)
    }
}

/// `d | a (arith k)`: whether `a` is a sum of `d` terms of an integer
/// progression with difference `k`.
pub fn k_divides(d: i64, a: i64, k: i64) -> Result<bool> {
    if d < 1 {
        return Err(Error::InvalidArgument(format!(
            "a k-arithmetic divisor must be positive, got {d}"
        )));
    }
    Ok(k_quotient(a, d, k)?.is_some())
}

/// The positive divisors of `n` in every k-arithmetic of a given parity.
///
/// Even `k`: the usual divisors of `n`. Odd `k`: the usual divisors of `2n`
/// except the even usual divisors of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorSet {
    n: u64,
    parity: Parity,
    divisors: Vec<u64>,
}

impl DivisorSet {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.divisors
    }

    pub fn len(&self) -> usize {
        self.divisors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.divisors.is_empty()
    }

    pub fn contains(&self, d: u64) -> bool {
        self.divisors.binary_search(&d).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.divisors.iter().copied()
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.divisors
    }
}

impl<'a> IntoIterator for &'a DivisorSet {
    type Item = &'a u64;
    type IntoIter = std::slice::Iter<'a, u64>;

    fn into_iter(self) -> Self::IntoIter {
        self.divisors.iter()
    }
}

/// Usual divisors of `n`, ascending, by trial division up to `√n`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = 1u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            low.push(d);
            if d != n / d {
                high.push(n / d);
            }
        }
        d += 1;
    }
    low.extend(high.into_iter().rev());
    low
}

pub fn divisor_set(n: u64, parity: Parity) -> Result<DivisorSet> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "divisor sets are defined for n >= 1".into(),
        ));
    }
    let divisors = match parity {
        Parity::Even => divisors(n),
        Parity::Odd => {
            let twice = n.checked_mul(2).ok_or(Error::Overflow("2n"))?;
            divisors(twice)
                .into_iter()
                .filter(|&d| d % 2 == 1 || !n.is_multiple_of(d))
                .collect()
        }
    };
    Ok(DivisorSet {
        n,
        parity,
        divisors,
    })
}
