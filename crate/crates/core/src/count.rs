//! Closed-form counts of `AP(n)` and of the set of partition lengths.
//!
//! Every partition with a positive difference `k` has a length `d > 1` drawn
//! from the divisor set of the matching parity, and is admissible exactly when
//! `k < k_d = 2n / (d(d − 1))`. Counting admissible `k` of each parity below
//! `k_d` gives the total without building any partition.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::kcore::{self, Parity};

/// Largest `n` accepted by the per-`n` counting routines.
pub const COUNT_MAX_N: u64 = 1_000_000_000_000;

/// Exact nonnegative rational `num / den`. Not kept in lowest terms.
#[derive(Debug, Clone, Copy)]
pub struct Rational {
    num: u64,
    den: u64,
}

impl Rational {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidArgument(
                "rational with zero denominator".into(),
            ));
        }
        Ok(Rational { num, den })
    }

    pub fn integer(value: u64) -> Self {
        Rational { num: value, den: 1 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn ceil(&self) -> u64 {
        self.num / self.den + u64::from(!self.num.is_multiple_of(self.den))
    }

    pub fn floor(&self) -> u64 {
        self.num / self.den
    }

    pub fn is_integer(&self) -> bool {
        self.num.is_multiple_of(self.den)
    }

    /// Lossy, for display only.
    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Rational {}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (u128::from(self.num) * u128::from(other.den))
            .cmp(&(u128::from(other.num) * u128::from(self.den)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Numbers of all, odd and even usual divisors of `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TauTriple {
    pub tau: u64,
    pub tau_odd: u64,
    pub tau_even: u64,
}

pub fn tau_triple(n: u64) -> Result<TauTriple> {
    if n == 0 {
        return Err(Error::InvalidArgument("tau is defined for n >= 1".into()));
    }
    let twos = u64::from(n.trailing_zeros());
    let tau_odd = divisor_count(n >> twos);
    Ok(TauTriple {
        tau: (twos + 1) * tau_odd,
        tau_odd,
        tau_even: twos * tau_odd,
    })
}

// Number of divisors from the exponents of a trial-division factorization.
fn divisor_count(mut m: u64) -> u64 {
    let mut count = 1;
    let mut p = 2u64;
    while p <= m / p {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            count *= e + 1;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        count *= 2;
    }
    count
}

/// `k_d = 2n / (d(d − 1))`.
pub fn critical_value(n: u64, d: u64) -> Result<Rational> {
    if n == 0 || d < 2 {
        return Err(Error::InvalidArgument(format!(
            "critical value needs n >= 1 and d >= 2, got n = {n}, d = {d}"
        )));
    }
    let num = n.checked_mul(2).ok_or(Error::Overflow("critical value"))?;
    let den = d
        .checked_mul(d - 1)
        .ok_or(Error::Overflow("critical value"))?;
    Rational::new(num, den)
}

/// Number of positive even integers strictly below `x`: `⌊(⌈x⌉ − 1) / 2⌋`.
pub fn count_even_below(x: Rational) -> u64 {
    x.ceil().saturating_sub(1) / 2
}

/// Number of positive odd integers strictly below `x`: `⌊⌈x⌉ / 2⌋`.
pub fn count_odd_below(x: Rational) -> u64 {
    x.ceil() / 2
}

/// `|AP(n)|` split into its three summands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountBreakdown {
    pub n: u64,
    /// Constant partitions, one per usual divisor.
    pub trivial: u64,
    pub even_sum: u64,
    pub odd_sum: u64,
    pub total: u64,
}

pub fn ap_count(n: u64) -> Result<CountBreakdown> {
    check_n(n)?;
    let twice = 2 * n;

    let even_divisors = kcore::divisor_set(n, Parity::Even)?;
    let trivial = even_divisors.len() as u64;
    let mut even_sum = 0;
    for d in even_divisors
        .iter()
        .filter(|&d| d > 1 && square(d) <= u128::from(n))
    {
        even_sum += count_even_below(critical_value(n, d)?);
    }

    let mut odd_sum = 0;
    for d in kcore::divisor_set(n, Parity::Odd)?
        .iter()
        .filter(|&d| d > 1 && square(d) < u128::from(twice))
    {
        odd_sum += count_odd_below(critical_value(n, d)?);
    }

    Ok(CountBreakdown {
        n,
        trivial,
        even_sum,
        odd_sum,
        total: trivial + even_sum + odd_sum,
    })
}

/// `|D_k(n)|`: `τ(n)` for even `k`, `2·τ_O(n)` for odd `k`.
pub fn dk_cardinality(n: u64, k: i64) -> Result<u64> {
    let t = tau_triple(n)?;
    Ok(match Parity::of(k) {
        Parity::Even => t.tau,
        Parity::Odd => 2 * t.tau_odd,
    })
}

/// `|APdiv(n)|`, the number of distinct lengths among the partitions in `AP(n)`.
pub fn apdiv_count(n: u64) -> Result<u64> {
    check_n(n)?;
    let twice = 2 * n;
    let extra = kcore::divisor_set(n, Parity::Odd)?
        .iter()
        .filter(|&d| d % 2 == 0 && d > 1 && square(d) < u128::from(twice))
        .count() as u64;
    Ok(tau_triple(n)?.tau + extra)
}

pub(crate) fn square(d: u64) -> u128 {
    u128::from(d) * u128::from(d)
}

fn check_n(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    Error::check_bound("counting", n, COUNT_MAX_N)
}
