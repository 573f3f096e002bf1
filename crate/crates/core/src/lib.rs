//! Partitions of a positive integer into arithmetic progressions.
//!
//! A partition of `n` whose nondecreasing parts form an arithmetic progression
//! with difference `k` and `d` parts corresponds to a divisor `d` of `n` in the
//! *k-arithmetic*, where the product `m ⊙ₖ d` is the sum of `d` progression
//! terms. Divisors there are the usual divisors of `n` for even `k`, and the
//! divisors of `2n` other than the even divisors of `n` for odd `k`. From this:
//!
//! - [`kcore`]: the k-arithmetic product, quotient, divisibility and divisor sets.
//! - [`count`]: the closed-form `|AP(n)|` and `|APdiv(n)|`.
//! - [`enumerate`]: every partition in `AP(n)`, streamed in a fixed order.
//! - [`oracle`]: an independent brute-force reference.
//! - [`sieve`]: both sequences for a whole range `1..=N`.
//! - [`cli`]: the `apx` command line and the OEIS b-file reader.
//!
//! ```
//! use ap_partition::{count, enumerate};
//!
//! assert_eq!(count::ap_count(100)?.total, 78);
//! let last = enumerate::enumerate_ap(6)?.pop().unwrap();
//! assert_eq!(last.to_string(), "1 + 2 + 3 = 6");
//! # Ok::<(), ap_partition::Error>(())
//! ```
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod cli;
pub mod count;
pub mod enumerate;
mod error;
pub mod kcore;
pub mod oracle;
pub mod sieve;

pub use count::{ap_count, apdiv_count, CountBreakdown, Rational, TauTriple};
pub use enumerate::{ap_lengths, enumerate_ap, partition_for, ApPartition};
pub use error::{Error, Result};
pub use kcore::{divisor_set, k_divides, k_product, k_quotient, DivisorSet, Parity};
pub use sieve::{SequenceKind, SequenceTable};
