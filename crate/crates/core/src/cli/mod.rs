//! The `apx` command line.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or range error,
//! 3 I/O or network error. Output is deterministic for fixed arguments.

mod bfile;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::ops::ControlFlow;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub use bfile::{BFile, ParseError};

use crate::count::{self, COUNT_MAX_N};
use crate::enumerate::{self, ApPartition, ENUMERATE_MAX_N};
use crate::error::Error;
use crate::kcore::{self, Parity};
use crate::oracle::{self, ORACLE_MAX_N};
use crate::sieve::{self, SequenceKind, SIEVE_MAX_N};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Environment variable that overrides the default size bounds.
pub const MAX_N_VAR: &str = "APX_MAX_N";

#[derive(Debug, Parser)]
#[command(
    name = "apx",
    version,
    about = "Count and list partitions of n into arithmetic progressions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print |AP(n)|.
    Count {
        n: u64,
        /// Also print the constant, even-difference and odd-difference terms.
        #[arg(long)]
        breakdown: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Stream every partition of n into an arithmetic progression.
    List {
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the distinct lengths APdiv(n) and their number.
    Lengths {
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Write `n,value` CSV for n = 1..=N.
    Seq {
        #[arg(value_enum)]
        kind: KindArg,
        upper: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write `n,|AP(n)|` CSV for n = 1..=N, for scatter plotting.
    Comet {
        upper: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the closed-form count and the enumerator against brute force.
    VerifyOracle { upper: u64 },
    /// Compare computed terms with an OEIS b-file.
    VerifyOeis {
        #[arg(value_enum)]
        kind: KindArg,
        /// Local b-file. Required unless --fetch is given.
        path: Option<PathBuf>,
        /// Download the b-file from oeis.org.
        #[arg(long, conflicts_with_all = ["offline", "path"])]
        fetch: bool,
        /// Never touch the network (the default).
        #[arg(long)]
        offline: bool,
        /// Compare at most this many leading terms.
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Evaluate k-arithmetic operations directly.
    Kcalc {
        #[command(subcommand)]
        op: KcalcOp,
    },
}

#[derive(Debug, Subcommand)]
enum KcalcOp {
    /// m ⊙ₖ n
    Product {
        #[arg(allow_negative_numbers = true)]
        m: i64,
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
    /// a ⊘ₖ b
    Quotient {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
    /// Divisors of n in the k-arithmetic.
    Divisors {
        n: u64,
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Ap,
    Apdiv,
}

impl From<KindArg> for SequenceKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Ap => SequenceKind::ApCount,
            KindArg::Apdiv => SequenceKind::ApDivCount,
        }
    }
}

/// Size bounds applied before dispatch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub count: u64,
    pub enumerate: u64,
    pub sieve: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            count: COUNT_MAX_N,
            enumerate: ENUMERATE_MAX_N,
            sieve: SIEVE_MAX_N,
        }
    }
}

impl Limits {
    /// Every bound set to `max_n`, which must lie in `1..=COUNT_MAX_N`.
    pub fn uniform(max_n: u64) -> Result<Self, String> {
        if !(1..=COUNT_MAX_N).contains(&max_n) {
            return Err(format!(
                "{MAX_N_VAR} must be in 1..={COUNT_MAX_N}, got {max_n}"
            ));
        }
        Ok(Limits {
            count: max_n,
            enumerate: max_n,
            sieve: max_n,
        })
    }

    pub fn from_env_value(value: Option<&str>) -> Result<Self, String> {
        match value {
            None => Ok(Limits::default()),
            Some(v) => {
                let n = v
                    .trim()
                    .parse()
                    .map_err(|_| format!("{MAX_N_VAR} is not a positive integer: {v:?}"))?;
                Limits::uniform(n)
            }
        }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(io::Error),
    Network(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Run `apx` with the bounds taken from `APX_MAX_N`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env = std::env::var(MAX_N_VAR).ok();
    match Limits::from_env_value(env.as_deref()) {
        Ok(limits) => run_with_limits(args, limits, out, err),
        Err(msg) => {
            let _ = writeln!(err, "apx: {msg}");
            EXIT_USAGE
        }
    }
}

pub fn run_with_limits<I, T>(
    args: I,
    limits: Limits,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let outcome = dispatch(cli.command, limits, out, err).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "apx: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "apx: I/O error: {e}");
            EXIT_IO
        }
        Err(Failure::Network(msg)) => {
            let _ = writeln!(err, "apx: network error: {msg}");
            EXIT_IO
        }
    }
}

fn dispatch(command: Command, limits: Limits, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::Count {
            n,
            breakdown,
            format,
        } => cmd_count(n, breakdown, format, limits, out),
        Command::List { n, format } => cmd_list(n, format, limits, out),
        Command::Lengths { n, format } => cmd_lengths(n, format, limits, out),
        Command::Seq {
            kind,
            upper,
            out: path,
        } => cmd_seq(kind.into(), upper, path.as_deref(), limits, out),
        Command::Comet { upper, out: path } => {
            cmd_seq(SequenceKind::ApCount, upper, path.as_deref(), limits, out)
        }
        Command::VerifyOracle { upper } => cmd_verify_oracle(upper, out),
        Command::VerifyOeis {
            kind,
            path,
            fetch,
            offline: _,
            limit,
        } => cmd_verify_oeis(kind.into(), path.as_deref(), fetch, limit, limits, out, err),
        Command::Kcalc { op } => cmd_kcalc(op, out),
    }
}

fn check_n(n: u64, bound: u64, what: &str) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::Usage("n must be a positive integer".into()));
    }
    if n > bound {
        return Err(Failure::Usage(format!(
            "n = {n} exceeds the {what} bound of {bound} (set {MAX_N_VAR} to change it)"
        )));
    }
    Ok(())
}

fn cmd_count(
    n: u64,
    breakdown: bool,
    format: Format,
    limits: Limits,
    out: &mut dyn Write,
) -> Outcome {
    check_n(n, limits.count, "counting")?;
    let b = count::ap_count(n)?;
    match format {
        Format::Text if breakdown => {
            writeln!(out, "trivial {}", b.trivial)?;
            writeln!(out, "even {}", b.even_sum)?;
            writeln!(out, "odd {}", b.odd_sum)?;
            writeln!(out, "total {}", b.total)?;
        }
        Format::Text => writeln!(out, "{}", b.total)?,
        Format::Json if breakdown => {
            #[derive(Serialize)]
            struct Row {
                n: u64,
                trivial: u64,
                even: u64,
                odd: u64,
                total: u64,
            }
            let row = Row {
                n,
                trivial: b.trivial,
                even: b.even_sum,
                odd: b.odd_sum,
                total: b.total,
            };
            writeln!(out, "{}", json(&row))?;
        }
        Format::Json => writeln!(out, "{}", serde_json::json!({ "n": n, "total": b.total }))?,
        Format::Csv if breakdown => {
            writeln!(out, "n,trivial,even,odd,total")?;
            writeln!(
                out,
                "{n},{},{},{},{}",
                b.trivial, b.even_sum, b.odd_sum, b.total
            )?;
        }
        Format::Csv => {
            writeln!(out, "n,value")?;
            writeln!(out, "{n},{}", b.total)?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct PartitionRecord {
    n: u64,
    first: u64,
    diff: u64,
    length: u64,
    parts: Vec<u64>,
}

impl From<&ApPartition> for PartitionRecord {
    fn from(p: &ApPartition) -> Self {
        PartitionRecord {
            n: p.n(),
            first: p.first(),
            diff: p.diff(),
            length: p.length(),
            parts: p.parts().collect(),
        }
    }
}

fn cmd_list(n: u64, format: Format, limits: Limits, out: &mut dyn Write) -> Outcome {
    check_n(n, limits.enumerate, "enumeration")?;
    let mut out = BufWriter::new(out);
    if format == Format::Csv {
        writeln!(out, "n,first,diff,length,parts")?;
    }
    let mut io_error = None;
    enumerate::visit_ap_bounded(n, limits.enumerate, |p| {
        let written = match format {
            Format::Text => writeln!(out, "{p}"),
            Format::Json => writeln!(out, "{}", json(&PartitionRecord::from(&p))),
            Format::Csv => {
                let parts: Vec<String> = p.parts().map(|x| x.to_string()).collect();
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    p.n(),
                    p.first(),
                    p.diff(),
                    p.length(),
                    parts.join(" ")
                )
            }
        };
        match written {
            Ok(()) => ControlFlow::Continue(()),
            Err(e) => {
                io_error = Some(e);
                ControlFlow::Break(())
            }
        }
    })?;
    if let Some(e) = io_error {
        return Err(e.into());
    }
    out.flush()?;
    Ok(EXIT_OK)
}

fn cmd_lengths(n: u64, format: Format, limits: Limits, out: &mut dyn Write) -> Outcome {
    check_n(n, limits.count, "counting")?;
    let lengths: Vec<u64> = enumerate::ap_lengths(n)?.into_iter().collect();
    match format {
        Format::Text => {
            let list: Vec<String> = lengths.iter().map(u64::to_string).collect();
            writeln!(out, "{{{}}} ({})", list.join(", "), lengths.len())?;
        }
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::json!({ "n": n, "lengths": lengths, "count": lengths.len() })
        )?,
        Format::Csv => {
            writeln!(out, "n,length")?;
            for d in &lengths {
                writeln!(out, "{n},{d}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_seq(
    kind: SequenceKind,
    upper: u64,
    path: Option<&Path>,
    limits: Limits,
    out: &mut dyn Write,
) -> Outcome {
    check_n(upper, limits.sieve, "range table")?;
    let table = match kind {
        SequenceKind::ApCount => sieve::ap_count_range_bounded(upper, limits.sieve)?,
        SequenceKind::ApDivCount => sieve::apdiv_count_range_bounded(upper, limits.sieve)?,
    };
    let write_csv = |w: &mut dyn Write| -> io::Result<()> {
        let mut w = BufWriter::new(w);
        writeln!(w, "n,value")?;
        for (n, v) in table.iter() {
            writeln!(w, "{n},{v}")?;
        }
        w.flush()
    };
    match path {
        Some(p) => {
            let mut file = File::create(p)?;
            write_csv(&mut file)?;
        }
        None => write_csv(out)?,
    }
    Ok(EXIT_OK)
}

fn cmd_verify_oracle(upper: u64, out: &mut dyn Write) -> Outcome {
    let formula = |n: u64| count::ap_count(n).map(|b| b.total);
    verify_oracle_inner(upper, &formula, out)
}

/// Compares `formula(n)` and the enumerator with the brute-force oracle for
/// `n = 1..=upper`; stops at the first disagreement.
pub fn verify_oracle_with(
    upper: u64,
    formula: &dyn Fn(u64) -> crate::Result<u64>,
    out: &mut dyn Write,
) -> Result<i32, io::Error> {
    match verify_oracle_inner(upper, formula, out) {
        Ok(code) => Ok(code),
        Err(Failure::Io(e)) => Err(e),
        Err(Failure::Usage(msg) | Failure::Network(msg)) => {
            Err(io::Error::new(io::ErrorKind::InvalidInput, msg))
        }
    }
}

fn verify_oracle_inner(
    upper: u64,
    formula: &dyn Fn(u64) -> crate::Result<u64>,
    out: &mut dyn Write,
) -> Outcome {
    check_n(upper, ORACLE_MAX_N, "oracle")?;
    for n in 1..=upper {
        let expected = oracle::brute_enumerate(n)?;
        let got = formula(n)?;
        if got != expected.len() as u64 {
            writeln!(
                out,
                "mismatch at n = {n}: expected {}, got {got}",
                expected.len()
            )?;
            return Ok(EXIT_MISMATCH);
        }
        let listed: Vec<Vec<u64>> = enumerate::enumerate_ap(n)?
            .iter()
            .map(|p| p.parts().collect())
            .collect();
        if listed != expected {
            let first_bad = listed
                .iter()
                .zip(&expected)
                .position(|(a, b)| a != b)
                .unwrap_or(listed.len().min(expected.len()));
            writeln!(
                out,
                "mismatch at n = {n}: partition #{} expected {:?}, got {:?}",
                first_bad + 1,
                expected.get(first_bad),
                listed.get(first_bad)
            )?;
            return Ok(EXIT_MISMATCH);
        }
    }
    writeln!(out, "OK")?;
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify_oeis(
    kind: SequenceKind,
    path: Option<&Path>,
    fetch: bool,
    limit: Option<u64>,
    limits: Limits,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let bfile = match (path, fetch) {
        (Some(p), false) => match BFile::read(p)? {
            Ok(b) => b,
            Err(e) => return Err(Failure::Usage(format!("{}: {e}", p.display()))),
        },
        (None, true) => {
            let text = fetch_bfile(kind.oeis_id())?;
            BFile::parse(kind.oeis_id(), &text).map_err(|e| Failure::Usage(e.to_string()))?
        }
        _ => {
            return Err(Failure::Usage(
                "verify-oeis needs a b-file path or --fetch".into(),
            ))
        }
    };
    if !bfile.sequence_id().is_empty() && bfile.sequence_id() != kind.oeis_id() {
        writeln!(
            err,
            "apx: warning: b-file is {} but `{kind}` is {}",
            bfile.sequence_id(),
            kind.oeis_id()
        )?;
    }
    verify_bfile(kind, &bfile, limit, limits, out, err)
}

fn verify_bfile(
    kind: SequenceKind,
    bfile: &BFile,
    limit: Option<u64>,
    limits: Limits,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let last = bfile.last_index().unwrap_or(0).max(0) as u64;
    let upper = limit.map_or(last, |l| l.min(last));
    if upper == 0 {
        writeln!(err, "apx: warning: 0 terms compared")?;
        writeln!(out, "{}: 0 terms compared", kind.oeis_id())?;
        return Ok(EXIT_OK);
    }
    check_n(upper, limits.sieve, "range table")?;
    let table = sieve::table(kind, upper)?;
    let mut compared = 0u64;
    let mut mismatches = 0u64;
    for (&index, &expected) in bfile.entries().range(1..=upper as i64) {
        let got = table.get(index as u64).expect("index within table");
        compared += 1;
        if i128::from(got) != expected {
            mismatches += 1;
            writeln!(
                out,
                "mismatch at n = {index}: b-file {expected}, computed {got}"
            )?;
        }
    }
    writeln!(
        out,
        "{}: {compared} terms compared, {mismatches} mismatches",
        kind.oeis_id()
    )?;
    Ok(if mismatches == 0 {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}

#[cfg(feature = "fetch")]
fn fetch_bfile(id: &str) -> Result<String, Failure> {
    let url = format!("https://oeis.org/{id}/b{}.txt", &id[1..]);
    let mut response = ureq::get(&url)
        .call()
        .map_err(|e| Failure::Network(format!("{url}: {e}")))?;
    response
        .body_mut()
        .read_to_string()
        .map_err(|e| Failure::Network(format!("{url}: {e}")))
}

#[cfg(not(feature = "fetch"))]
fn fetch_bfile(_id: &str) -> Result<String, Failure> {
    Err(Failure::Usage("this build has no --fetch support".into()))
}

fn cmd_kcalc(op: KcalcOp, out: &mut dyn Write) -> Outcome {
    match op {
        KcalcOp::Product { m, n, k } => writeln!(out, "{}", kcore::k_product(m, n, k)?)?,
        KcalcOp::Quotient { a, b, k } => match kcore::k_quotient(a, b, k)? {
            Some(c) => writeln!(out, "{c}")?,
            None => writeln!(out, "not divisible")?,
        },
        KcalcOp::Divisors { n, k } => {
            check_n(n, COUNT_MAX_N, "counting")?;
            let set = kcore::divisor_set(n, Parity::of(k))?;
            let list: Vec<String> = set.iter().map(|d| d.to_string()).collect();
            writeln!(out, "{}", list.join(" "))?;
        }
    }
    Ok(EXIT_OK)
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain records always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn apx(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("apx").chain(args.iter().copied());
        let code = run_with_limits(argv, Limits::default(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn count_and_breakdown() {
        assert_eq!(apx(&["count", "100"]), (0, "78\n".into(), String::new()));
        assert_eq!(apx(&["count", "1"]).1, "1\n");
        assert_eq!(
            apx(&["count", "100", "--breakdown"]).1,
            "trivial 9\neven 62\nodd 7\ntotal 78\n"
        );
        assert_eq!(
            apx(&["count", "100", "--breakdown", "--format", "json"]).1,
            "{\"n\":100,\"trivial\":9,\"even\":62,\"odd\":7,\"total\":78}\n"
        );
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(apx(&["count", "0"]).0, EXIT_USAGE);
        assert_eq!(apx(&["count", "abc"]).0, EXIT_USAGE);
        assert_eq!(apx(&["count", "-5"]).0, EXIT_USAGE);
        assert_eq!(apx(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(apx(&["kcalc", "quotient", "1", "0", "1"]).0, EXIT_USAGE);
        let (code, _, err) = apx(&["list", "20000000"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("enumeration bound"), "{err}");
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = apx(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify-oeis"));
    }

    #[test]
    fn list_text() {
        let (code, out, _) = apx(&["list", "6", "--format", "text"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 7);
        assert_eq!(lines[0], "6 = 6");
        assert_eq!(*lines.last().unwrap(), "1 + 2 + 3 = 6");
        assert_eq!(apx(&["list", "1"]).1, "1 = 1\n");
    }

    #[test]
    fn list_csv() {
        let out = apx(&["list", "6", "--format", "csv"]).1;
        assert!(out.starts_with("n,first,diff,length,parts\n6,6,0,1,6\n"));
        assert!(out.ends_with("6,1,1,3,1 2 3\n"));
    }

    #[test]
    fn lengths_text() {
        assert_eq!(apx(&["lengths", "6"]).1, "{1, 2, 3, 6} (4)\n");
        assert_eq!(apx(&["lengths", "1"]).1, "{1} (1)\n");
        assert!(apx(&["lengths", "500"]).1.ends_with("(13)\n"));
    }

    #[test]
    fn kcalc() {
        assert_eq!(apx(&["kcalc", "quotient", "57", "6", "3"]).1, "7\n");
        assert_eq!(
            apx(&["kcalc", "quotient", "100", "9", "3"]).1,
            "not divisible\n"
        );
        assert_eq!(apx(&["kcalc", "product", "-4", "1", "-3"]).1, "-4\n");
        assert_eq!(apx(&["kcalc", "product", "9", "8", "3"]).1, "100\n");
        assert_eq!(apx(&["kcalc", "divisors", "12", "3"]).1, "1 3 8 24\n");
        assert_eq!(apx(&["kcalc", "divisors", "12", "-2"]).1, "1 2 3 4 6 12\n");
    }

    #[test]
    fn verify_oracle_reports_injected_fault() {
        let faulty = |n: u64| count::ap_count(n).map(|b| b.total + u64::from(n == 7));
        let mut out = Vec::new();
        let code = verify_oracle_with(30, &faulty, &mut out).unwrap();
        assert_eq!(code, EXIT_MISMATCH);
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "mismatch at n = 7: expected 5, got 6\n"
        );
    }

    #[test]
    fn verify_oracle_small() {
        assert_eq!(
            apx(&["verify-oracle", "1"]),
            (0, "OK\n".into(), String::new())
        );
        assert_eq!(apx(&["verify-oracle", "5001"]).0, EXIT_USAGE);
    }

    #[test]
    fn verify_bfile_paths() {
        let good = BFile::parse("A175239", "# A175239\n1 1\n2 2\n3 3\n18 7\n").unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = verify_bfile(
            SequenceKind::ApDivCount,
            &good,
            None,
            Limits::default(),
            &mut out,
            &mut err,
        );
        assert_eq!(code.unwrap(), EXIT_OK);
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "A175239: 4 terms compared, 0 mismatches\n"
        );

        let bad = BFile::parse("A049988", "1 1\n2 3\n").unwrap();
        let mut out = Vec::new();
        let code = verify_bfile(
            SequenceKind::ApCount,
            &bad,
            None,
            Limits::default(),
            &mut out,
            &mut err,
        );
        assert_eq!(code.unwrap(), EXIT_MISMATCH);
        assert!(String::from_utf8(out)
            .unwrap()
            .starts_with("mismatch at n = 2: b-file 3, computed 2\n"));

        let empty = BFile::parse("A049988", "# nothing\n").unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = verify_bfile(
            SequenceKind::ApCount,
            &empty,
            None,
            Limits::default(),
            &mut out,
            &mut err,
        );
        assert_eq!(code.unwrap(), EXIT_OK);
        assert!(String::from_utf8(err).unwrap().contains("0 terms compared"));
    }

    #[test]
    fn limit_truncates_comparison() {
        let b = BFile::parse("A049988", "1 1\n2 2\n3 3\n4 999\n").unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = verify_bfile(
            SequenceKind::ApCount,
            &b,
            Some(3),
            Limits::default(),
            &mut out,
            &mut err,
        );
        assert_eq!(code.unwrap(), EXIT_OK);
    }

    #[test]
    fn limits_from_env_value() {
        assert_eq!(Limits::from_env_value(None), Ok(Limits::default()));
        assert_eq!(Limits::from_env_value(Some("50")).unwrap().enumerate, 50);
        assert!(Limits::from_env_value(Some("0")).is_err());
        assert!(Limits::from_env_value(Some("ten")).is_err());
        assert!(Limits::from_env_value(Some("1000000000001")).is_err());
    }

    #[test]
    fn tight_limits_reject_large_n() {
        let limits = Limits::uniform(50).unwrap();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with_limits(["apx", "count", "51"], limits, &mut out, &mut err);
        assert_eq!(code, EXIT_USAGE);
    }
}
