// Check computed terms against an OEIS b-file.
//
// ```bash
// cargo run --example verify_bfile -- crates/core/tests/fixtures/b049988.txt
// ```

use std::path::PathBuf;

use ap_partition::cli::BFile;
use ap_partition::sieve::{table, SequenceKind};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    run(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/b175239.txt"))
}

fn run(path: PathBuf) -> Result<(), Box<dyn std::error::Error>> {
    let bfile = BFile::read(&path)??;
    let kind = if bfile.sequence_id() == SequenceKind::ApDivCount.oeis_id() {
        SequenceKind::ApDivCount
    } else {
        SequenceKind::ApCount
    };
    let upper = bfile.last_index().unwrap_or(0).max(1) as u64;
    let computed = table(kind, upper)?;
    let bad: Vec<i64> = bfile
        .entries()
        .iter()
        .filter(|(&i, &v)| i >= 1 && computed.get(i as u64).map(i128::from) != Some(v))
        .map(|(&i, _)| i)
        .collect();
    println!("{bfile}: {} mismatches", bad.len());
    if !bad.is_empty() {
        return Err(format!("first mismatch at n = {}", bad[0]).into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    match std::env::args().nth(1) {
        Some(arg) => run(PathBuf::from(arg)),
        None => run_example(),
    }
}
