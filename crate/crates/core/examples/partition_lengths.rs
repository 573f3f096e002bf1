// The distinct lengths occurring in `AP(n)`.
//
// ```bash
// cargo run --example partition_lengths -- 500
// ```

use ap_partition::count::apdiv_count;
use ap_partition::enumerate::ap_lengths;
use ap_partition::kcore::divisors;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    run(500)
}

fn run(n: u64) -> Result<(), Box<dyn std::error::Error>> {
    let lengths = ap_lengths(n)?;
    let extra: Vec<u64> = lengths
        .iter()
        .copied()
        .filter(|d| !n.is_multiple_of(*d))
        .collect();
    println!("APdiv({n}) = {lengths:?}");
    println!(
        "usual divisors: {}, extra even lengths: {extra:?}",
        divisors(n).len()
    );
    assert_eq!(lengths.len() as u64, apdiv_count(n)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    match std::env::args().nth(1) {
        Some(arg) => run(arg.parse()?),
        None => run_example(),
    }
}
