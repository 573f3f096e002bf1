// Compare the divisor-based count and enumeration with brute force.
//
// ```bash
// cargo run --release --example oracle_check -- 2000
// ```

use ap_partition::count::ap_count;
use ap_partition::enumerate::enumerate_ap;
use ap_partition::oracle::brute_enumerate;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    run(300)
}

fn run(upper: u64) -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=upper {
        let expected = brute_enumerate(n)?;
        let listed: Vec<Vec<u64>> = enumerate_ap(n)?
            .iter()
            .map(|p| p.parts().collect())
            .collect();
        if listed != expected || ap_count(n)?.total != expected.len() as u64 {
            return Err(format!("disagreement at n = {n}").into());
        }
    }
    println!("formula, enumerator and brute force agree for n = 1..={upper}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    match std::env::args().nth(1) {
        Some(arg) => run(arg.parse()?),
        None => run_example(),
    }
}
