// Closed-form `|AP(n)|` with its three summands.
//
// ```bash
// cargo run --example count_partitions -- 100
// ```

use ap_partition::count::{ap_count, critical_value, tau_triple};
use ap_partition::kcore::{divisor_set, Parity};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    run(100)
}

fn run(n: u64) -> Result<(), Box<dyn std::error::Error>> {
    let b = ap_count(n)?;
    let tau = tau_triple(n)?;
    println!(
        "n = {n}: tau = {}, odd divisors {}, even divisors {}",
        tau.tau, tau.tau_odd, tau.tau_even
    );

    for (parity, label) in [(Parity::Even, "even k"), (Parity::Odd, "odd k")] {
        for d in divisor_set(n, parity)?.iter().filter(|&d| d > 1) {
            let kd = critical_value(n, d)?;
            let fits = match parity {
                Parity::Even => u128::from(d) * u128::from(d) <= u128::from(n),
                Parity::Odd => u128::from(d) * u128::from(d) < 2 * u128::from(n),
            };
            if fits {
                println!("  {label}: d = {d:>4}, k_d = {kd} (~{:.3})", kd.to_f64());
            }
        }
    }
    println!(
        "|AP({n})| = {} + {} + {} = {}",
        b.trivial, b.even_sum, b.odd_sum, b.total
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    match std::env::args().nth(1) {
        Some(arg) => run(arg.parse()?),
        None => run_example(),
    }
}
