// `|AP(n)|` for a whole range, written as CSV for a scatter plot.
//
// ```bash
// cargo run --release --example comet_data -- 100000 > comet.csv
// ```

use std::io::{self, BufWriter, Write};

use ap_partition::sieve::{ap_count_range, apdiv_count_range};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    run(1000)
}

fn run(upper: u64) -> Result<(), Box<dyn std::error::Error>> {
    let table = ap_count_range(upper)?;
    let mut out = BufWriter::new(io::stdout().lock());
    writeln!(out, "n,value")?;
    for (n, v) in table.iter() {
        writeln!(out, "{n},{v}")?;
    }
    out.flush()?;

    let lengths = apdiv_count_range(upper)?;
    let widest = lengths.iter().max_by_key(|&(_, v)| v).expect("nonempty");
    eprintln!(
        "most distinct lengths below {upper}: n = {}, {} lengths",
        widest.0, widest.1
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
