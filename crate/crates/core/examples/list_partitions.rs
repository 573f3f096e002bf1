// Stream every partition of `n` into an arithmetic progression.
//
// ```bash
// cargo run --example list_partitions -- 30
// ```

use std::ops::ControlFlow;

use ap_partition::enumerate::{enumerate_ap, partition_for, visit_ap};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    run(6)
}

fn run(n: u64) -> Result<(), Box<dyn std::error::Error>> {
    let mut count = 0;
    visit_ap(n, |p| {
        count += 1;
        println!("{p}");
        ControlFlow::Continue(())
    })?;
    println!("{count} partitions");

    // One partition on its own: five parts, difference 7.
    let p = partition_for(100, 5, 7)?.expect("admissible");
    println!("{p}");

    // Only the first few of a large set.
    let mut shown = Vec::new();
    visit_ap(1_000_000, |p| {
        shown.push(p);
        if shown.len() == 3 {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    assert_eq!(shown.len(), 3);

    assert_eq!(enumerate_ap(6)?.len(), 7);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    match std::env::args().nth(1) {
        Some(arg) => run(arg.parse()?),
        None => run_example(),
    }
}
