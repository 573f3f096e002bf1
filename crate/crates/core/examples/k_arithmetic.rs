// The k-arithmetic product, quotient and divisor sets.
//
// ```bash
// cargo run --example k_arithmetic
// ```

use ap_partition::kcore::{divisor_set, k_divides, k_product, k_quotient, Parity};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // 5 ⊙₂ 3 is the ordinary product.
    assert_eq!(k_product(5, 3, 2)?, 15);

    // 9 ⊙₃ 8 = 2 + 5 + 8 + 11 + 14 + 17 + 20 + 23
    let sum = k_product(9, 8, 3)?;
    println!("9 ⊙₃ 8 = {sum}");
    println!("8 | 100 (arith 3): {}", k_divides(8, 100, 3)?);
    println!("9 | 100 (arith 3): {}", k_divides(9, 100, 3)?);

    // 57 as six terms with difference 3: the quotient is where to begin.
    let anchor = k_quotient(57, 6, 3)?.expect("6 divides 57 in the 3-arithmetic");
    let first = anchor - 6 + 1;
    let terms: Vec<i64> = (0..6).map(|i| first + 3 * i).collect();
    println!("57 ⊘₃ 6 = {anchor}: 57 = {terms:?}");
    assert_eq!(terms, [2, 5, 8, 11, 14, 17]);

    // Every way to write 12 with difference 3, including negative terms.
    let set = divisor_set(12, Parity::of(3))?;
    println!("divisors of 12 (arith 3): {:?}", set.as_slice());
    for d in set.iter() {
        let d = d as i64;
        let c = k_quotient(12, d, 3)?.expect("listed divisor");
        println!("  d = {d:>2}: 12 = {c} ⊙₃ {d}, first term {}", c - d + 1);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
