//! Enumerates IS_n, prints elements in chain-cycle notation, and round-trips
//! one element through decomposition.
//!
//! Run: cargo run --example enumerate_and_notation

use iwreath::isn::{self, PartialBijection};
use iwreath::notation;

fn main() {
    for n in 1..=4 {
        let all = isn::enumerate_is(n).unwrap();
        println!("|IS_{n}| = {}", all.len());
    }

    println!("\nAll 34 elements of IS_3:");
    for f in isn::enumerate_is(3).unwrap() {
        println!("  {}", notation::print(&f));
    }

    // Chain decomposition of x = (1 3)(2 -> 4) in IS_4: a cycle on {1,3}
    // and a chain moving 2 to 4.
    let x = PartialBijection::make(4, &[(1, 3), (3, 1), (2, 4)]).unwrap();
    let dec = isn::chain_decompose(&x);
    println!("\nx = {}", notation::print(&x));
    println!("cycles: {:?}", dec.cycles);
    println!("chains: {:?}", dec.chains);
    assert_eq!(dec.product(), x);
    println!("re-multiplying the factors gives x back");

    let parsed = notation::parse("(1,3)[2,4]", 4).unwrap();
    assert_eq!(parsed, x);
    println!("parse(\"(1,3)[2,4]\") == x");
}
