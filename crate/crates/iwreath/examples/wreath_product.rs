//! The partial wreath product IS_m wr_p IS_n: composition, inversion,
//! idempotents, and the pointwise Green's relation criteria.
//!
//! Run: cargo run --example wreath_product

use iwreath::isn::PartialBijection;
use iwreath::wreath::{self, WreathElement};

fn main() {
    // Elements are pairs (f, a): an outer partial bijection a of {1..n} and
    // an inner IS_m value f(x) for every x in dom(a).
    let a = PartialBijection::make(2, &[(1, 2)]).unwrap();
    let f1 = PartialBijection::make(2, &[(1, 2), (2, 1)]).unwrap();
    let p = WreathElement::new(2, a, vec![Some(f1), None]).unwrap();

    let b = PartialBijection::make(2, &[(2, 2)]).unwrap();
    let g1 = PartialBijection::make(2, &[(1, 1)]).unwrap();
    let q = WreathElement::new(2, b, vec![None, Some(g1)]).unwrap();

    let pq = p.compose(&q).unwrap();
    println!("p q = {}", serde_json::to_string(&pq).unwrap());
    println!("p^-1 = {}", serde_json::to_string(&p.inverse()).unwrap());
    assert_eq!(p.compose(&p.inverse()).unwrap().compose(&p).unwrap(), p);

    let all = wreath::enumerate_wreath(2, 2).unwrap();
    println!("\n|IS_2 wr_p IS_2| = {}", all.len());
    let idem = all.iter().filter(|e| e.is_idempotent()).count();
    println!(
        "idempotents: {idem} = (1 + 2^m)^n = {}",
        wreath::count_wreath_idempotents(2, 2)
    );

    // R is "same outer domain, R-related inner values"; check one pair
    // against the definitional relation on the full semigroup.
    let r_pairs = all
        .iter()
        .flat_map(|x| all.iter().map(move |y| (x, y)))
        .filter(|(x, y)| wreath::w_green_r(x, y).unwrap())
        .count();
    println!("R-related ordered pairs: {r_pairs}");
}
