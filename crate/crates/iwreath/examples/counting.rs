//! Counting cross-sections: totals, isomorphism classes, and a brute-force
//! confirmation of the closed-form class count for IS_2 wr_p IS_2.
//!
//! Run: cargo run --example counting

use iwreath::counting;
use iwreath::oracle;
use iwreath::verify;
use iwreath::wreath::WreathElement;

fn main() {
    println!("R-cross-sections of IS_n (total / up to isomorphism):");
    for n in 1..=6 {
        println!(
            "  n = {n}: {} / {}",
            counting::count_r_cross_sections_isn(n),
            counting::count_noniso_isn(n)
        );
    }

    println!("\nnon-isomorphic R-cross-sections of IS_m wr_p IS_n:");
    for (m, n) in [(1, 2), (1, 3), (2, 2), (2, 3), (3, 3)] {
        let (total, terms) = counting::count_noniso_wreath(m, n);
        let parts: Vec<String> = terms
            .iter()
            .map(|t| format!("j={:?}: {}", t.j, t.value))
            .collect();
        println!("  (m, n) = ({m}, {n}): {total}  [{}]", parts.join(", "));
    }

    // Brute force at (2, 2): build all 15 constructed cross-sections and
    // classify them by searching for isomorphisms of multiplication tables.
    let sections = verify::all_constructed_wreath_sections(2, 2).unwrap();
    let sets: Vec<Vec<WreathElement>> = sections.iter().map(|s| s.elements.clone()).collect();
    let cls = oracle::classify_isomorphism(&sets, |a, b| a.compose(b).unwrap()).unwrap();
    println!(
        "\nbrute force at (2, 2): {} sections fall into {} classes {:?}",
        sections.len(),
        cls.classes.len(),
        cls.classes
    );
    assert_eq!(
        num_bigint::BigUint::from(cls.classes.len()),
        counting::count_noniso_wreath(2, 2).0
    );
    println!("matches the closed form");
}
