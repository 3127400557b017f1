//! Every isomorphism between cross-sections is a conjugacy: finds the
//! isomorphisms between two IS_3 cross-sections and extracts conjugating
//! permutations, then does the same for a wreath pair.
//!
//! Run: cargo run --example conjugacy

use iwreath::cross_sections::{build_r_cross_section, build_wreath_r_cross_section, OrderedPartition};
use iwreath::structure;

fn main() {
    // Two IS_3 cross-sections with the same block sizes: isomorphic.
    let op1 = OrderedPartition::parse("[1<2][3]", 3).unwrap();
    let op2 = OrderedPartition::parse("[1][2<3]", 3).unwrap();
    let r1 = build_r_cross_section(&op1);
    let r2 = build_r_cross_section(&op2);

    let isos = structure::find_isomorphisms_isn(&r1, &r2).unwrap();
    println!("{op1} vs {op2}: {} isomorphisms", isos.len());
    for phi in &isos {
        let conj = structure::conjugator_isn(&r1, &r2, phi).unwrap();
        println!("  theta = {:?}", conj.theta);
    }

    // Different block sizes: no isomorphism at all.
    let op3 = OrderedPartition::parse("[1<2<3]", 3).unwrap();
    let r3 = build_r_cross_section(&op3);
    assert!(structure::find_isomorphisms_isn(&r1, &r3).unwrap().is_empty());
    println!("{op1} vs {op3}: not isomorphic (different type vectors)\n");

    // Wreath case: the conjugator is a pair (vartheta, theta) acting as an
    // invertible element of IS_m wr_p IS_n.
    let opw = OrderedPartition::parse("[1][2]", 2).unwrap();
    let comp_a = build_r_cross_section(&OrderedPartition::parse("[1<2]", 2).unwrap());
    let comp_b = build_r_cross_section(&OrderedPartition::parse("[2<1]", 2).unwrap());
    let w1 = build_wreath_r_cross_section(&opw, &[comp_a.clone(), comp_b.clone()]).unwrap();
    let w2 = build_wreath_r_cross_section(&opw, &[comp_b, comp_a]).unwrap();

    let isos = structure::find_isomorphisms_wreath(&w1, &w2).unwrap();
    println!("wreath pair: {} isomorphisms", isos.len());
    let conj = structure::conjugator_wreath(&w1, &w2, &isos[0]).unwrap();
    println!("  theta    = {:?}", conj.theta);
    println!("  vartheta = {:?}", conj.vartheta.unwrap());
}
