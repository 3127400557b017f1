//! Integer-partition counting and the closed-form counts of cross-sections,
//! all in exact arbitrary-precision arithmetic.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

/// A partition of `n` recorded by multiplicities: `j[i - 1]` parts of size
/// `i`, so that `Σ i·j_i = n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionVector {
    pub n: usize,
    pub j: Vec<usize>,
}

/// All partition multiplicity vectors of `n`, enumerated with the largest
/// parts first (reverse-lexicographic in the part lists).
pub fn partition_vectors(n: usize) -> Vec<PartitionVector> {
    fn rec(remaining: usize, max_part: usize, j: &mut Vec<usize>, out: &mut Vec<PartitionVector>, n: usize) {
        if remaining == 0 {
            out.push(PartitionVector { n, j: j.clone() });
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            j[part - 1] += 1;
            rec(remaining - part, part, j, out, n);
            j[part - 1] -= 1;
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    rec(n, n, &mut vec![0; n], &mut out, n);
    out
}

/// `p_n`, the number of partitions of `n`.
pub fn partition_count(n: usize) -> BigUint {
    BigUint::from(partition_vectors(n).len())
}

pub fn binomial(n: BigUint, k: usize) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    let mut x = n;
    for i in 1..=k {
        num *= x.clone();
        den *= BigUint::from(i);
        if x.is_zero() {
            return BigUint::zero();
        }
        x -= 1u32;
    }
    num / den
}

fn factorial(k: usize) -> BigUint {
    (1..=k).map(BigUint::from).fold(BigUint::one(), |a, b| a * b)
}

/// Number of R-cross-sections of `IS_n`: one per ordered partition, i.e.
/// the sum over set partitions of the product of block factorials.
pub fn count_r_cross_sections_isn(n: usize) -> BigUint {
    // Sum over the multiplicity vectors: the number of set partitions with
    // j_i blocks of size i is n! / (prod (i!)^{j_i} j_i!), each contributing
    // prod (i!)^{j_i} orderings, so the term is n! / prod j_i!.
    let mut total = BigUint::zero();
    for pv in partition_vectors(n) {
        let mut denom = BigUint::one();
        for &ji in &pv.j {
            denom *= factorial(ji);
        }
        total += factorial(n) / denom;
    }
    total
}

/// Number of non-isomorphic R- (equivalently L-) cross-sections of `IS_n`.
pub fn count_noniso_isn(n: usize) -> BigUint {
    partition_count(n)
}

/// One summand of the wreath counting formula.
#[derive(Debug, Clone)]
pub struct CountTerm {
    pub j: Vec<usize>,
    pub value: BigUint,
}

/// Number of non-isomorphic R-cross-sections of `IS_m ≀_p IS_n`:
/// the sum over partition vectors of `n` of `∏_i C(p_m + j_i - 1, j_i)`.
pub fn count_noniso_wreath(m: usize, n: usize) -> (BigUint, Vec<CountTerm>) {
    let pm = partition_count(m);
    let mut total = BigUint::zero();
    let mut terms = Vec::new();
    for pv in partition_vectors(n) {
        let mut value = BigUint::one();
        for &ji in &pv.j {
            value *= binomial(pm.clone() + BigUint::from(ji) - BigUint::one(), ji);
        }
        total += value.clone();
        terms.push(CountTerm { j: pv.j, value });
    }
    (total, terms)
}
