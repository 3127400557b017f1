//! Idempotent structure of cross-sections, exhaustive isomorphism search,
//! and extraction of conjugating witnesses for the classification theorems.

use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::cross_sections::{IsnCrossSection, OrderedPartition, WreathCrossSection};
use crate::error::{Error, Result};
use crate::isn::PartialBijection;
use crate::semigroup::{find_isomorphisms_tables, MulTable};
use crate::wreath::WreathElement;

/// Default bound on semigroup size for isomorphism search.
pub const DEFAULT_MAX_ISO_SIZE: usize = 64;

/// The idempotents of a cross-section with the natural partial order
/// `e ⪯ f ⇔ ef = fe = e`.
#[derive(Debug, Clone)]
pub struct IdempotentPoset {
    pub elements: Vec<PartialBijection>,
    /// `leq[i][j]` iff `elements[i] ⪯ elements[j]`.
    pub leq: Vec<Vec<bool>>,
}

impl IdempotentPoset {
    pub fn of_cross_section(cs: &IsnCrossSection) -> Self {
        let elements: Vec<PartialBijection> = cs
            .elements
            .iter()
            .filter(|e| e.is_idempotent())
            .cloned()
            .collect();
        let leq = elements
            .iter()
            .map(|e| {
                elements
                    .iter()
                    .map(|f| crate::isn::natural_order(e, f).expect("idempotents"))
                    .collect()
            })
            .collect();
        IdempotentPoset { elements, leq }
    }

    pub fn zero_index(&self) -> Option<usize> {
        self.elements.iter().position(|e| e.is_zero())
    }
}

/// Order-theoretic block-idempotent test: `e` is block iff no two nonzero
/// idempotents below `e` multiply to zero.
pub fn is_block_idempotent(e: &PartialBijection, cs: &IsnCrossSection) -> Result<bool> {
    if !e.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    let poset = IdempotentPoset::of_cross_section(cs);
    let below: Vec<&PartialBijection> = poset
        .elements
        .iter()
        .filter(|e1| !e1.is_zero() && crate::isn::natural_order(e1, e).expect("idempotents"))
        .collect();
    for e1 in &below {
        for e2 in &below {
            if e1.compose_unchecked(e2).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Definitional block-idempotent test: `dom(e)` lies inside a single block.
pub fn is_block_idempotent_definitional(
    e: &PartialBijection,
    op: &OrderedPartition,
) -> Result<bool> {
    if !e.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    let dom = e.dom();
    if dom.is_empty() {
        return Ok(true);
    }
    Ok(op
        .blocks()
        .iter()
        .any(|b| dom.iter().all(|x| b.contains(x))))
}

/// Recovers the defining ordered partition of an R-cross-section from its
/// idempotent structure: blocks are the domains of the maximal block
/// idempotents; the linear order of a block is read off the nested chain of
/// block-idempotent domains, which shrink from the bottom of the order.
pub fn recover_partition(cs: &IsnCrossSection) -> Result<OrderedPartition> {
    let blocks_idems: Vec<PartialBijection> = {
        let mut v = Vec::new();
        for e in &cs.elements {
            if e.is_idempotent() && !e.is_zero() && is_block_idempotent(e, cs)? {
                v.push(e.clone());
            }
        }
        v
    };
    // Maximal block idempotents give the blocks.
    let maximal: Vec<&PartialBijection> = blocks_idems
        .iter()
        .filter(|e| {
            !blocks_idems.iter().any(|f| {
                f != *e && crate::isn::natural_order(e, f).expect("idempotents")
            })
        })
        .collect();
    let mut blocks = Vec::new();
    for top in maximal {
        let block_set = top.dom();
        // The chain of block idempotents supported inside this block.
        let mut chain: Vec<&PartialBijection> = blocks_idems
            .iter()
            .filter(|e| e.dom().iter().all(|x| block_set.contains(x)))
            .collect();
        chain.sort_by_key(|e| std::cmp::Reverse(e.dom_size()));
        if chain.len() != block_set.len() {
            return Err(Error::NotCrossSection(format!(
                "expected {} nested block idempotents over block {:?}, found {}",
                block_set.len(),
                block_set,
                chain.len()
            )));
        }
        let mut order = Vec::with_capacity(block_set.len());
        for j in 0..chain.len() {
            let dom_j = chain[j].dom();
            let next: Vec<usize> = if j + 1 < chain.len() {
                chain[j + 1].dom()
            } else {
                Vec::new()
            };
            let mut diff: Vec<usize> = dom_j.iter().filter(|x| !next.contains(x)).copied().collect();
            if diff.len() != 1 {
                return Err(Error::NotCrossSection(
                    "block idempotent domains do not form a nested chain".into(),
                ));
            }
            order.push(diff.remove(0));
        }
        blocks.push(order);
    }
    OrderedPartition::new(cs.n, blocks).map_err(|e| Error::NotCrossSection(e.to_string()))
}

/// All product-preserving bijections between two finite semigroups given as
/// element lists, returned as index maps in deterministic order.
pub fn find_isomorphisms<E, F, G>(s: &[E], t: &[E], mul_s: F, mul_t: G) -> Result<Vec<Vec<usize>>>
where
    E: Clone + Eq + Hash,
    F: Fn(&E, &E) -> E,
    G: Fn(&E, &E) -> E,
{
    if s.len() > DEFAULT_MAX_ISO_SIZE || t.len() > DEFAULT_MAX_ISO_SIZE {
        return Err(Error::TooLarge {
            size: s.len().max(t.len()),
            bound: DEFAULT_MAX_ISO_SIZE,
        });
    }
    if s.len() != t.len() {
        return Ok(Vec::new());
    }
    let ts = MulTable::build(s, mul_s)?;
    let tt = MulTable::build(t, mul_t)?;
    Ok(find_isomorphisms_tables(&ts, &tt))
}

pub fn find_isomorphisms_isn(r1: &IsnCrossSection, r2: &IsnCrossSection) -> Result<Vec<Vec<usize>>> {
    find_isomorphisms(
        &r1.elements,
        &r2.elements,
        |a, b| a.compose_unchecked(b),
        |a, b| a.compose_unchecked(b),
    )
}

pub fn find_isomorphisms_wreath(
    r1: &WreathCrossSection,
    r2: &WreathCrossSection,
) -> Result<Vec<Vec<usize>>> {
    find_isomorphisms(
        &r1.elements,
        &r2.elements,
        |a, b| a.compose_unchecked(b),
        |a, b| a.compose_unchecked(b),
    )
}

/// A conjugating witness: a permutation of `{1..n}`, plus for the wreath
/// case a permutation of `{1..m}` attached to every outer point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conjugator {
    /// One-line form of `θ`, 1-based: `theta[i - 1]` is the image of `i`.
    pub theta: Vec<usize>,
    /// One-line forms of `ϑ(1), ..., ϑ(n)`, or `None` for the `IS_n` case.
    pub vartheta: Option<Vec<Vec<usize>>>,
}

impl Conjugator {
    pub fn theta_map(&self) -> PartialBijection {
        one_line_to_pb(&self.theta)
    }
}

fn one_line_to_pb(images: &[usize]) -> PartialBijection {
    let pairs: Vec<(usize, usize)> = images.iter().enumerate().map(|(i, &y)| (i + 1, y)).collect();
    PartialBijection::make(images.len(), &pairs).expect("valid permutation")
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for y in 1..=n {
            if !used[y - 1] {
                used[y - 1] = true;
                cur.push(y);
                rec(n, cur, used, out);
                cur.pop();
                used[y - 1] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Whether `θ` intertwines every element: `α θ = θ φ(α)` as partial maps.
fn theta_is_valid_isn(r1: &IsnCrossSection, r2: &IsnCrossSection, phi: &[usize], theta: &PartialBijection) -> bool {
    r1.elements.iter().enumerate().all(|(i, alpha)| {
        alpha.compose_unchecked(theta) == theta.compose_unchecked(&r2.elements[phi[i]])
    })
}

/// Extracts the conjugating permutation for an isomorphism of `IS_n`
/// cross-sections, by transporting the ν-labels of block idempotents.
///
/// A failed postcondition would falsify the classification theorem and is
/// reported as a fatal diagnostic.
pub fn conjugator_isn(
    r1: &IsnCrossSection,
    r2: &IsnCrossSection,
    phi: &[usize],
) -> Result<Conjugator> {
    if phi.len() != r1.elements.len() || r1.elements.len() != r2.elements.len() {
        return Err(Error::NotIsomorphism);
    }
    let n = r1.n;
    let op1 = match &r1.partition {
        Some(p) => p.clone(),
        None => recover_partition(r1)?,
    };
    let op2 = match &r2.partition {
        Some(p) => p.clone(),
        None => recover_partition(r2)?,
    };
    let mut theta = vec![0usize; n];
    for block in op1.blocks() {
        for j in 0..block.len() {
            // The block idempotent with ν-label block[j].
            let e = PartialBijection::partial_identity(n, &block[j..])
                .expect("block points valid");
            let ei = r1
                .elements
                .iter()
                .position(|x| *x == e)
                .ok_or_else(|| Error::NotCrossSection("missing block idempotent".into()))?;
            let image = &r2.elements[phi[ei]];
            // ν2 of the image: the earliest point of its domain in the
            // linear order of the block of R2 that contains it.
            let dom = image.dom();
            let b2 = op2
                .blocks()
                .iter()
                .find(|b| dom.iter().all(|x| b.contains(x)))
                .ok_or_else(|| {
                    Error::TheoremFalsified(
                        "image of a block idempotent is not a block idempotent".into(),
                    )
                })?;
            let nu2 = *b2
                .iter()
                .find(|x| dom.contains(x))
                .ok_or(Error::NotIsomorphism)?;
            theta[block[j] - 1] = nu2;
        }
    }
    // θ must be a permutation.
    let mut seen = vec![false; n];
    for &y in &theta {
        if y == 0 || seen[y - 1] {
            return Err(Error::TheoremFalsified("extracted θ is not a bijection".into()));
        }
        seen[y - 1] = true;
    }
    let theta_pb = one_line_to_pb(&theta);
    if theta_is_valid_isn(r1, r2, phi, &theta_pb) {
        return Ok(Conjugator {
            theta,
            vartheta: None,
        });
    }
    // Under-determined labelling: fall back to exhaustive search over S_n
    // and return the lexicographically smallest valid witness.
    for cand in all_permutations(n) {
        let pb = one_line_to_pb(&cand);
        if theta_is_valid_isn(r1, r2, phi, &pb) {
            return Ok(Conjugator {
                theta: cand,
                vartheta: None,
            });
        }
    }
    Err(Error::TheoremFalsified(format!(
        "no conjugating permutation exists for an isomorphism between {} and {}",
        op1, op2
    )))
}

/// Outer projection `{a : (f, a) ∈ R}` of a wreath cross-section, as an
/// `IS_n` cross-section.
pub fn outer_projection(r: &WreathCrossSection) -> IsnCrossSection {
    let mut elements: Vec<PartialBijection> =
        r.elements.iter().map(|p| p.outer().clone()).collect();
    elements.sort();
    elements.dedup();
    IsnCrossSection {
        kind: r.kind,
        n: r.n,
        elements,
        partition: r.provenance.as_ref().map(|p| p.partition.clone()),
    }
}

/// The element `({0}, a)` of a wreath cross-section with given outer part.
fn zero_layer(r: &WreathCrossSection, a: &PartialBijection) -> Result<WreathElement> {
    let mut inner = vec![None; r.n];
    for x in a.dom() {
        inner[x - 1] = Some(PartialBijection::zero(r.m));
    }
    let elem = WreathElement::new(r.m, a.clone(), inner)?;
    if r.elements.contains(&elem) {
        Ok(elem)
    } else {
        Err(Error::NotCrossSection(
            "cross-section is missing a ({0}, a) element".into(),
        ))
    }
}

fn conjugacy_holds(
    r1: &WreathCrossSection,
    r2: &WreathCrossSection,
    phi: &[usize],
    theta: &PartialBijection,
    vartheta: &[PartialBijection],
) -> bool {
    let theta_inv = theta.inverse();
    for (i, p) in r1.elements.iter().enumerate() {
        let q = &r2.elements[phi[i]];
        // Outer condition: b = θ^{-1} a θ.
        let conj = theta_inv
            .compose_unchecked(p.outer())
            .compose_unchecked(theta);
        if *q.outer() != conj {
            return false;
        }
        // Inner condition: g(xθ) = ϑ(x)^{-1} f(x) ϑ(xa).
        for x in p.outer().dom() {
            let xa = p.outer().apply(x).expect("x in dom(a)");
            let xtheta = theta.apply(x).expect("θ total");
            let fx = p.inner_at(x).expect("inner on dom");
            let expected = vartheta[x - 1]
                .inverse()
                .compose_unchecked(fx)
                .compose_unchecked(&vartheta[xa - 1]);
            match q.inner_at(xtheta) {
                Some(g) if *g == expected => {}
                _ => return false,
            }
        }
    }
    true
}

/// Extracts a conjugating pair `(ϑ, θ)` for an isomorphism of wreath
/// cross-sections: `θ` comes from the induced outer isomorphism, `ϑ` from a
/// deterministic search over `S_m`-valued maps; if the extracted `θ` does
/// not extend, the search widens to every outer permutation.
pub fn conjugator_wreath(
    r1: &WreathCrossSection,
    r2: &WreathCrossSection,
    phi: &[usize],
) -> Result<Conjugator> {
    if phi.len() != r1.elements.len() || r1.elements.len() != r2.elements.len() {
        return Err(Error::NotIsomorphism);
    }
    let (m, n) = (r1.m, r1.n);
    let outer1 = outer_projection(r1);
    let outer2 = outer_projection(r2);
    // Induced isomorphism on the ({0}, a) layer.
    let mut phi1 = vec![0usize; outer1.elements.len()];
    for (i, a) in outer1.elements.iter().enumerate() {
        let za = zero_layer(r1, a)?;
        let zi = r1
            .elements
            .iter()
            .position(|x| *x == za)
            .expect("zero layer present");
        let image = &r2.elements[phi[zi]];
        phi1[i] = outer2
            .elements
            .iter()
            .position(|b| b == image.outer())
            .ok_or(Error::NotIsomorphism)?;
    }
    let mut theta_candidates: Vec<Vec<usize>> = Vec::new();
    if let Ok(c) = conjugator_isn(&outer1, &outer2, &phi1) {
        theta_candidates.push(c.theta);
    }
    for p in all_permutations(n) {
        if !theta_candidates.contains(&p) {
            theta_candidates.push(p);
        }
    }
    let inner_perms = all_permutations(m);
    for theta in &theta_candidates {
        let theta_pb = one_line_to_pb(theta);
        // All ϑ assignments, lexicographic.
        let mut choice = vec![0usize; n];
        loop {
            let vartheta: Vec<PartialBijection> = choice
                .iter()
                .map(|&c| one_line_to_pb(&inner_perms[c]))
                .collect();
            if conjugacy_holds(r1, r2, phi, &theta_pb, &vartheta) {
                return Ok(Conjugator {
                    theta: theta.clone(),
                    vartheta: Some(choice.iter().map(|&c| inner_perms[c].clone()).collect()),
                });
            }
            let mut i = n;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                choice[i] += 1;
                if choice[i] < inner_perms.len() {
                    break;
                }
                choice[i] = 0;
            }
            if choice.iter().all(|&c| c == 0) {
                break;
            }
        }
    }
    Err(Error::TheoremFalsified(
        "no conjugating pair (ϑ, θ) exists for a wreath cross-section isomorphism".into(),
    ))
}

/// Closed-form size of `N_e ∩ R` for an idempotent `e = (f_e, a_e)`:
/// the product of `1 + 2^{|dom(f_e(x))|}` over `x ∈ dom(a_e)`.
pub fn count_n_e(e: &WreathElement) -> Result<u128> {
    if !e.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    let mut prod = 1u128;
    for x in e.outer().dom() {
        let fx = e.inner_at(x).expect("inner on dom");
        prod *= 1 + (1u128 << fx.dom_size());
    }
    Ok(prod)
}

/// Direct count of `{ζ ∈ R : e ζ = ζ}`.
pub fn count_n_e_direct(e: &WreathElement, r: &WreathCrossSection) -> Result<usize> {
    if !e.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    Ok(r.elements
        .iter()
        .filter(|z| e.compose_unchecked(z) == **z)
        .count())
}
