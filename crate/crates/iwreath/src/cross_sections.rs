//! R- and L-cross-sections: the ordered-partition family in `IS_n` and the
//! glued family in `IS_m ≀_p IS_n` built from per-block component
//! cross-sections.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::isn::{self, PartialBijection};
use crate::semigroup;
use crate::wreath::{self, InnerMap, WreathElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GreenKind {
    R,
    L,
}

/// A set partition of `{1..n}` with a linear order on every block.
/// Blocks are kept sorted by minimum element; within a block, the listed
/// sequence is the linear order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrderedPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl OrderedPartition {
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &x in block {
                if x == 0 || x > n {
                    return Err(Error::InvalidPartition(format!(
                        "point {x} out of range 1..={n}"
                    )));
                }
                if seen[x - 1] {
                    return Err(Error::InvalidPartition(format!("point {x} repeated")));
                }
                seen[x - 1] = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::InvalidPartition("blocks do not cover {1..n}".into()));
        }
        blocks.sort_by_key(|b| *b.iter().min().expect("non-empty block"));
        Ok(OrderedPartition { n, blocks })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Index of the block containing a point.
    pub fn block_of(&self, x: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(&x))
            .expect("partition covers all points")
    }

    /// `u_k` = number of blocks of size `k`, for `k = 1..n`.
    pub fn type_vector(&self) -> Vec<usize> {
        let mut u = vec![0; self.n];
        for b in &self.blocks {
            u[b.len() - 1] += 1;
        }
        u
    }

    /// Parses the text form `[1<2][3]`.
    pub fn parse(input: &str, n: usize) -> Result<Self> {
        let s = input.trim();
        let mut blocks = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let rest2 = rest.trim_start();
            if !rest2.starts_with('[') {
                return Err(Error::Parse(format!("expected '[' in partition '{s}'")));
            }
            let end = rest2
                .find(']')
                .ok_or_else(|| Error::Parse(format!("unclosed '[' in partition '{s}'")))?;
            let body = &rest2[1..end];
            let block: Vec<usize> = body
                .split('<')
                .map(str::trim)
                .filter(|p| !p.is_empty())
                .map(|p| {
                    p.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point '{p}'")))
                })
                .collect::<Result<_>>()?;
            blocks.push(block);
            rest = &rest2[end + 1..];
        }
        OrderedPartition::new(n, blocks)
    }
}

impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in &self.blocks {
            let body = block
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join("<");
            write!(f, "[{body}]")?;
        }
        Ok(())
    }
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    // Restricted-growth assignment of each point to a block.
    fn rec(x: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if x > n {
            out.push(blocks.clone());
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(x);
            rec(x + 1, n, blocks, out);
            blocks[i].pop();
        }
        blocks.push(vec![x]);
        rec(x + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    rec(1, n, &mut Vec::new(), &mut out);
    out
}

/// Every ordered partition of `{1..n}`: every set partition with every
/// choice of linear orders on the blocks, in a fixed deterministic order.
pub fn all_ordered_partitions(n: usize) -> Vec<OrderedPartition> {
    let mut out = Vec::new();
    for partition in set_partitions(n) {
        let ordered_per_block: Vec<Vec<Vec<usize>>> =
            partition.iter().map(|b| permutations(b)).collect();
        let mut choice = vec![0usize; partition.len()];
        loop {
            let blocks: Vec<Vec<usize>> = choice
                .iter()
                .zip(&ordered_per_block)
                .map(|(&c, opts)| opts[c].clone())
                .collect();
            out.push(OrderedPartition::new(n, blocks).expect("valid by construction"));
            let mut i = choice.len();
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                choice[i] += 1;
                if choice[i] < ordered_per_block[i].len() {
                    break;
                }
                choice[i] = 0;
            }
            if choice.iter().all(|&c| c == 0) {
                break;
            }
        }
    }
    out.sort();
    out
}

/// An R- or L-cross-section of `IS_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsnCrossSection {
    pub kind: GreenKind,
    pub n: usize,
    /// Elements in enumeration order.
    pub elements: Vec<PartialBijection>,
    /// The defining ordered partition, when the section was constructed.
    pub partition: Option<OrderedPartition>,
}

/// A cross-section of `IS_m ≀_p IS_n` with its construction data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WreathCrossSection {
    pub kind: GreenKind,
    pub m: usize,
    pub n: usize,
    pub elements: Vec<WreathElement>,
    pub provenance: Option<WreathProvenance>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WreathProvenance {
    pub partition: OrderedPartition,
    /// One `IS_m` R-cross-section per block, in block order.
    pub components: Vec<IsnCrossSection>,
}

/// The unique element of the cross-section `R(M⃗_1, ..., M⃗_s)` with domain
/// `A`: within each block, the chosen points map order-preservingly onto the
/// top of the block's linear order.
pub fn direct_element(op: &OrderedPartition, domain: &[usize]) -> PartialBijection {
    let n = op.rank();
    let mut pairs = Vec::new();
    for block in op.blocks() {
        let t = block.len();
        let chosen: Vec<usize> = block
            .iter()
            .enumerate()
            .filter(|(_, x)| domain.contains(x))
            .map(|(j, _)| j)
            .collect();
        let k = chosen.len();
        for (l, &j) in chosen.iter().enumerate() {
            pairs.push((block[j], block[t - k + l]));
        }
    }
    PartialBijection::make(n, &pairs).expect("blockwise rule is injective")
}

/// Direct construction via the blockwise rule: one element per
/// subset of `{1..n}`.
pub fn build_r_cross_section(op: &OrderedPartition) -> IsnCrossSection {
    let n = op.rank();
    let mut elements = Vec::with_capacity(1 << n);
    for mask in 0..(1usize << n) {
        let domain: Vec<usize> = (1..=n).filter(|&x| mask >> (x - 1) & 1 == 1).collect();
        elements.push(direct_element(op, &domain));
    }
    elements.sort();
    IsnCrossSection {
        kind: GreenKind::R,
        n,
        elements,
        partition: Some(op.clone()),
    }
}

/// Construction via generators: the closure of the chains
/// `a_{i,j} = [m_1^i, ..., m_j^i]` with the unity adjoined.
pub fn build_r_cross_section_generated(op: &OrderedPartition) -> IsnCrossSection {
    let n = op.rank();
    let mut gens = vec![PartialBijection::unity(n)];
    for block in op.blocks() {
        for j in 1..=block.len() {
            gens.push(isn::chain(n, &block[..j]).expect("block points are valid"));
        }
    }
    let elements = semigroup::closure(&gens, |a, b| a.compose_unchecked(b));
    IsnCrossSection {
        kind: GreenKind::R,
        n,
        elements,
        partition: Some(op.clone()),
    }
}

/// The L-cross-section obtained by inverting the R-construction elementwise.
pub fn build_l_cross_section(op: &OrderedPartition) -> IsnCrossSection {
    let r = build_r_cross_section(op);
    let mut elements: Vec<PartialBijection> = r.elements.iter().map(|a| a.inverse()).collect();
    elements.sort();
    IsnCrossSection {
        kind: GreenKind::L,
        n: r.n,
        elements,
        partition: Some(op.clone()),
    }
}

/// Checks that a candidate set is a cross-section: a subsemigroup of the
/// ambient hitting every class of the given relation exactly once.
/// Returns the first violated clause with a witness.
pub fn validate_generic<E, FM, FE>(
    cand: &[E],
    ambient: &[E],
    mul: FM,
    related: FE,
) -> std::result::Result<(), String>
where
    E: Clone + Eq + fmt::Debug,
    FM: Fn(&E, &E) -> E,
    FE: Fn(&E, &E) -> bool,
{
    for x in cand {
        if !ambient.contains(x) {
            return Err(format!("element {x:?} is not in the ambient semigroup"));
        }
    }
    for x in cand {
        for y in cand {
            let p = mul(x, y);
            if !cand.contains(&p) {
                return Err(format!("not closed: {x:?} * {y:?} = {p:?} is outside the set"));
            }
        }
    }
    // Partition the ambient into classes and count hits.
    let mut assigned = vec![false; ambient.len()];
    for i in 0..ambient.len() {
        if assigned[i] {
            continue;
        }
        let mut class = vec![i];
        assigned[i] = true;
        for j in i + 1..ambient.len() {
            if !assigned[j] && related(&ambient[i], &ambient[j]) {
                class.push(j);
                assigned[j] = true;
            }
        }
        let hits = class
            .iter()
            .filter(|&&j| cand.contains(&ambient[j]))
            .count();
        if hits != 1 {
            return Err(format!(
                "class of {:?} contains {hits} candidate elements, expected exactly 1",
                ambient[i]
            ));
        }
    }
    Ok(())
}

/// Validates a candidate set of `IS_n` elements against the full semigroup.
pub fn validate_isn_cross_section(
    cand: &[PartialBijection],
    n: usize,
    kind: GreenKind,
) -> Result<std::result::Result<(), String>> {
    let ambient = isn::enumerate_is_bounded(n, n).map_err(|_| Error::AmbientTooLarge)?;
    Ok(validate_generic(
        cand,
        &ambient,
        |a, b| a.compose_unchecked(b),
        |a, b| match kind {
            GreenKind::R => isn::green_r(a, b).expect("equal ranks"),
            GreenKind::L => isn::green_l(a, b).expect("equal ranks"),
        },
    ))
}

/// Validates a candidate set of wreath elements against the full product.
pub fn validate_wreath_cross_section(
    cand: &[WreathElement],
    m: usize,
    n: usize,
    kind: GreenKind,
) -> Result<std::result::Result<(), String>> {
    let ambient =
        wreath::enumerate_wreath_bounded(m, n, m, n).map_err(|_| Error::AmbientTooLarge)?;
    Ok(validate_generic(
        cand,
        &ambient,
        |a, b| a.compose_unchecked(b),
        |a, b| match kind {
            GreenKind::R => wreath::w_green_r(a, b).expect("equal ranks"),
            GreenKind::L => wreath::w_green_l(a, b).expect("equal ranks"),
        },
    ))
}

/// The glued construction: over each block the outer part runs through
/// `R(M⃗_i)` and the inner values run through the block's component
/// cross-section.
pub fn build_wreath_r_cross_section(
    op: &OrderedPartition,
    comps: &[IsnCrossSection],
) -> Result<WreathCrossSection> {
    let n = op.rank();
    if comps.len() != op.blocks().len() {
        return Err(Error::InvalidPartition(format!(
            "expected {} component cross-sections, got {}",
            op.blocks().len(),
            comps.len()
        )));
    }
    let m = comps
        .first()
        .map(|c| c.n)
        .ok_or_else(|| Error::InvalidPartition("no blocks".into()))?;
    for (i, c) in comps.iter().enumerate() {
        if c.n != m || c.kind != GreenKind::R {
            return Err(Error::ComponentNotCrossSection(i));
        }
        if validate_isn_cross_section(&c.elements, m, GreenKind::R)?.is_err() {
            return Err(Error::ComponentNotCrossSection(i));
        }
    }
    let outer_section = build_r_cross_section(op);
    let mut elements = Vec::new();
    for a in &outer_section.elements {
        let dom = a.dom();
        let pools: Vec<&[PartialBijection]> = dom
            .iter()
            .map(|&x| comps[op.block_of(x)].elements.as_slice())
            .collect();
        let mut choice = vec![0usize; dom.len()];
        loop {
            let mut inner: InnerMap = vec![None; n];
            for (i, &x) in dom.iter().enumerate() {
                inner[x - 1] = Some(pools[i][choice[i]].clone());
            }
            elements.push(WreathElement::new(m, a.clone(), inner)?);
            let mut i = choice.len();
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                choice[i] += 1;
                if choice[i] < pools[i].len() {
                    break;
                }
                choice[i] = 0;
            }
            if choice.iter().all(|&c| c == 0) {
                break;
            }
        }
    }
    elements.sort();
    Ok(WreathCrossSection {
        kind: GreenKind::R,
        m,
        n,
        elements,
        provenance: Some(WreathProvenance {
            partition: op.clone(),
            components: comps.to_vec(),
        }),
    })
}

/// Elementwise inverse of the R-construction.
pub fn build_wreath_l_cross_section(
    op: &OrderedPartition,
    comps: &[IsnCrossSection],
) -> Result<WreathCrossSection> {
    let r = build_wreath_r_cross_section(op, comps)?;
    let mut elements: Vec<WreathElement> = r.elements.iter().map(|p| p.inverse()).collect();
    elements.sort();
    Ok(WreathCrossSection {
        kind: GreenKind::L,
        m: r.m,
        n: r.n,
        elements,
        provenance: r.provenance,
    })
}

/// The type `(u_1, ..., u_n)` of an `IS_n` cross-section: `u_k` counts the
/// blocks of size `k` of its defining partition, recovering the partition
/// from the elements when no provenance is attached.
pub fn type_vector(cs: &IsnCrossSection) -> Result<Vec<usize>> {
    let op = match &cs.partition {
        Some(op) => op.clone(),
        None => crate::structure::recover_partition(cs)?,
    };
    Ok(op.type_vector())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(n: usize, blocks: &[&[usize]]) -> OrderedPartition {
        OrderedPartition::new(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    fn pb(n: usize, pairs: &[(usize, usize)]) -> PartialBijection {
        PartialBijection::make(n, pairs).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(OrderedPartition::new(3, vec![vec![1, 2], vec![3]]).is_ok());
        assert!(OrderedPartition::new(3, vec![vec![1, 2]]).is_err());
        assert!(OrderedPartition::new(3, vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(OrderedPartition::new(3, vec![vec![1, 2, 3], vec![]]).is_err());
        assert!(OrderedPartition::new(2, vec![vec![1, 3]]).is_err());
    }

    #[test]
    fn partition_text_form() {
        let p = op(3, &[&[3], &[2, 1]]);
        assert_eq!(p.to_string(), "[2<1][3]");
        assert_eq!(OrderedPartition::parse("[2<1][3]", 3).unwrap(), p);
        assert!(OrderedPartition::parse("[1<2", 3).is_err());
    }

    #[test]
    fn ordered_partition_counts() {
        assert_eq!(all_ordered_partitions(1).len(), 1);
        assert_eq!(all_ordered_partitions(2).len(), 3);
        assert_eq!(all_ordered_partitions(3).len(), 13);
        assert_eq!(all_ordered_partitions(4).len(), 73);
    }

    #[test]
    fn r_cross_section_small_cases() {
        let cs = build_r_cross_section(&op(1, &[&[1]]));
        assert_eq!(
            cs.elements,
            vec![PartialBijection::zero(1), PartialBijection::unity(1)]
        );

        let cs = build_r_cross_section(&op(2, &[&[1, 2]]));
        let expected = vec![
            PartialBijection::zero(2),
            pb(2, &[(1, 2)]),
            pb(2, &[(2, 2)]),
            PartialBijection::unity(2),
        ];
        let mut expected = expected;
        expected.sort();
        assert_eq!(cs.elements, expected);

        let cs = build_r_cross_section(&op(3, &[&[1, 2], &[3]]));
        assert_eq!(cs.elements.len(), 8);
        assert!(cs.elements.contains(&pb(3, &[(1, 2), (3, 3)])));
    }

    #[test]
    fn generated_equals_direct() {
        for n in 1..=4 {
            for p in all_ordered_partitions(n) {
                assert_eq!(
                    build_r_cross_section(&p).elements,
                    build_r_cross_section_generated(&p).elements,
                    "partition {p}"
                );
            }
        }
    }

    #[test]
    fn constructed_sections_validate() {
        for n in 1..=3 {
            for p in all_ordered_partitions(n) {
                let r = build_r_cross_section(&p);
                assert_eq!(r.elements.len(), 1 << n);
                assert!(validate_isn_cross_section(&r.elements, n, GreenKind::R)
                    .unwrap()
                    .is_ok());
                let l = build_l_cross_section(&p);
                assert!(validate_isn_cross_section(&l.elements, n, GreenKind::L)
                    .unwrap()
                    .is_ok());
                // L-section is the elementwise inverse of the R-section.
                let mut inv: Vec<_> = r.elements.iter().map(|a| a.inverse()).collect();
                inv.sort();
                assert_eq!(l.elements, inv);
            }
        }
    }

    #[test]
    fn l_cross_section_example() {
        let l = build_l_cross_section(&op(2, &[&[1, 2]]));
        let mut expected = vec![
            PartialBijection::zero(2),
            pb(2, &[(2, 1)]),
            pb(2, &[(2, 2)]),
            PartialBijection::unity(2),
        ];
        expected.sort();
        assert_eq!(l.elements, expected);
    }

    #[test]
    fn validator_diagnoses_closure_failure() {
        let cand = vec![
            PartialBijection::zero(2),
            pb(2, &[(1, 2)]),
            pb(2, &[(2, 1)]),
            PartialBijection::unity(2),
        ];
        let res = validate_isn_cross_section(&cand, 2, GreenKind::R).unwrap();
        assert!(res.is_err());
        assert!(res.unwrap_err().contains("not closed"));
    }

    #[test]
    fn idempotent_semilattice_is_a_cross_section() {
        let idems = isn::idempotents(2);
        assert!(validate_isn_cross_section(&idems, 2, GreenKind::R)
            .unwrap()
            .is_ok());
        assert!(validate_isn_cross_section(&idems, 2, GreenKind::L)
            .unwrap()
            .is_ok());
    }

    #[test]
    fn wreath_cross_section_m1_n1() {
        let p = op(1, &[&[1]]);
        let comp = build_r_cross_section(&p);
        let cs = build_wreath_r_cross_section(&p, &[comp.clone()]).unwrap();
        assert_eq!(cs.elements.len(), 3);
        assert!(cs.elements.contains(&WreathElement::zero(1, 1)));
        assert!(cs.elements.contains(&WreathElement::identity(1, 1)));
        let l = build_wreath_l_cross_section(&p, &[comp]).unwrap();
        assert_eq!(l.elements.len(), 3);
    }

    #[test]
    fn wreath_cross_section_2_2_validates() {
        let p = op(2, &[&[1, 2]]);
        let comp = build_r_cross_section(&op(2, &[&[1, 2]]));
        let cs = build_wreath_r_cross_section(&p, &[comp]).unwrap();
        assert_eq!(cs.elements.len(), 25);
        assert!(validate_wreath_cross_section(&cs.elements, 2, 2, GreenKind::R)
            .unwrap()
            .is_ok());
    }

    #[test]
    fn wreath_builder_rejects_bad_component() {
        let p = op(2, &[&[1, 2]]);
        let bad = IsnCrossSection {
            kind: GreenKind::R,
            n: 2,
            elements: vec![PartialBijection::zero(2)],
            partition: None,
        };
        assert_eq!(
            build_wreath_r_cross_section(&p, &[bad]).unwrap_err(),
            Error::ComponentNotCrossSection(0)
        );
    }

    #[test]
    fn type_vectors() {
        let cs = build_r_cross_section(&op(3, &[&[1, 2], &[3]]));
        assert_eq!(type_vector(&cs).unwrap(), vec![1, 1, 0]);
        let cs = build_r_cross_section(&op(3, &[&[1], &[2], &[3]]));
        assert_eq!(type_vector(&cs).unwrap(), vec![3, 0, 0]);
        let cs = build_r_cross_section(&op(3, &[&[1, 2, 3]]));
        assert_eq!(type_vector(&cs).unwrap(), vec![0, 0, 1]);
    }

    #[test]
    fn projection_onto_block_is_component_product() {
        // Restricting the glued section to a block gives exactly the
        // component choices over that block's outer section.
        let p = op(3, &[&[1, 2], &[3]]);
        let c1 = build_r_cross_section(&op(2, &[&[2, 1]]));
        let c2 = build_r_cross_section(&op(2, &[&[1], &[2]]));
        let cs = build_wreath_r_cross_section(&p, &[c1.clone(), c2.clone()]).unwrap();
        for (bi, block) in p.blocks().iter().enumerate() {
            let comp = [&c1, &c2][bi];
            let mut restricted: Vec<WreathElement> = cs
                .elements
                .iter()
                .map(|e| {
                    let a = e.outer().restrict(block);
                    let mut inner: InnerMap = vec![None; p.rank()];
                    for &x in block {
                        if a.apply(x).is_some() {
                            inner[x - 1] = e.inner_at(x).cloned();
                        }
                    }
                    WreathElement::new(2, a, inner).unwrap()
                })
                .collect();
            restricted.sort();
            restricted.dedup();
            // One element per (A ⊆ block, inner domains): (1+2^m)^{|block|}.
            assert_eq!(restricted.len(), 5usize.pow(block.len() as u32));
            // Every restricted element draws its inner values from the component.
            for e in &restricted {
                for x in e.outer().dom() {
                    assert!(comp.elements.contains(e.inner_at(x).unwrap()));
                }
            }
        }
    }

    #[test]
    fn cross_section_json_round_trip() {
        let p = op(2, &[&[1, 2]]);
        let cs = build_r_cross_section(&p);
        let s = serde_json::to_string(&cs).unwrap();
        let back: IsnCrossSection = serde_json::from_str(&s).unwrap();
        assert_eq!(back, cs);
    }
}
