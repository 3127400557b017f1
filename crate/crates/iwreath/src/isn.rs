//! The finite inverse symmetric semigroup `IS_n`: partial bijections of
//! `{1..n}` under left-to-right composition.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default bound on the rank for full enumeration.
pub const DEFAULT_MAX_RANK: usize = 4;

/// An injective partial self-map of `{1..n}`.
///
/// Stored as a length-`n` array; index `i - 1` holds the image of point `i`,
/// or `None` when `i` is outside the domain. Equality and ordering are array
/// equality and lexicographic array order, which makes enumeration output
/// deterministic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialBijection {
    n: usize,
    map: Vec<Option<usize>>,
}

impl PartialBijection {
    /// Builds the element of `IS_n` with exactly the given `(point, image)`
    /// assignments.
    pub fn make(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut map = vec![None; n];
        let mut used = vec![false; n];
        for &(x, y) in pairs {
            if x == 0 || x > n {
                return Err(Error::PointOutOfRange { point: x, n });
            }
            if y == 0 || y > n {
                return Err(Error::PointOutOfRange { point: y, n });
            }
            if map[x - 1].is_some() {
                return Err(Error::DuplicateSource(x));
            }
            if used[y - 1] {
                return Err(Error::DuplicateImage(y));
            }
            map[x - 1] = Some(y);
            used[y - 1] = true;
        }
        Ok(PartialBijection { n, map })
    }

    /// The zero of `IS_n`: the element with empty domain.
    pub fn zero(n: usize) -> Self {
        PartialBijection { n, map: vec![None; n] }
    }

    /// The unity of `IS_n`: the identity map on `{1..n}`.
    pub fn unity(n: usize) -> Self {
        PartialBijection {
            n,
            map: (1..=n).map(Some).collect(),
        }
    }

    /// The partial identity `id_A` for a set of points.
    pub fn partial_identity(n: usize, points: &[usize]) -> Result<Self> {
        let pairs: Vec<_> = points.iter().map(|&x| (x, x)).collect();
        Self::make(n, &pairs)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Image of a point, 1-based. `None` when outside the domain.
    pub fn apply(&self, x: usize) -> Option<usize> {
        self.map.get(x.wrapping_sub(1)).copied().flatten()
    }

    /// Domain, in increasing order.
    pub fn dom(&self) -> Vec<usize> {
        (1..=self.n).filter(|&x| self.map[x - 1].is_some()).collect()
    }

    /// Range, in increasing order.
    pub fn ran(&self) -> Vec<usize> {
        let mut r: Vec<usize> = self.map.iter().flatten().copied().collect();
        r.sort_unstable();
        r
    }

    pub fn dom_size(&self) -> usize {
        self.map.iter().filter(|v| v.is_some()).count()
    }

    pub fn is_zero(&self) -> bool {
        self.map.iter().all(|v| v.is_none())
    }

    pub fn is_unity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, v)| *v == Some(i + 1))
    }

    pub fn is_idempotent(&self) -> bool {
        self.compose_unchecked(self) == *self
    }

    /// Whether the element is a total bijection of `{1..n}`.
    pub fn is_permutation(&self) -> bool {
        self.dom_size() == self.n
    }

    /// Left-to-right composition: `x (f g) = (x f) g`, defined where both
    /// applications are.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::RankMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(self.compose_unchecked(other))
    }

    /// Composition when ranks are known equal.
    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        let map = self
            .map
            .iter()
            .map(|v| v.and_then(|y| other.map[y - 1]))
            .collect();
        PartialBijection { n: self.n, map }
    }

    /// The inverse partial bijection: `ran(f) -> dom(f)`.
    pub fn inverse(&self) -> Self {
        let mut map = vec![None; self.n];
        for (i, v) in self.map.iter().enumerate() {
            if let Some(y) = v {
                map[y - 1] = Some(i + 1);
            }
        }
        PartialBijection { n: self.n, map }
    }

    /// Restriction to a set of points: defined on `dom(f) ∩ points`.
    pub fn restrict(&self, points: &[usize]) -> Self {
        let mut map = vec![None; self.n];
        for &x in points {
            if x >= 1 && x <= self.n {
                map[x - 1] = self.map[x - 1];
            }
        }
        PartialBijection { n: self.n, map }
    }

    /// Raw image array, 1-based values, index `i - 1` for point `i`.
    pub fn images(&self) -> &[Option<usize>] {
        &self.map
    }

    pub(crate) fn from_images(n: usize, map: Vec<Option<usize>>) -> Self {
        PartialBijection { n, map }
    }
}

fn check_support(n: usize, points: &[usize]) -> Result<()> {
    let mut seen = vec![false; n];
    for &x in points {
        if x == 0 || x > n {
            return Err(Error::PointOutOfRange { point: x, n });
        }
        if seen[x - 1] {
            return Err(Error::DuplicatePoint(x));
        }
        seen[x - 1] = true;
    }
    Ok(())
}

/// The cycle `(x_1, ..., x_k)`: total on `{1..n}`, cyclic on the support,
/// identity elsewhere.
pub fn cycle(n: usize, points: &[usize]) -> Result<PartialBijection> {
    check_support(n, points)?;
    let mut map: Vec<Option<usize>> = (1..=n).map(Some).collect();
    let k = points.len();
    for i in 0..k {
        map[points[i] - 1] = Some(points[(i + 1) % k]);
    }
    Ok(PartialBijection::from_images(n, map))
}

/// The chain `[x_1, ..., x_k]`: domain `{1..n} \ {x_k}`, shifts along the
/// support, identity off it.
pub fn chain(n: usize, points: &[usize]) -> Result<PartialBijection> {
    if points.is_empty() {
        return Err(Error::EmptySupport);
    }
    check_support(n, points)?;
    let mut map: Vec<Option<usize>> = (1..=n).map(Some).collect();
    let k = points.len();
    for i in 0..k - 1 {
        map[points[i] - 1] = Some(points[i + 1]);
    }
    map[points[k - 1] - 1] = None;
    Ok(PartialBijection::from_images(n, map))
}

/// The open chain `<x_1, ..., x_k>`: domain `{x_1, ..., x_{k-1}}` only.
pub fn open_chain(n: usize, points: &[usize]) -> Result<PartialBijection> {
    if points.is_empty() {
        return Err(Error::EmptySupport);
    }
    check_support(n, points)?;
    let mut map = vec![None; n];
    for i in 0..points.len() - 1 {
        map[points[i] - 1] = Some(points[i + 1]);
    }
    Ok(PartialBijection::from_images(n, map))
}

/// One factor of a chain decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factor {
    Cycle(Vec<usize>),
    Chain(Vec<usize>),
}

/// The unique factorization of an element into cycles and chains with
/// disjoint supports, in canonical form: fixed points are omitted, points
/// outside the domain with no preimage appear as singleton chains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainDecomposition {
    pub n: usize,
    pub cycles: Vec<Vec<usize>>,
    pub chains: Vec<Vec<usize>>,
}

impl ChainDecomposition {
    /// Re-multiplies the factors. Disjoint supports make the order
    /// irrelevant; this is the oracle for decomposition correctness.
    pub fn product(&self) -> PartialBijection {
        let mut acc = PartialBijection::unity(self.n);
        for c in &self.cycles {
            acc = acc.compose_unchecked(&cycle(self.n, c).expect("valid cycle"));
        }
        for c in &self.chains {
            acc = acc.compose_unchecked(&chain(self.n, c).expect("valid chain"));
        }
        acc
    }

    pub fn factors(&self) -> Vec<Factor> {
        let mut out: Vec<Factor> = self.cycles.iter().cloned().map(Factor::Cycle).collect();
        out.extend(self.chains.iter().cloned().map(Factor::Chain));
        out
    }
}

/// Decomposes an element into cycles and chains.
///
/// Chains are the maximal orbit paths `x_1 -> ... -> x_k` with `x_1` outside
/// the range and `x_k` outside the domain; the remaining points of the domain
/// split into cycles, of which the trivial (fixed-point) ones are dropped.
pub fn chain_decompose(f: &PartialBijection) -> ChainDecomposition {
    let n = f.rank();
    let in_ran = {
        let mut v = vec![false; n];
        for y in f.ran() {
            v[y - 1] = true;
        }
        v
    };
    let mut visited = vec![false; n];
    let mut chains = Vec::new();
    // Chain heads: points with no preimage.
    for start in 1..=n {
        if in_ran[start - 1] {
            continue;
        }
        let mut path = vec![start];
        visited[start - 1] = true;
        let mut x = start;
        while let Some(y) = f.apply(x) {
            path.push(y);
            visited[y - 1] = true;
            x = y;
        }
        chains.push(path);
    }
    // Whatever is left inside the domain lies on cycles.
    let mut cycles = Vec::new();
    for start in 1..=n {
        if visited[start - 1] || f.apply(start).is_none() {
            continue;
        }
        let mut orbit = vec![start];
        visited[start - 1] = true;
        let mut x = f.apply(start).expect("point in domain");
        while x != start {
            orbit.push(x);
            visited[x - 1] = true;
            x = f.apply(x).expect("cycle stays in domain");
        }
        if orbit.len() > 1 {
            cycles.push(orbit);
        }
    }
    ChainDecomposition { n, cycles, chains }
}

/// `a R b` iff `dom(a) = dom(b)`.
pub fn green_r(a: &PartialBijection, b: &PartialBijection) -> Result<bool> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch {
            left: a.rank(),
            right: b.rank(),
        });
    }
    Ok(a.map.iter().zip(&b.map).all(|(x, y)| x.is_some() == y.is_some()))
}

/// `a L b` iff `ran(a) = ran(b)`.
pub fn green_l(a: &PartialBijection, b: &PartialBijection) -> Result<bool> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch {
            left: a.rank(),
            right: b.rank(),
        });
    }
    Ok(a.ran() == b.ran())
}

pub fn green_h(a: &PartialBijection, b: &PartialBijection) -> Result<bool> {
    Ok(green_r(a, b)? && green_l(a, b)?)
}

/// All elements of `IS_n`, sorted lexicographically by image array.
pub fn enumerate_is(n: usize) -> Result<Vec<PartialBijection>> {
    enumerate_is_bounded(n, DEFAULT_MAX_RANK)
}

/// Enumeration with an explicit rank bound.
pub fn enumerate_is_bounded(n: usize, bound: usize) -> Result<Vec<PartialBijection>> {
    if n > bound {
        return Err(Error::RankTooLarge {
            requested: n,
            bound,
        });
    }
    let mut out = Vec::new();
    let mut map = vec![None; n];
    let mut used = vec![false; n];
    fn rec(
        pos: usize,
        n: usize,
        map: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        out: &mut Vec<PartialBijection>,
    ) {
        if pos == n {
            out.push(PartialBijection::from_images(n, map.clone()));
            return;
        }
        // None sorts before Some, matching the lexicographic contract.
        map[pos] = None;
        rec(pos + 1, n, map, used, out);
        for y in 1..=n {
            if !used[y - 1] {
                used[y - 1] = true;
                map[pos] = Some(y);
                rec(pos + 1, n, map, used, out);
                used[y - 1] = false;
            }
        }
        map[pos] = None;
    }
    rec(0, n, &mut map, &mut used, &mut out);
    out.sort();
    Ok(out)
}

/// The `2^n` idempotents `id_A`, `A ⊆ {1..n}`, in enumeration order.
pub fn idempotents(n: usize) -> Vec<PartialBijection> {
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0..(1usize << n) {
        let map = (0..n)
            .map(|i| if mask >> i & 1 == 1 { Some(i + 1) } else { None })
            .collect();
        out.push(PartialBijection::from_images(n, map));
    }
    out.sort();
    out
}

/// The natural partial order on idempotents: `e ⪯ f` iff `ef = fe = e`.
pub fn natural_order(e: &PartialBijection, f: &PartialBijection) -> Result<bool> {
    if !e.is_idempotent() || !f.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    let ef = e.compose(f)?;
    let fe = f.compose_unchecked(e);
    Ok(ef == *e && fe == *e)
}

impl fmt::Display for PartialBijection {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "{}", crate::notation::print(self))
    }
}

impl Serialize for PartialBijection {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            n: usize,
            map: &'a [Option<usize>],
        }
        Repr {
            n: self.n,
            map: &self.map,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PartialBijection {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            n: usize,
            map: Vec<Option<usize>>,
        }
        let r = Repr::deserialize(d)?;
        if r.map.len() != r.n {
            return Err(serde::de::Error::custom("map length must equal n"));
        }
        let pairs: Vec<(usize, usize)> = r
            .map
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.map(|y| (i + 1, y)))
            .collect();
        PartialBijection::make(r.n, &pairs).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pb(n: usize, pairs: &[(usize, usize)]) -> PartialBijection {
        PartialBijection::make(n, pairs).unwrap()
    }

    #[test]
    fn make_zero_and_unity() {
        assert_eq!(PartialBijection::make(3, &[]).unwrap(), PartialBijection::zero(3));
        assert_eq!(
            pb(3, &[(1, 1), (2, 2), (3, 3)]),
            PartialBijection::unity(3)
        );
    }

    #[test]
    fn make_rejects_injectivity_violation() {
        assert_eq!(
            PartialBijection::make(3, &[(1, 2), (2, 2)]),
            Err(Error::DuplicateImage(2))
        );
        assert_eq!(
            PartialBijection::make(3, &[(1, 2), (1, 3)]),
            Err(Error::DuplicateSource(1))
        );
        assert_eq!(
            PartialBijection::make(3, &[(4, 1)]),
            Err(Error::PointOutOfRange { point: 4, n: 3 })
        );
    }

    #[test]
    fn compose_follows_domain_formula() {
        let f = pb(3, &[(1, 2), (3, 3)]);
        let g = pb(3, &[(1, 1), (2, 3)]);
        assert_eq!(f.compose(&g).unwrap(), pb(3, &[(1, 3)]));
    }

    #[test]
    fn compose_units() {
        for a in enumerate_is(3).unwrap() {
            let one = PartialBijection::unity(3);
            let zero = PartialBijection::zero(3);
            assert_eq!(one.compose(&a).unwrap(), a);
            assert_eq!(a.compose(&one).unwrap(), a);
            assert_eq!(zero.compose(&a).unwrap(), zero);
            assert_eq!(a.compose(&zero).unwrap(), zero);
        }
    }

    #[test]
    fn compose_rank_mismatch() {
        let f = PartialBijection::zero(2);
        let g = PartialBijection::zero(3);
        assert_eq!(f.compose(&g), Err(Error::RankMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn inverse_basic() {
        assert_eq!(pb(3, &[(1, 3)]).inverse(), pb(3, &[(3, 1)]));
        assert_eq!(PartialBijection::unity(4).inverse(), PartialBijection::unity(4));
        let f = pb(3, &[(1, 2), (2, 3)]);
        assert_eq!(f.inverse(), pb(3, &[(2, 1), (3, 2)]));
        assert_eq!(f.compose(&f.inverse()).unwrap().compose(&f).unwrap(), f);
    }

    #[test]
    fn element_families() {
        assert_eq!(chain(3, &[1, 2]).unwrap(), pb(3, &[(1, 2), (3, 3)]));
        assert_eq!(
            cycle(3, &[1, 2]).unwrap(),
            pb(3, &[(1, 2), (2, 1), (3, 3)])
        );
        assert_eq!(
            open_chain(3, &[1, 2, 3]).unwrap(),
            pb(3, &[(1, 2), (2, 3)])
        );
        assert_eq!(chain(3, &[]), Err(Error::EmptySupport));
        assert_eq!(cycle(3, &[1, 1]), Err(Error::DuplicatePoint(1)));
    }

    #[test]
    fn decompose_examples() {
        let f = pb(3, &[(1, 2), (2, 1)]);
        let d = chain_decompose(&f);
        assert_eq!(d.cycles, vec![vec![1, 2]]);
        assert_eq!(d.chains, vec![vec![3]]);
        assert_eq!(d.product(), f);

        let one = PartialBijection::unity(4);
        let d = chain_decompose(&one);
        assert!(d.cycles.is_empty() && d.chains.is_empty());

        let f = pb(3, &[(1, 3)]);
        let d = chain_decompose(&f);
        assert_eq!(d.product(), f);
        assert_eq!(d.chains, vec![vec![1, 3], vec![2]]);
    }

    #[test]
    fn decompose_round_trip_exhaustive() {
        for n in 0..=4 {
            for f in enumerate_is(n).unwrap() {
                assert_eq!(chain_decompose(&f).product(), f, "n={n} f={f:?}");
            }
        }
    }

    #[test]
    fn green_relations() {
        let a = pb(2, &[(1, 2)]);
        let b = pb(2, &[(1, 1)]);
        assert!(green_r(&a, &b).unwrap());
        assert!(!green_l(&a, &b).unwrap());
        assert!(green_r(&a, &a).unwrap());
        let zero = PartialBijection::zero(2);
        for x in enumerate_is(2).unwrap() {
            assert_eq!(green_r(&zero, &x).unwrap(), x.is_zero());
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_is(1).unwrap().len(), 2);
        assert_eq!(enumerate_is(2).unwrap().len(), 7);
        assert_eq!(enumerate_is(3).unwrap().len(), 34);
        assert_eq!(enumerate_is(4).unwrap().len(), 209);
        assert!(matches!(
            enumerate_is(9),
            Err(Error::RankTooLarge { requested: 9, bound: 4 })
        ));
        assert_eq!(enumerate_is_bounded(5, 5).unwrap().len(), 1546);
    }

    #[test]
    fn enumeration_has_no_duplicates_and_is_sorted() {
        let all = enumerate_is(3).unwrap();
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(all, sorted);
    }

    #[test]
    fn idempotents_and_order() {
        assert_eq!(idempotents(2).len(), 4);
        let zero = PartialBijection::zero(2);
        for e in idempotents(2) {
            assert!(natural_order(&zero, &e).unwrap());
        }
        let e1 = PartialBijection::partial_identity(2, &[1]).unwrap();
        let e12 = PartialBijection::unity(2);
        assert!(natural_order(&e1, &e12).unwrap());
        assert!(!natural_order(&e12, &e1).unwrap());
        let a = pb(2, &[(1, 2)]);
        assert_eq!(natural_order(&a, &e12), Err(Error::NotIdempotent));
    }

    #[test]
    fn inverse_semigroup_axioms_exhaustive() {
        for n in 0..=3 {
            let all = enumerate_is(n).unwrap();
            for a in &all {
                let ai = a.inverse();
                assert_eq!(a.compose(&ai).unwrap().compose(a).unwrap(), *a);
                for b in &all {
                    assert_eq!(
                        a.compose(b).unwrap().inverse(),
                        b.inverse().compose(&a.inverse()).unwrap()
                    );
                }
            }
            let idems = idempotents(n);
            for e in &idems {
                for f in &idems {
                    assert_eq!(e.compose(f).unwrap(), f.compose(e).unwrap());
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let f = pb(3, &[(1, 2), (3, 1)]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"n":3,"map":[2,null,1]}"#);
        let back: PartialBijection = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<PartialBijection>(r#"{"n":2,"map":[2,2]}"#).is_err());
    }
}
