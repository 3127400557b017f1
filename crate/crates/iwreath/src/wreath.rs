//! The partial wreath product `IS_m ≀_p IS_n`: pairs `(f, a)` with
//! `a ∈ IS_n` and `f` a map from `dom(a)` into `IS_m`, multiplied by
//! `(f, a)(g, b) = (f · g^a, ab)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::isn::{self, PartialBijection};

/// Default bounds for full wreath enumeration.
pub const DEFAULT_MAX_INNER: usize = 2;
pub const DEFAULT_MAX_OUTER: usize = 3;

/// A partial function from `{1..n}` into `IS_m`, stored as a length-`n`
/// array of optional inner elements.
pub type InnerMap = Vec<Option<PartialBijection>>;

/// An element `(f, a)` of `IS_m ≀_p IS_n`. The inner map is defined exactly
/// on `dom(a)`; this is enforced at construction so that equality is plain
/// component-wise equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WreathElement {
    m: usize,
    n: usize,
    outer: PartialBijection,
    inner: InnerMap,
}

impl WreathElement {
    pub fn new(m: usize, outer: PartialBijection, inner: InnerMap) -> Result<Self> {
        let n = outer.rank();
        if inner.len() != n {
            return Err(Error::RankMismatch {
                left: inner.len(),
                right: n,
            });
        }
        for x in 1..=n {
            match (&inner[x - 1], outer.apply(x)) {
                (Some(v), Some(_)) => {
                    if v.rank() != m {
                        return Err(Error::RankMismatch {
                            left: v.rank(),
                            right: m,
                        });
                    }
                }
                (None, None) => {}
                _ => {
                    return Err(Error::InvalidPartition(format!(
                        "inner map must be defined exactly on dom(a); mismatch at point {x}"
                    )))
                }
            }
        }
        Ok(WreathElement { m, n, outer, inner })
    }

    /// The zero: empty inner map over the zero of `IS_n`.
    pub fn zero(m: usize, n: usize) -> Self {
        WreathElement {
            m,
            n,
            outer: PartialBijection::zero(n),
            inner: vec![None; n],
        }
    }

    /// The identity: the unity of `IS_m` at every point, over the unity of
    /// `IS_n`.
    pub fn identity(m: usize, n: usize) -> Self {
        WreathElement {
            m,
            n,
            outer: PartialBijection::unity(n),
            inner: vec![Some(PartialBijection::unity(m)); n],
        }
    }

    pub fn inner_rank(&self) -> usize {
        self.m
    }

    pub fn outer_rank(&self) -> usize {
        self.n
    }

    pub fn outer(&self) -> &PartialBijection {
        &self.outer
    }

    pub fn inner(&self) -> &InnerMap {
        &self.inner
    }

    pub fn inner_at(&self, x: usize) -> Option<&PartialBijection> {
        self.inner.get(x.wrapping_sub(1)).and_then(|v| v.as_ref())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.m != other.m {
            return Err(Error::RankMismatch {
                left: self.m,
                right: other.m,
            });
        }
        if self.n != other.n {
            return Err(Error::RankMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// `(f, a)(g, b) = (f · g^a, ab)`, with the pointwise product restricted
    /// to `dom(ab)`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        let outer = self.outer.compose_unchecked(&other.outer);
        let mut inner: InnerMap = vec![None; self.n];
        for x in 1..=self.n {
            if outer.apply(x).is_none() {
                continue;
            }
            let xa = self.outer.apply(x).expect("x in dom(ab) implies x in dom(a)");
            let fx = self.inner[x - 1].as_ref().expect("inner defined on dom(a)");
            let gxa = other.inner[xa - 1]
                .as_ref()
                .expect("xa in dom(b) since x in dom(ab)");
            inner[x - 1] = Some(fx.compose_unchecked(gxa));
        }
        WreathElement {
            m: self.m,
            n: self.n,
            outer,
            inner,
        }
    }

    /// The inverse: outer part `a^{-1}`, inner value at `y` equal to
    /// `f(y a^{-1})^{-1}`.
    pub fn inverse(&self) -> Self {
        let outer = self.outer.inverse();
        let mut inner: InnerMap = vec![None; self.n];
        for y in 1..=self.n {
            if let Some(x) = outer.apply(y) {
                inner[y - 1] = Some(
                    self.inner[x - 1]
                        .as_ref()
                        .expect("x in dom(a)")
                        .inverse(),
                );
            }
        }
        WreathElement {
            m: self.m,
            n: self.n,
            outer,
            inner,
        }
    }

    pub fn is_idempotent(&self) -> bool {
        self.compose_unchecked(self) == *self
    }
}

/// The superscript action `f^a`: `(f^a)(x) = f(xa)` on
/// `{x ∈ dom(a) : xa ∈ dom(f)}`.
pub fn act_super(f: &InnerMap, a: &PartialBijection) -> Result<InnerMap> {
    if f.len() != a.rank() {
        return Err(Error::RankMismatch {
            left: f.len(),
            right: a.rank(),
        });
    }
    let mut out: InnerMap = vec![None; f.len()];
    for x in 1..=a.rank() {
        if let Some(xa) = a.apply(x) {
            out[x - 1] = f[xa - 1].clone();
        }
    }
    Ok(out)
}

/// Green's R on the wreath product: equal outer domains and pointwise
/// R-related inner values.
pub fn w_green_r(p: &WreathElement, q: &WreathElement) -> Result<bool> {
    p.check_compatible(q)?;
    if !isn::green_r(p.outer(), q.outer())? {
        return Ok(false);
    }
    for z in p.outer().dom() {
        let fz = p.inner_at(z).expect("z in dom");
        let gz = q.inner_at(z).expect("equal domains");
        if !isn::green_r(fz, gz)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Green's L on the wreath product: equal outer ranges and, for every
/// `z ∈ ran(a)`, `g^{b^{-1}}(z) L f^{a^{-1}}(z)`.
pub fn w_green_l(p: &WreathElement, q: &WreathElement) -> Result<bool> {
    p.check_compatible(q)?;
    let (a, b) = (p.outer(), q.outer());
    if a.ran() != b.ran() {
        return Ok(false);
    }
    let fa = act_super(p.inner(), &a.inverse())?;
    let gb = act_super(q.inner(), &b.inverse())?;
    for z in a.ran() {
        let fz = fa[z - 1].as_ref().expect("z in ran(a) = dom(a^{-1})");
        let gz = gb[z - 1].as_ref().expect("z in ran(b)");
        if !isn::green_l(gz, fz)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn w_green_h(p: &WreathElement, q: &WreathElement) -> Result<bool> {
    Ok(w_green_r(p, q)? && w_green_l(p, q)?)
}

/// All elements of `IS_m ≀_p IS_n`, ordered by outer element first, then by
/// the inner assignments lexicographically over the `IS_m` enumeration order.
pub fn enumerate_wreath(m: usize, n: usize) -> Result<Vec<WreathElement>> {
    enumerate_wreath_bounded(m, n, DEFAULT_MAX_INNER, DEFAULT_MAX_OUTER)
}

pub fn enumerate_wreath_bounded(
    m: usize,
    n: usize,
    max_m: usize,
    max_n: usize,
) -> Result<Vec<WreathElement>> {
    if m > max_m {
        return Err(Error::RankTooLarge {
            requested: m,
            bound: max_m,
        });
    }
    if n > max_n {
        return Err(Error::RankTooLarge {
            requested: n,
            bound: max_n,
        });
    }
    let inner_pool = isn::enumerate_is_bounded(m, m)?;
    let outers = isn::enumerate_is_bounded(n, n)?;
    let mut out = Vec::new();
    for a in &outers {
        let dom = a.dom();
        let mut choice = vec![0usize; dom.len()];
        loop {
            let mut inner: InnerMap = vec![None; n];
            for (i, &x) in dom.iter().enumerate() {
                inner[x - 1] = Some(inner_pool[choice[i]].clone());
            }
            out.push(WreathElement {
                m,
                n,
                outer: a.clone(),
                inner,
            });
            // Next assignment, rightmost position fastest.
            let mut i = dom.len();
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                choice[i] += 1;
                if choice[i] < inner_pool.len() {
                    break;
                }
                choice[i] = 0;
            }
            if choice.iter().all(|&c| c == 0) {
                break;
            }
        }
    }
    Ok(out)
}

/// Closed-form idempotent count `(1 + 2^m)^n`.
pub fn count_wreath_idempotents(m: usize, n: usize) -> u128 {
    (1u128 + (1u128 << m)).pow(n as u32)
}

#[derive(Serialize, Deserialize)]
struct WreathRepr {
    m: usize,
    n: usize,
    a: PartialBijection,
    f: Vec<Option<PartialBijection>>,
}

impl Serialize for WreathElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WreathRepr {
            m: self.m,
            n: self.n,
            a: self.outer.clone(),
            f: self.inner.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WreathElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = WreathRepr::deserialize(d)?;
        if r.a.rank() != r.n {
            return Err(serde::de::Error::custom("outer rank must equal n"));
        }
        WreathElement::new(r.m, r.a, r.f).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pb(n: usize, pairs: &[(usize, usize)]) -> PartialBijection {
        PartialBijection::make(n, pairs).unwrap()
    }

    #[test]
    fn invariant_enforced() {
        // Inner value where the outer map is undefined.
        let bad = WreathElement::new(
            2,
            PartialBijection::zero(2),
            vec![Some(PartialBijection::unity(2)), None],
        );
        assert!(bad.is_err());
        // Missing inner value on the domain.
        let bad = WreathElement::new(2, PartialBijection::unity(1), vec![None]);
        assert!(bad.is_err());
    }

    #[test]
    fn act_super_cases() {
        let m = 2;
        let v = pb(m, &[(1, 2)]);
        let f: InnerMap = vec![None, Some(v.clone())];
        let id = PartialBijection::unity(2);
        assert_eq!(act_super(&f, &id).unwrap(), f);
        let zero = PartialBijection::zero(2);
        assert_eq!(act_super(&f, &zero).unwrap(), vec![None, None]);
        let a = pb(2, &[(1, 2)]);
        assert_eq!(act_super(&f, &a).unwrap(), vec![Some(v), None]);
    }

    #[test]
    fn compose_units_and_example() {
        for p in enumerate_wreath(2, 2).unwrap() {
            let id = WreathElement::identity(2, 2);
            let zero = WreathElement::zero(2, 2);
            assert_eq!(p.compose(&id).unwrap(), p);
            assert_eq!(id.compose(&p).unwrap(), p);
            assert_eq!(p.compose(&zero).unwrap(), zero);
        }
        let p = WreathElement::new(
            2,
            pb(2, &[(1, 1)]),
            vec![Some(pb(2, &[(1, 2), (2, 1)])), None],
        )
        .unwrap();
        let q = WreathElement::new(2, pb(2, &[(1, 1)]), vec![Some(pb(2, &[(1, 1)])), None]).unwrap();
        let r = p.compose(&q).unwrap();
        assert_eq!(r.outer(), &pb(2, &[(1, 1)]));
        assert_eq!(r.inner_at(1), Some(&pb(2, &[(2, 1)])));
    }

    #[test]
    fn inverse_axiom_exhaustive_2_2() {
        let all = enumerate_wreath(2, 2).unwrap();
        assert_eq!(all.len(), 127);
        for p in &all {
            let pi = p.inverse();
            assert_eq!(p.compose(&pi).unwrap().compose(p).unwrap(), *p);
        }
        assert_eq!(WreathElement::identity(2, 2).inverse(), WreathElement::identity(2, 2));
        assert_eq!(WreathElement::zero(2, 2).inverse(), WreathElement::zero(2, 2));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_wreath(1, 1).unwrap().len(), 3);
        assert_eq!(enumerate_wreath(2, 2).unwrap().len(), 127);
        let all = enumerate_wreath(2, 2).unwrap();
        assert!(all.contains(&WreathElement::zero(2, 2)));
        assert!(all.contains(&WreathElement::identity(2, 2)));
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 127);
        assert!(enumerate_wreath(3, 2).is_err());
    }

    #[test]
    fn green_r_inner_domains_matter() {
        let p = WreathElement::new(1, pb(1, &[(1, 1)]), vec![Some(PartialBijection::zero(1))])
            .unwrap();
        let q = WreathElement::new(1, pb(1, &[(1, 1)]), vec![Some(PartialBijection::unity(1))])
            .unwrap();
        assert!(!w_green_r(&p, &q).unwrap());
        assert!(w_green_r(&p, &p).unwrap());
    }

    #[test]
    fn idempotent_counts() {
        assert_eq!(count_wreath_idempotents(2, 2), 25);
        let all = enumerate_wreath(2, 2).unwrap();
        let direct = all.iter().filter(|p| p.is_idempotent()).count();
        assert_eq!(direct as u128, 25);
        assert!(WreathElement::zero(2, 2).is_idempotent());
        assert!(WreathElement::identity(2, 2).is_idempotent());
    }

    #[test]
    fn inverse_exchanges_green_r_and_l() {
        let all = enumerate_wreath(1, 2).unwrap();
        for p in &all {
            for q in &all {
                assert_eq!(
                    w_green_r(p, q).unwrap(),
                    w_green_l(&p.inverse(), &q.inverse()).unwrap()
                );
            }
        }
    }

    #[test]
    fn associativity_exhaustive_1_2() {
        let all = enumerate_wreath(1, 2).unwrap();
        assert_eq!(all.len(), 17);
        for a in &all {
            for b in &all {
                let ab = a.compose(b).unwrap();
                for c in &all {
                    assert_eq!(
                        ab.compose(c).unwrap(),
                        a.compose(&b.compose(c).unwrap()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let p = WreathElement::new(
            2,
            pb(2, &[(1, 2)]),
            vec![Some(pb(2, &[(1, 1)])), None],
        )
        .unwrap();
        let s = serde_json::to_string(&p).unwrap();
        let back: WreathElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
