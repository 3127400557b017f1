//! Finite semigroups presented as element lists with a multiplication table,
//! the common substrate for validation, exhaustive search and isomorphism
//! testing.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};

/// A finite semigroup given by its Cayley table over element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MulTable {
    size: usize,
    table: Vec<usize>,
}

impl MulTable {
    /// Builds the table from an element list and a multiplication closure.
    /// Fails if the set is not closed.
    pub fn build<E, F>(elements: &[E], mul: F) -> Result<Self>
    where
        E: Clone + Eq + Hash,
        F: Fn(&E, &E) -> E,
    {
        let index: HashMap<&E, usize> = elements.iter().zip(0..).collect();
        let size = elements.len();
        let mut table = Vec::with_capacity(size * size);
        for a in elements {
            for b in elements {
                let p = mul(a, b);
                let k = *index.get(&p).ok_or_else(|| {
                    Error::NotCrossSection("set is not closed under multiplication".into())
                })?;
                table.push(k);
            }
        }
        Ok(MulTable { size, table })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.size + j]
    }

    pub fn is_idempotent(&self, i: usize) -> bool {
        self.mul(i, i) == i
    }

    pub fn identity(&self) -> Option<usize> {
        (0..self.size).find(|&e| (0..self.size).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    /// Index and period of the cyclic subsemigroup generated by `i`.
    pub fn index_period(&self, i: usize) -> (usize, usize) {
        let mut seen = HashMap::new();
        let mut x = i;
        let mut step = 1usize;
        loop {
            if let Some(&first) = seen.get(&x) {
                return (first, step - first);
            }
            seen.insert(x, step);
            x = self.mul(x, i);
            step += 1;
        }
    }
}

/// Closes a generating set under multiplication.
pub fn closure<E, F>(generators: &[E], mul: F) -> Vec<E>
where
    E: Clone + Eq + Hash + Ord,
    F: Fn(&E, &E) -> E,
{
    let mut elements: Vec<E> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for g in generators {
        if seen.insert(g.clone()) {
            elements.push(g.clone());
        }
    }
    loop {
        let mut added = Vec::new();
        for a in &elements {
            for b in &elements {
                let p = mul(a, b);
                if seen.insert(p.clone()) {
                    added.push(p);
                }
            }
        }
        if added.is_empty() {
            break;
        }
        elements.extend(added);
    }
    elements.sort();
    elements
}

/// Stable structural colouring of the elements, refined iteratively from
/// idempotency and index/period data. Used to prune isomorphism search:
/// an isomorphism can only map an element to one of the same colour.
pub fn refine_colors(t: &MulTable) -> Vec<u64> {
    let n = t.size();
    let mut colors: Vec<u64> = (0..n)
        .map(|i| {
            let (idx, per) = t.index_period(i);
            hash3(u64::from(t.is_idempotent(i)), idx as u64, per as u64)
        })
        .collect();
    for _ in 0..n {
        let mut next = Vec::with_capacity(n);
        for i in 0..n {
            let mut signature: Vec<u64> = (0..n)
                .map(|j| hash3(colors[j], colors[t.mul(i, j)], colors[t.mul(j, i)]))
                .collect();
            signature.sort_unstable();
            let mut h = colors[i];
            for s in signature {
                h = hash3(h, s, 0x9e3779b97f4a7c15);
            }
            next.push(h);
        }
        if next == colors {
            break;
        }
        colors = next;
    }
    colors
}

fn hash3(a: u64, b: u64, c: u64) -> u64 {
    let mut h = 0xcbf29ce484222325u64;
    for v in [a, b, c] {
        h ^= v;
        h = h.wrapping_mul(0x100000001b3);
        h = h.rotate_left(23);
    }
    h
}

/// All product-preserving bijections between two tables, as index maps, in
/// lexicographic order of the assignment vector.
pub fn find_isomorphisms_tables(s: &MulTable, t: &MulTable) -> Vec<Vec<usize>> {
    if s.size() != t.size() {
        return Vec::new();
    }
    let n = s.size();
    let cs = refine_colors(s);
    let ct = refine_colors(t);
    {
        let mut a = cs.clone();
        let mut b = ct.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Vec::new();
        }
    }
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut out = Vec::new();
    fn rec(
        pos: usize,
        s: &MulTable,
        t: &MulTable,
        cs: &[u64],
        ct: &[u64],
        phi: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = s.size();
        if pos == n {
            out.push(phi.clone());
            return;
        }
        'cand: for img in 0..n {
            if used[img] || cs[pos] != ct[img] {
                continue;
            }
            phi[pos] = img;
            // Products with `pos` as a factor whose result is already mapped.
            for j in 0..=pos {
                let p = s.mul(pos, j);
                if p <= pos && t.mul(img, phi[j]) != phi[p] {
                    phi[pos] = usize::MAX;
                    continue 'cand;
                }
                let q = s.mul(j, pos);
                if q <= pos && t.mul(phi[j], img) != phi[q] {
                    phi[pos] = usize::MAX;
                    continue 'cand;
                }
            }
            // Earlier products that land on `pos` become checkable now.
            for i in 0..pos {
                for j in 0..pos {
                    if s.mul(i, j) == pos && t.mul(phi[i], phi[j]) != img {
                        phi[pos] = usize::MAX;
                        continue 'cand;
                    }
                }
            }
            used[img] = true;
            rec(pos + 1, s, t, cs, ct, phi, used, out);
            used[img] = false;
            phi[pos] = usize::MAX;
        }
    }
    rec(0, s, t, &cs, &ct, &mut phi, &mut used, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isn::{enumerate_is, PartialBijection};

    fn is2_table() -> MulTable {
        let all = enumerate_is(2).unwrap();
        MulTable::build(&all, |a, b| a.compose(b).unwrap()).unwrap()
    }

    #[test]
    fn table_and_identity() {
        let t = is2_table();
        assert_eq!(t.size(), 7);
        let all = enumerate_is(2).unwrap();
        let e = t.identity().unwrap();
        assert!(all[e].is_unity());
    }

    #[test]
    fn closure_of_chains_in_is2() {
        let n = 2;
        let gens = vec![crate::isn::chain(n, &[1]).unwrap(), crate::isn::chain(n, &[1, 2]).unwrap()];
        let closed = closure(&gens, |a: &PartialBijection, b| a.compose(b).unwrap());
        // {0, [1,2]=chain, [1]·[1,2] etc.} closes to 3 elements without the unity.
        assert!(closed.len() < 7);
        for a in &closed {
            for b in &closed {
                assert!(closed.contains(&a.compose(b).unwrap()));
            }
        }
    }

    #[test]
    fn self_isomorphisms_contain_identity() {
        let t = is2_table();
        let isos = find_isomorphisms_tables(&t, &t);
        let id: Vec<usize> = (0..7).collect();
        assert!(isos.contains(&id));
        // Products are preserved.
        for phi in &isos {
            for i in 0..7 {
                for j in 0..7 {
                    assert_eq!(phi[t.mul(i, j)], t.mul(phi[i], phi[j]));
                }
            }
        }
    }

    #[test]
    fn non_isomorphic_tables() {
        // The 2-element semilattice vs the 2-element null semigroup.
        let semilattice = MulTable {
            size: 2,
            table: vec![0, 0, 0, 1],
        };
        let null = MulTable {
            size: 2,
            table: vec![0, 0, 0, 0],
        };
        assert!(find_isomorphisms_tables(&semilattice, &null).is_empty());
    }
}
