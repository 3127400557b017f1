//! Brute-force ground truth, independent of the criterion-based
//! implementations: definitional Green's relations via principal ideals,
//! exhaustive cross-section search, and isomorphism classification.

use std::collections::BTreeSet;
use std::hash::Hash;

use crate::cross_sections::GreenKind;
use crate::error::{Error, Result};
use crate::semigroup::MulTable;

/// Bound on the ambient size for exhaustive search.
pub const DEFAULT_MAX_SEARCH_SIZE: usize = 256;
const MAX_CLASSES: usize = 32;

/// `a R b ⇔ aS = bS`, by literal set computation. For semigroups without an
/// identity, set `adjoin_identity` to use the `aS ∪ {a}` convention.
pub fn green_r_definitional<E, F>(a: &E, b: &E, s: &[E], mul: F, adjoin_identity: bool) -> Result<bool>
where
    E: Clone + Eq + Ord,
    F: Fn(&E, &E) -> E,
{
    let ideal = |x: &E| -> BTreeSet<E> {
        let mut set: BTreeSet<E> = s.iter().map(|y| mul(x, y)).collect();
        if adjoin_identity {
            set.insert(x.clone());
        }
        set
    };
    if !adjoin_identity && !has_identity(s, &mul) {
        return Err(Error::NoIdentity);
    }
    Ok(ideal(a) == ideal(b))
}

/// `a L b ⇔ Sa = Sb`.
pub fn green_l_definitional<E, F>(a: &E, b: &E, s: &[E], mul: F, adjoin_identity: bool) -> Result<bool>
where
    E: Clone + Eq + Ord,
    F: Fn(&E, &E) -> E,
{
    let ideal = |x: &E| -> BTreeSet<E> {
        let mut set: BTreeSet<E> = s.iter().map(|y| mul(y, x)).collect();
        if adjoin_identity {
            set.insert(x.clone());
        }
        set
    };
    if !adjoin_identity && !has_identity(s, &mul) {
        return Err(Error::NoIdentity);
    }
    Ok(ideal(a) == ideal(b))
}

fn has_identity<E, F>(s: &[E], mul: &F) -> bool
where
    E: Clone + Eq,
    F: Fn(&E, &E) -> E,
{
    s.iter()
        .any(|e| s.iter().all(|x| mul(e, x) == *x && mul(x, e) == *x))
}

/// Partitions an enumerated semigroup into definitional R- or L-classes.
/// Classes are listed by (size, smallest member index), members in element
/// order.
pub fn definitional_classes<E, F>(s: &[E], mul: F, kind: GreenKind) -> Result<Vec<Vec<usize>>>
where
    E: Clone + Eq + Ord,
    F: Fn(&E, &E) -> E,
{
    if !has_identity(s, &mul) {
        return Err(Error::NoIdentity);
    }
    let ideals: Vec<BTreeSet<E>> = s
        .iter()
        .map(|x| match kind {
            GreenKind::R => s.iter().map(|y| mul(x, y)).collect(),
            GreenKind::L => s.iter().map(|y| mul(y, x)).collect(),
        })
        .collect();
    let mut assigned = vec![false; s.len()];
    let mut classes = Vec::new();
    for i in 0..s.len() {
        if assigned[i] {
            continue;
        }
        let mut class = vec![i];
        assigned[i] = true;
        for j in i + 1..s.len() {
            if !assigned[j] && ideals[i] == ideals[j] {
                class.push(j);
                assigned[j] = true;
            }
        }
        classes.push(class);
    }
    classes.sort_by_key(|c| (c.len(), c[0]));
    Ok(classes)
}

/// Exhaustive search for every cross-section of the given relation:
/// all subsemigroups containing exactly one element from every class.
///
/// Classes are processed smallest-first; partial selections are pruned as
/// soon as a product of chosen elements contradicts a chosen (or forced)
/// representative.
pub fn find_all_cross_sections<E, F>(s: &[E], mul: F, kind: GreenKind) -> Result<Vec<Vec<E>>>
where
    E: Clone + Eq + Ord + Hash,
    F: Fn(&E, &E) -> E,
{
    if s.len() > DEFAULT_MAX_SEARCH_SIZE {
        return Err(Error::TooLarge {
            size: s.len(),
            bound: DEFAULT_MAX_SEARCH_SIZE,
        });
    }
    let classes = definitional_classes(s, &mul, kind)?;
    if classes.len() > MAX_CLASSES {
        return Err(Error::TooLarge {
            size: classes.len(),
            bound: MAX_CLASSES,
        });
    }
    let table = MulTable::build(s, &mul)?;
    let mut class_of = vec![0usize; s.len()];
    for (ci, class) in classes.iter().enumerate() {
        for &i in class {
            class_of[i] = ci;
        }
    }

    // chosen[ci] = element index selected for class ci.
    let mut chosen: Vec<Option<usize>> = vec![None; classes.len()];
    let mut out: Vec<Vec<E>> = Vec::new();

    fn closure_consistent(
        table: &MulTable,
        class_of: &[usize],
        chosen: &mut Vec<Option<usize>>,
        newly: usize,
    ) -> std::result::Result<Vec<usize>, ()> {
        // Propagate products involving the newly selected element; forced
        // selections are recorded so the caller can undo them.
        let mut forced = Vec::new();
        let mut queue = vec![newly];
        while let Some(x) = queue.pop() {
            let selected: Vec<usize> = chosen.iter().flatten().copied().collect();
            for &y in &selected {
                for p in [table.mul(x, y), table.mul(y, x)] {
                    let c = class_of[p];
                    match chosen[c] {
                        Some(r) if r == p => {}
                        Some(_) => {
                            for &f in &forced {
                                chosen[class_of[f]] = None;
                            }
                            return Err(());
                        }
                        None => {
                            chosen[c] = Some(p);
                            forced.push(p);
                            queue.push(p);
                        }
                    }
                }
            }
        }
        Ok(forced)
    }

    fn rec<E: Clone>(
        pos: usize,
        classes: &[Vec<usize>],
        table: &MulTable,
        class_of: &[usize],
        chosen: &mut Vec<Option<usize>>,
        s: &[E],
        out: &mut Vec<Vec<E>>,
    ) {
        if pos == classes.len() {
            let mut section: Vec<usize> = chosen.iter().flatten().copied().collect();
            section.sort_unstable();
            out.push(section.iter().map(|&i| s[i].clone()).collect());
            return;
        }
        if chosen[pos].is_some() {
            rec(pos + 1, classes, table, class_of, chosen, s, out);
            return;
        }
        for &cand in &classes[pos] {
            chosen[pos] = Some(cand);
            if let Ok(forced) = closure_consistent(table, class_of, chosen, cand) {
                rec(pos + 1, classes, table, class_of, chosen, s, out);
                for f in forced {
                    chosen[class_of[f]] = None;
                }
            }
            chosen[pos] = None;
        }
    }

    rec(0, &classes, &table, &class_of, &mut chosen, s, &mut out);
    out.sort();
    Ok(out)
}

/// A classification of finite semigroups up to isomorphism.
#[derive(Debug, Clone)]
pub struct Classification {
    /// Indices of the input sets, grouped into isomorphism classes.
    pub classes: Vec<Vec<usize>>,
    /// For each non-representative member, a witness isomorphism to its
    /// class representative (index map), keyed by input index.
    pub witnesses: Vec<Option<Vec<usize>>>,
}

/// Groups semigroups by existence of an isomorphism, storing one witness per
/// non-representative member.
pub fn classify_isomorphism<E, F>(sets: &[Vec<E>], mul: F) -> Result<Classification>
where
    E: Clone + Eq + Hash,
    F: Fn(&E, &E) -> E,
{
    let tables: Vec<MulTable> = sets
        .iter()
        .map(|s| {
            if s.len() > crate::structure::DEFAULT_MAX_ISO_SIZE {
                return Err(Error::TooLarge {
                    size: s.len(),
                    bound: crate::structure::DEFAULT_MAX_ISO_SIZE,
                });
            }
            MulTable::build(s, &mul)
        })
        .collect::<Result<_>>()?;
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut witnesses: Vec<Option<Vec<usize>>> = vec![None; sets.len()];
    for i in 0..sets.len() {
        let mut placed = false;
        for class in classes.iter_mut() {
            let rep = class[0];
            let isos = crate::semigroup::find_isomorphisms_tables(&tables[i], &tables[rep]);
            if let Some(w) = isos.into_iter().next() {
                witnesses[i] = Some(w);
                class.push(i);
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(vec![i]);
        }
    }
    Ok(Classification { classes, witnesses })
}
