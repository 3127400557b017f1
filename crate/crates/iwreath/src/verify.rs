//! Machine verification of the classification and counting theorems at
//! small sizes. Each check returns a short report on success and a
//! counterexample-carrying error on falsification.

use num_bigint::BigUint;

use crate::counting;
use crate::cross_sections::{
    all_ordered_partitions, build_r_cross_section, build_wreath_r_cross_section, GreenKind,
    IsnCrossSection, WreathCrossSection,
};
use crate::error::{Error, Result};
use crate::isn;
use crate::oracle;
use crate::structure;
use crate::wreath;

/// Every constructed wreath R-cross-section at `(m, n)`: every ordered
/// partition of `{1..n}` with every choice of component cross-sections
/// (one `IS_m` section per block).
pub fn all_constructed_wreath_sections(m: usize, n: usize) -> Result<Vec<WreathCrossSection>> {
    let comps_pool: Vec<IsnCrossSection> = all_ordered_partitions(m)
        .iter()
        .map(build_r_cross_section)
        .collect();
    let mut out = Vec::new();
    for op in all_ordered_partitions(n) {
        let k = op.blocks().len();
        let mut choice = vec![0usize; k];
        loop {
            let comps: Vec<IsnCrossSection> =
                choice.iter().map(|&c| comps_pool[c].clone()).collect();
            out.push(build_wreath_r_cross_section(&op, &comps)?);
            let mut i = k;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                choice[i] += 1;
                if choice[i] < comps_pool.len() {
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

/// Green's R/L criteria on the wreath product against the definitional
/// `aS = bS` / `Sa = Sb` relations, over every ordered pair.
pub fn verify_green_criteria(m: usize, n: usize) -> Result<String> {
    let s = wreath::enumerate_wreath_bounded(m, n, m, n)?;
    let mul = |a: &wreath::WreathElement, b: &wreath::WreathElement| a.compose(b).expect("ranks");
    for kind in [GreenKind::R, GreenKind::L] {
        let classes = oracle::definitional_classes(&s, mul, kind)?;
        let mut class_of = vec![0usize; s.len()];
        for (ci, class) in classes.iter().enumerate() {
            for &i in class {
                class_of[i] = ci;
            }
        }
        for i in 0..s.len() {
            for j in 0..s.len() {
                let criterion = match kind {
                    GreenKind::R => wreath::w_green_r(&s[i], &s[j])?,
                    GreenKind::L => wreath::w_green_l(&s[i], &s[j])?,
                };
                if criterion != (class_of[i] == class_of[j]) {
                    return Err(Error::TheoremFalsified(format!(
                        "{kind:?}-criterion disagrees with the definitional relation on pair {} / {}",
                        serde_json::to_string(&s[i]).expect("serializable"),
                        serde_json::to_string(&s[j]).expect("serializable"),
                    )));
                }
            }
        }
    }
    Ok(format!("PASS {} pairs", s.len() * s.len()))
}

/// Every isomorphism between every pair of `IS_n` cross-sections is a
/// conjugacy, and isomorphy coincides with type-vector equality.
pub fn verify_isom_conjugacy_isn(n: usize) -> Result<String> {
    let sections: Vec<IsnCrossSection> = all_ordered_partitions(n)
        .iter()
        .map(build_r_cross_section)
        .collect();
    let mut iso_count = 0usize;
    for r1 in &sections {
        for r2 in &sections {
            let isos = structure::find_isomorphisms_isn(r1, r2)?;
            let same_type =
                crate::cross_sections::type_vector(r1)? == crate::cross_sections::type_vector(r2)?;
            if isos.is_empty() != !same_type {
                return Err(Error::TheoremFalsified(format!(
                    "isomorphy and type equality disagree for {} vs {}",
                    r1.partition.as_ref().expect("constructed"),
                    r2.partition.as_ref().expect("constructed"),
                )));
            }
            for phi in &isos {
                structure::conjugator_isn(r1, r2, phi)?;
                iso_count += 1;
            }
        }
    }
    Ok(format!(
        "PASS {} cross-sections, {} isomorphisms, all conjugacies",
        sections.len(),
        iso_count
    ))
}

/// Every isomorphism between constructed wreath cross-sections admits a
/// conjugating pair, and the number of isomorphism classes matches the
/// counting formula.
pub fn verify_isom_conjugacy_wreath(m: usize, n: usize) -> Result<String> {
    let sections = all_constructed_wreath_sections(m, n)?;
    let mut iso_count = 0usize;
    for r1 in &sections {
        for r2 in &sections {
            let isos = structure::find_isomorphisms_wreath(r1, r2)?;
            for phi in &isos {
                structure::conjugator_wreath(r1, r2, phi)?;
                iso_count += 1;
            }
        }
    }
    let element_sets: Vec<Vec<wreath::WreathElement>> =
        sections.iter().map(|s| s.elements.clone()).collect();
    let classification = oracle::classify_isomorphism(&element_sets, |a, b| {
        a.compose(b).expect("ranks")
    })?;
    let formula = counting::count_noniso_wreath(m, n).0;
    if BigUint::from(classification.classes.len()) != formula {
        return Err(Error::TheoremFalsified(format!(
            "classification found {} classes, formula predicts {}",
            classification.classes.len(),
            formula
        )));
    }
    Ok(format!(
        "PASS {} constructed cross-sections, {} classes, {} isomorphisms, all conjugacies",
        sections.len(),
        classification.classes.len(),
        iso_count
    ))
}

/// The counting corollary: classification of constructed cross-sections
/// yields exactly the closed-form number of classes.
pub fn verify_counting(m: usize, n: usize) -> Result<String> {
    let sections = all_constructed_wreath_sections(m, n)?;
    let element_sets: Vec<Vec<wreath::WreathElement>> =
        sections.iter().map(|s| s.elements.clone()).collect();
    let classification = oracle::classify_isomorphism(&element_sets, |a, b| {
        a.compose(b).expect("ranks")
    })?;
    let formula = counting::count_noniso_wreath(m, n).0;
    if BigUint::from(classification.classes.len()) != formula {
        return Err(Error::TheoremFalsified(format!(
            "classification found {} classes, formula predicts {}",
            classification.classes.len(),
            formula
        )));
    }
    Ok(format!(
        "PASS formula={} classified={}",
        formula,
        classification.classes.len()
    ))
}

/// Exhaustive search in `IS_n` finds exactly the constructed
/// cross-sections: nothing extra, nothing missing.
pub fn verify_search_classification(n: usize) -> Result<String> {
    let s = isn::enumerate_is_bounded(n, n)?;
    let found = oracle::find_all_cross_sections(&s, |a, b| a.compose(b).expect("ranks"), GreenKind::R)?;
    let mut built: Vec<Vec<isn::PartialBijection>> = all_ordered_partitions(n)
        .iter()
        .map(|p| build_r_cross_section(p).elements)
        .collect();
    built.sort();
    built.dedup();
    if found != built {
        return Err(Error::TheoremFalsified(format!(
            "exhaustive search found {} cross-sections, constructions give {}",
            found.len(),
            built.len()
        )));
    }
    Ok(format!("PASS {} cross-sections, search = construction", found.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructed_family_sizes() {
        assert_eq!(all_constructed_wreath_sections(1, 1).unwrap().len(), 1);
        assert_eq!(all_constructed_wreath_sections(1, 2).unwrap().len(), 3);
        assert_eq!(all_constructed_wreath_sections(2, 2).unwrap().len(), 15);
    }

    #[test]
    fn green_criteria_small() {
        assert!(verify_green_criteria(1, 1).unwrap().starts_with("PASS"));
        assert!(verify_green_criteria(1, 2).unwrap().starts_with("PASS"));
    }

    #[test]
    fn isom_conjugacy_isn_small() {
        assert!(verify_isom_conjugacy_isn(2).unwrap().starts_with("PASS"));
    }

    #[test]
    fn counting_small() {
        assert_eq!(verify_counting(1, 2).unwrap(), "PASS formula=2 classified=2");
    }

    #[test]
    fn search_classification_small() {
        assert!(verify_search_classification(2).unwrap().starts_with("PASS"));
    }
}
