//! Characters of A_n by restriction from S_n.
//!
//! For λ ≠ λ' the restriction of χ^λ is irreducible and equals that of
//! χ^{λ'}. For λ = λ' it splits into two characters of half the degree that
//! agree with `χ^λ/2` off the split classes (cycle types with distinct odd
//! parts). Values on split classes are not modelled.

use num_bigint::BigUint;

use super::{mn_value, partitions, Partition};
use crate::checks::{Check, CheckReport, Violation};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnCharacter {
    /// The label with `λ ≥ λ'` in the order of [`partitions`].
    pub lambda: Partition,
    /// Whether χ^λ splits on restriction (λ self-conjugate).
    pub split: bool,
    /// Degree of each irreducible constituent.
    pub degree: BigUint,
}

/// Whether permutations of this cycle type form two A_n-classes.
pub fn is_split_class(cycle_type: &Partition) -> bool {
    let parts = cycle_type.parts();
    parts.iter().all(|&x| x % 2 == 1) && parts.windows(2).all(|w| w[0] != w[1])
}

/// One entry per pair `{λ, λ'}`.
pub fn an_character_data(n: usize) -> Vec<AnCharacter> {
    partitions(n)
        .into_iter()
        .filter(|l| *l >= l.conjugate())
        .map(|lambda| {
            let split = lambda.is_self_conjugate();
            let d = lambda.degree();
            let degree = if split { d / 2u32 } else { d };
            AnCharacter { lambda, split, degree }
        })
        .collect()
}

/// Value of the A_n character labelled by λ (either constituent when λ is
/// self-conjugate) on an even cycle type.
pub fn an_value(lambda: &Partition, cycle_type: &Partition) -> Result<i128> {
    if !cycle_type.is_even() {
        return Err(Error::InvalidArgument(format!("{cycle_type} is not an even cycle type")));
    }
    if lambda.is_self_conjugate() {
        if is_split_class(cycle_type) {
            return Err(Error::SplitClassUnsupported(cycle_type.parts().to_vec()));
        }
        Ok(mn_value(lambda, cycle_type)? / 2)
    } else {
        mn_value(lambda, cycle_type)
    }
}

/// A character of A_n and an element `g` with `χ(g) ≠ 0` but `χ(g_p) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PPartWitness {
    pub lambda: Partition,
    pub degree: BigUint,
    pub cycle_type: Partition,
    pub value: i128,
    pub p_part: Partition,
}

/// Searches A_n for characters of the given degree (any degree if `None`)
/// and classes of the given element order on which the character is nonzero
/// while vanishing on the p-part. Pairs touching an unsupported split-class
/// value are skipped and counted.
pub fn p_part_vanishing_search(
    n: usize,
    p: u64,
    degree: Option<u64>,
    element_order: u64,
) -> Result<(Vec<PPartWitness>, usize)> {
    let classes: Vec<Partition> = partitions(n)
        .into_iter()
        .filter(|mu| mu.is_even() && mu.lcm() == element_order)
        .collect();
    let mut found = Vec::new();
    let mut skipped = 0;
    for chi in an_character_data(n) {
        if let Some(d) = degree {
            if chi.degree != BigUint::from(d) {
                continue;
            }
        }
        for mu in &classes {
            let mu_p = mu.p_part_cycle_type(p);
            let pair = an_value(&chi.lambda, mu).and_then(|v| Ok((v, an_value(&chi.lambda, &mu_p)?)));
            match pair {
                Ok((v, vp)) if v != 0 && vp == 0 => found.push(PPartWitness {
                    lambda: chi.lambda.clone(),
                    degree: chi.degree.clone(),
                    cycle_type: mu.clone(),
                    value: v,
                    p_part: mu_p,
                }),
                Ok(_) => {}
                Err(Error::SplitClassUnsupported(_)) => skipped += 1,
                Err(e) => return Err(e),
            }
        }
    }
    Ok((found, skipped))
}

/// The A_10 example with `p = 2`, `o(g) = 6`, `χ(1) = 84`.
pub fn verify_a10_phenomenon() -> CheckReport {
    verify_p_part_phenomenon(10, 2, 84, 6)
}

/// PASS iff A_n has a character of degree `degree` that is nonzero on some
/// class of order `element_order` and zero on the class of its p-part.
pub fn verify_p_part_phenomenon(n: usize, p: u64, degree: u64, element_order: u64) -> CheckReport {
    let group = format!("A{n}");
    let (found, skipped) = match p_part_vanishing_search(n, p, Some(degree), element_order) {
        Ok(r) => r,
        Err(e) => {
            return CheckReport::not_applicable(Check::A10, &group, Some(p), e.to_string());
        }
    };
    let violations = if found.is_empty() {
        vec![Violation { character: 0, class: None, block: None, defect: None, lhs: degree, rhs: 0 }]
    } else {
        Vec::new()
    };
    let mut report = CheckReport::from_violations(Check::A10, &group, Some(p), violations);
    for w in &found {
        report.notes.push(format!(
            "chi{} of degree {}: value {} on cycle type {}, 0 on {}",
            w.lambda, w.degree, w.value, w.cycle_type, w.p_part
        ));
    }
    if skipped > 0 {
        report.notes.push(format!("{skipped} pairs on split classes skipped"));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn a5_characters() {
        let data = an_character_data(5);
        let degrees: Vec<String> = data.iter().map(|c| c.degree.to_string()).collect();
        assert_eq!(degrees, vec!["1", "4", "5", "3"]);
        assert!(data.iter().any(|c| c.lambda == part(&[4, 1]) && !c.split));
        let squares: u64 = data
            .iter()
            .map(|c| {
                let d: u64 = c.degree.to_string().parse().unwrap();
                if c.split { 2 * d * d } else { d * d }
            })
            .sum();
        assert_eq!(squares, 60);
    }

    #[test]
    fn split_class_is_flagged() {
        let lambda = part(&[3, 2, 1]);
        assert!(lambda.is_self_conjugate());
        assert!(matches!(
            an_value(&lambda, &part(&[5, 1])),
            Err(Error::SplitClassUnsupported(_))
        ));
        assert!(an_value(&lambda, &part(&[3, 3])).is_ok());
    }

    #[test]
    fn a10_phenomenon() {
        let r = verify_a10_phenomenon();
        assert!(r.passed(), "{r:?}");
        assert!(r.notes.iter().any(|n| n.contains("(7,1,1,1)")));
        assert!(!verify_p_part_phenomenon(10, 2, 85, 6).passed());
    }
}
