//! Per-character checks and their reports.
//!
//! Each check compares two integers for every relevant (character, class) or
//! (character, block) pair and records every failing pair. A failing pair is
//! data, never an error.

use serde::{Deserialize, Serialize};

use crate::arith::{p_part, prime_divisors};
use crate::blocks::{
    block_partition, center_order, char_defect, defect_group_exponent_mod_center,
    defect_group_exponent_mod_center_from_table,
};
use crate::chartab::CharacterTable;
use crate::group::FiniteGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Wilde,
    Dagger,
    DaggerStar,
    BrauerNesbitt,
    ConditionStar,
    A10,
    SymDagger,
    SpinVanishing,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Wilde,
        Check::Dagger,
        Check::DaggerStar,
        Check::BrauerNesbitt,
        Check::ConditionStar,
        Check::A10,
        Check::SymDagger,
        Check::SpinVanishing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Wilde => "wilde",
            Check::Dagger => "dagger",
            Check::DaggerStar => "dagger-star",
            Check::BrauerNesbitt => "brauer-nesbitt",
            Check::ConditionStar => "condition-star",
            Check::A10 => "a10",
            Check::SymDagger => "sym-dagger",
            Check::SpinVanishing => "spin-vanishing",
        }
    }

    /// Whether the check is run once per prime.
    pub fn per_prime(self) -> bool {
        matches!(self, Check::Dagger | Check::DaggerStar | Check::BrauerNesbitt)
    }
}

impl std::str::FromStr for Check {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check {s:?}"))
    }
}

impl std::fmt::Display for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::NotApplicable => "N/A",
        })
    }
}

/// One failing comparison. What `lhs` and `rhs` mean depends on the check:
///
/// | check | lhs | rhs | failure |
/// |---|---|---|---|
/// | wilde | `o(g)` | `\|G\|/χ(1)` | `lhs ∤ rhs` |
/// | dagger | `exp D` | `p^{def χ}` | `lhs > rhs` |
/// | dagger-star | `exp(D/Z(G)_p)` | `(\|G:Z(G)\|/χ(1))_p` | `lhs > rhs` |
/// | brauer-nesbitt | `o(g)` | `\|G\|/χ(1)` | `χ(g) ≠ 0` although `p ∤ rhs`, `p \| lhs` |
/// | condition-star | `o(hZ(H))` | `\|H:Z(H)\|/χ(1)` | `lhs ∤ rhs` |
/// | a10 | target degree | witnesses found | no witness |
/// | sym-dagger | one side | the other side | `lhs < rhs` in the chain |
/// | spin-vanishing | order of the projected element | `χ(1)` | value should vanish |
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub character: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub block: Option<usize>,
    /// `def(χ)`, for the block checks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub defect: Option<u32>,
    #[serde(with = "crate::io::decimal")]
    pub lhs: u64,
    #[serde(with = "crate::io::decimal")]
    pub rhs: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: Check,
    pub group: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    pub status: Status,
    pub violations: Vec<Violation>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn from_violations(check: Check, group: &str, prime: Option<u64>, violations: Vec<Violation>) -> Self {
        let status = if violations.is_empty() { Status::Pass } else { Status::Fail };
        CheckReport { check, group: group.to_string(), prime, status, violations, notes: Vec::new() }
    }

    pub fn not_applicable(check: Check, group: &str, prime: Option<u64>, note: String) -> Self {
        CheckReport {
            check,
            group: group.to_string(),
            prime,
            status: Status::NotApplicable,
            violations: Vec::new(),
            notes: vec![note],
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One line such as `gl23 dagger p=2: FAIL (2 violations)`.
    pub fn summary(&self) -> String {
        let prime = self.prime.map(|p| format!(" p={p}")).unwrap_or_default();
        let tail = match self.status {
            Status::Fail => format!(" ({} violations)", self.violations.len()),
            Status::NotApplicable => format!(" ({})", self.notes.join("; ")),
            Status::Pass => String::new(),
        };
        format!("{} {}{}: {}{}", self.group, self.check, prime, self.status, tail)
    }
}

/// Primes dividing `|G|`.
pub fn primes_dividing(order: u64) -> Vec<u64> {
    prime_divisors(order)
}

/// Wilde's check: `o(g) | |G|/χ(1)` whenever `χ(g) ≠ 0`.
pub fn check_wilde(name: &str, t: &CharacterTable) -> CheckReport {
    let mut violations = Vec::new();
    for chi in 0..t.values().len() {
        let codegree = t.order() / t.degree(chi);
        for (c, class) in t.classes().iter().enumerate() {
            if !t.value(chi, c).is_zero() && !codegree.is_multiple_of(class.order) {
                violations.push(Violation {
                    character: chi,
                    class: Some(c),
                    block: None,
                    defect: None,
                    lhs: class.order,
                    rhs: codegree,
                });
            }
        }
    }
    CheckReport::from_violations(Check::Wilde, name, None, violations)
}

/// Brauer–Nesbitt: a character with `p ∤ |G|/χ(1)` vanishes on p-singular
/// classes.
pub fn check_brauer_nesbitt(name: &str, t: &CharacterTable, p: u64) -> CheckReport {
    let mut violations = Vec::new();
    for chi in 0..t.values().len() {
        let codegree = t.order() / t.degree(chi);
        if codegree.is_multiple_of(p) {
            continue;
        }
        for (c, class) in t.classes().iter().enumerate() {
            if class.order % p == 0 && !t.value(chi, c).is_zero() {
                violations.push(Violation {
                    character: chi,
                    class: Some(c),
                    block: None,
                    defect: None,
                    lhs: class.order,
                    rhs: codegree,
                });
            }
        }
    }
    CheckReport::from_violations(Check::BrauerNesbitt, name, Some(p), violations)
}

/// Condition (‡): `exp D ≤ p^{def χ}` for every χ in a block with defect
/// group `D`.
pub fn check_dagger(name: &str, t: &CharacterTable, p: u64) -> CheckReport {
    let blocks = block_partition(t, p);
    let mut violations = Vec::new();
    for (b, block) in blocks.blocks.iter().enumerate() {
        for &chi in &block.characters {
            let def = char_defect(t, chi, p);
            let bound = p.pow(def);
            if block.exponent > bound {
                violations.push(Violation {
                    character: chi,
                    class: None,
                    block: Some(b),
                    defect: Some(def),
                    lhs: block.exponent,
                    rhs: bound,
                });
            }
        }
    }
    CheckReport::from_violations(Check::Dagger, name, Some(p), violations)
}

/// Condition (‡*): `exp(D/Z(G)_p) ≤ (|G:Z(G)|/χ(1))_p`. With a group the
/// exponent is computed from coset orders, otherwise from power maps.
pub fn check_dagger_star(name: &str, t: &CharacterTable, p: u64, g: Option<&FiniteGroup>) -> CheckReport {
    let blocks = block_partition(t, p);
    let z = center_order(t);
    let mut violations = Vec::new();
    for (b, block) in blocks.blocks.iter().enumerate() {
        let exp = match g {
            Some(g) => defect_group_exponent_mod_center(t, block, p, g),
            None => defect_group_exponent_mod_center_from_table(t, block, p),
        };
        for &chi in &block.characters {
            let bound = p_part(t.order() / z / t.degree(chi), p);
            if exp > bound {
                violations.push(Violation {
                    character: chi,
                    class: None,
                    block: Some(b),
                    defect: Some(char_defect(t, chi, p)),
                    lhs: exp,
                    rhs: bound,
                });
            }
        }
    }
    CheckReport::from_violations(Check::DaggerStar, name, Some(p), violations)
}

/// Condition (*) for a nearly simple `H`: with `L = [H, H]` quasi-simple and
/// `Z(L) = Z(H)` cyclic, every faithful χ and every `h` with `χ(h) ≠ 0` and
/// `H = L⟨h⟩` satisfy `o(hZ(H)) | |H:Z(H)|/χ(1)`.
///
/// `t` must be the table computed from `h` (class indices agree).
pub fn check_condition_star(name: &str, h: &FiniteGroup, t: &CharacterTable) -> CheckReport {
    let na = |note: &str| CheckReport::not_applicable(Check::ConditionStar, name, None, note.to_string());
    let l = h.derived_subgroup();
    let z = h.center();
    if !l.is_quasisimple() {
        return na("[H,H] is not quasi-simple");
    }
    let zl = l.center();
    if zl.order() != z.order() || !z.elements().iter().all(|x| zl.contains(x)) {
        return na("Z([H,H]) differs from Z(H)");
    }
    if !z.elements().iter().any(|x| z.element_order(x) == z.order()) {
        return na("Z(H) is not cyclic");
    }
    let index = h.order() / l.order();
    let reps: Vec<_> = h.classes().iter().map(|c| c.representative.clone()).collect();
    let coset = |x: &crate::group::GroupElement| h.coset_order(l, x).expect("representatives lie in H");
    let cyclic_top = reps.iter().any(|x| coset(x) == index);
    let generates = |x: &crate::group::GroupElement| -> bool {
        if cyclic_top {
            coset(x) == index
        } else {
            let mut gens = l.generators().to_vec();
            gens.push(x.clone());
            h.subgroup(&gens).map(|s| s.order() == h.order()).unwrap_or(false)
        }
    };
    let top: Vec<bool> = reps.iter().map(generates).collect();
    let mut violations = Vec::new();
    for chi in 0..t.values().len() {
        if !t.is_faithful(chi) {
            continue;
        }
        let bound = h.order() / z.order() / t.degree(chi);
        for (c, x) in reps.iter().enumerate() {
            if !top[c] || t.value(chi, c).is_zero() {
                continue;
            }
            let o = h.coset_order(z, x).expect("representatives lie in H");
            if !bound.is_multiple_of(o) {
                violations.push(Violation {
                    character: chi,
                    class: Some(c),
                    block: None,
                    defect: None,
                    lhs: o,
                    rhs: bound,
                });
            }
        }
    }
    let mut report = CheckReport::from_violations(Check::ConditionStar, name, None, violations);
    report.notes.push(format!("|H:L| = {index}, |Z(H)| = {}", z.order()));
    report
}

/// Whether every block at `p` has defect at most one.
pub fn small_defect_everywhere(t: &CharacterTable, p: u64) -> bool {
    block_partition(t, p).blocks.iter().all(|b| b.defect <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::group::families::*;

    #[test]
    fn gl23_fails_dagger_at_two() {
        let g = general_linear(2, 3).unwrap();
        let t = character_table(&g).unwrap();
        let r = check_dagger("gl23", &t, 2);
        assert_eq!(r.status, Status::Fail);
        assert!(r.violations.iter().any(|v| v.lhs == 8 && v.rhs == 4));
        assert!(check_dagger("gl23", &t, 3).passed());
        assert!(check_wilde("gl23", &t).passed());
        assert!(check_brauer_nesbitt("gl23", &t, 2).passed());
    }

    #[test]
    fn condition_star_filters() {
        let s5 = symmetric(5);
        let t = character_table(&s5).unwrap();
        assert_eq!(check_condition_star("s5", &s5, &t).status, Status::Pass);
        let s4 = symmetric(4);
        let t = character_table(&s4).unwrap();
        assert_eq!(check_condition_star("s4", &s4, &t).status, Status::NotApplicable);
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
    }
}
