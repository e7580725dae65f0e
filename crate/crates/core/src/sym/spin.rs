//! Strict partitions, bars and spin characters of the double covers 2.S_n
//! and 2.A_n.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::{strict_partitions, Partition};
use crate::chartab::CharacterTable;
use crate::checks::{Check, CheckReport, Violation};
use crate::error::{Error, Result};

/// A partition into distinct parts.
pub type BarPartition = Partition;

fn require_strict(lambda: &Partition) -> Result<()> {
    if lambda.parts().windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidArgument(format!("{lambda} has repeated parts")));
    }
    Ok(())
}

/// Bar lengths: row `i` contributes `{1..λ_i} ∪ {λ_i + λ_j : j > i}` with
/// `{λ_i - λ_j : j > i}` removed.
pub fn bar_lengths(lambda: &Partition) -> Result<Vec<u64>> {
    require_strict(lambda)?;
    let parts = lambda.parts();
    let mut out = Vec::new();
    for (i, &li) in parts.iter().enumerate() {
        let later = &parts[i + 1..];
        for x in 1..=li {
            if !later.iter().any(|&lj| li - lj == x) {
                out.push(x as u64);
            }
        }
        out.extend(later.iter().map(|&lj| (li + lj) as u64));
    }
    Ok(out)
}

/// Degree of the spin character ⟨λ⟩ of 2.S_n by Schur's product
/// `2^{⌊(n-r)/2⌋} n!/Π λ_i! · Π_{i<j} (λ_i - λ_j)/(λ_i + λ_j)`.
pub fn spin_degree(lambda: &Partition) -> Result<BigUint> {
    require_strict(lambda)?;
    let parts = lambda.parts();
    let n = lambda.size() as u64;
    let r = parts.len() as u64;
    let fact = |k: u64| -> BigUint { (1..=k).product() };
    let mut num = fact(n) << ((n - r) / 2) as usize;
    let mut den = BigUint::one();
    for (i, &a) in parts.iter().enumerate() {
        den *= fact(a as u64);
        for &b in &parts[i + 1..] {
            num *= (a - b) as u64;
            den *= (a + b) as u64;
        }
    }
    if !(&num % &den).is_zero() {
        return Err(Error::NonIntegral(format!("spin degree of {lambda}")));
    }
    Ok(num / den)
}

/// The same degree from the bar lengths: `2^{⌊(n-r)/2⌋} n! / Π bars`.
pub fn spin_degree_from_bars(lambda: &Partition) -> Result<BigUint> {
    let bars: BigUint = bar_lengths(lambda)?.into_iter().product();
    let n = lambda.size() as u64;
    let r = lambda.len() as u64;
    let num: BigUint = (1..=n).product::<BigUint>() << ((n - r) / 2) as usize;
    if !(&num % &bars).is_zero() {
        return Err(Error::NonIntegral(format!("bar formula for {lambda}")));
    }
    Ok(num / bars)
}

/// Whether the strict λ labels an associate pair (two spin characters of
/// 2.S_n sharing the degree).
pub fn is_associate_pair(lambda: &Partition) -> bool {
    (lambda.size() - lambda.len()) % 2 == 1
}

/// Spin character degrees of 2.S_n with multiplicities, sorted.
pub fn spin_degrees_sn(n: usize) -> Result<Vec<(u64, usize)>> {
    collect_degrees(n, |lambda, d| {
        if is_associate_pair(lambda) {
            vec![d.clone(), d.clone()]
        } else {
            vec![d.clone()]
        }
    })
}

/// Spin character degrees of 2.A_n with multiplicities, sorted.
pub fn spin_degrees_an(n: usize) -> Result<Vec<(u64, usize)>> {
    collect_degrees(n, |lambda, d| {
        if is_associate_pair(lambda) {
            vec![d.clone()]
        } else {
            let half = d / 2u32;
            vec![half.clone(), half]
        }
    })
}

fn collect_degrees(
    n: usize,
    f: impl Fn(&Partition, &BigUint) -> Vec<BigUint>,
) -> Result<Vec<(u64, usize)>> {
    let mut all = Vec::new();
    for lambda in strict_partitions(n) {
        let d = spin_degree(&lambda)?;
        for x in f(&lambda, &d) {
            all.push(x.to_u64().ok_or_else(|| Error::InvalidArgument("degree overflow".into()))?);
        }
    }
    all.sort_unstable();
    let mut out: Vec<(u64, usize)> = Vec::new();
    for d in all {
        match out.last_mut() {
            Some((x, m)) if *x == d => *m += 1,
            _ => out.push((d, 1)),
        }
    }
    Ok(out)
}

/// Applies one p-bar removal: the lowest part `x` admitting a move, where
/// the moves are `x → x - p` (if `x - p > 0` is not a part), deleting `x = p`,
/// or deleting `x` together with the part `p - x < x`.
fn remove_bar(parts: &mut Vec<usize>, p: usize, highest_first: bool) -> bool {
    let mut order: Vec<usize> = parts.clone();
    order.sort_unstable();
    if highest_first {
        order.reverse();
    }
    for x in order {
        if x == p {
            parts.retain(|&y| y != x);
            return true;
        }
        if x > p && !parts.contains(&(x - p)) {
            let pos = parts.iter().position(|&y| y == x).unwrap();
            parts[pos] = x - p;
            return true;
        }
        if x < p && p - x < x && parts.contains(&(p - x)) {
            parts.retain(|&y| y != x && y != p - x);
            return true;
        }
    }
    false
}

fn bar_core_with(lambda: &Partition, p: u64, highest_first: bool) -> Result<(Partition, usize)> {
    if p == 2 {
        return Err(Error::EvenPrimeUnsupported(p));
    }
    require_strict(lambda)?;
    let mut parts = lambda.parts().to_vec();
    let mut weight = 0;
    while remove_bar(&mut parts, p as usize, highest_first) {
        weight += 1;
    }
    Ok((Partition::from_multiset(parts), weight))
}

/// The p-bar core (odd `p`), removing the lowest available bar each time.
pub fn bar_core(lambda: &Partition, p: u64) -> Result<Partition> {
    Ok(bar_core_with(lambda, p, false)?.0)
}

/// Number of p-bars removed on the way to the core.
pub fn bar_weight(lambda: &Partition, p: u64) -> Result<usize> {
    Ok(bar_core_with(lambda, p, false)?.1)
}

/// Core and weight removing the highest available bar first; equal to the
/// canonical order.
pub fn bar_core_highest_first(lambda: &Partition, p: u64) -> Result<(Partition, usize)> {
    bar_core_with(lambda, p, true)
}

/// Spin vanishing: a spin character of degree `d` of a double cover can be
/// nonzero at `g` only if `g` projects to an element of odd order or to a
/// cycle type λ (strict) with `spin_degree(λ) = d` (for 2.A_n, `d` or `2d`).
///
/// `cycle_types[c]` is the projected cycle type of class `c`; characters are
/// treated as spin when faithful.
pub fn verify_spin_vanishing(
    name: &str,
    t: &CharacterTable,
    cycle_types: &[Vec<usize>],
) -> Result<CheckReport> {
    if cycle_types.len() != t.num_classes() {
        return Err(Error::MissingProjection);
    }
    let mut violations = Vec::new();
    let mut spin = 0;
    for chi in 0..t.values().len() {
        if !t.is_faithful(chi) {
            continue;
        }
        spin += 1;
        let d = BigUint::from(t.degree(chi));
        for (c, ct) in cycle_types.iter().enumerate() {
            if t.value(chi, c).is_zero() {
                continue;
            }
            let mu = Partition::from_multiset(ct.clone());
            if mu.parts().iter().all(|&x| x % 2 == 1) {
                continue;
            }
            let labelled = mu.parts().windows(2).all(|w| w[0] != w[1])
                && spin_degree(&mu)
                    .map(|sd| sd == d || sd == &d * 2u32)
                    .unwrap_or(false);
            if !labelled {
                violations.push(Violation {
                    character: chi,
                    class: Some(c),
                    block: None,
                    defect: None,
                    lhs: mu.lcm(),
                    rhs: t.degree(chi),
                });
            }
        }
    }
    let mut report = CheckReport::from_violations(Check::SpinVanishing, name, None, violations);
    report.notes.push(format!("{spin} spin characters"));
    Ok(report)
}
