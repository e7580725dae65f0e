//! Partition combinatorics for symmetric groups and their double covers.
//!
//! Nothing here enumerates a group. The block theory of S_n is modelled by
//! p-cores and weights, character values by the Murnaghan–Nakayama rule and
//! spin characters of 2.S_n by strict partitions and their bar cores.

pub mod alternating;
pub mod mn;
pub mod spin;

use std::fmt;

use num_bigint::BigUint;

use crate::checks::{Check, CheckReport, Violation};
use crate::error::{Error, Result};

pub use alternating::{an_character_data, an_value, verify_a10_phenomenon, AnCharacter};
pub use mn::{mn_table, mn_value, MnTable};
pub use spin::{bar_core, bar_lengths, bar_weight, spin_degree, BarPartition};

/// An integer partition, parts weakly decreasing and positive.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates that the parts are weakly decreasing; zero parts are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidArgument(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts first, so any multiset of positive integers is accepted.
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&x| x >= j).count()).collect())
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Hook lengths, row by row.
    pub fn hook_lengths(&self) -> Vec<u64> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                out.push((row - j + conj.0[j] - i - 1) as u64);
            }
        }
        out
    }

    /// `n! / Π hooks`, the degree of the character χ^λ of S_n.
    pub fn degree(&self) -> BigUint {
        let n = self.size() as u64;
        let fact: BigUint = (1..=n).product();
        let hooks: BigUint = self.hook_lengths().into_iter().product();
        fact / hooks
    }

    /// Beta-numbers `λ_i + (k - 1 - i)` for `k ≥ len` beads, decreasing.
    pub fn beta_set(&self, k: usize) -> Vec<usize> {
        assert!(k >= self.len());
        (0..k)
            .map(|i| self.0.get(i).copied().unwrap_or(0) + k - 1 - i)
            .collect()
    }

    /// Inverse of [`Self::beta_set`] for any set of distinct beads.
    pub fn from_beta_set(beads: &[usize]) -> Self {
        let mut b = beads.to_vec();
        b.sort_unstable_by(|x, y| y.cmp(x));
        let k = b.len();
        Partition::from_multiset((0..k).map(|i| b[i] - (k - 1 - i)).collect())
    }

    /// Cycle type of an element with the given p-power-free structure: the
    /// cycle type of `g_p` when `self` is the cycle type of `g`.
    pub fn p_part_cycle_type(&self, p: u64) -> Partition {
        let mut parts = Vec::new();
        for &l in &self.0 {
            let lp = crate::arith::p_part(l as u64, p) as usize;
            parts.extend(std::iter::repeat_n(lp, l / lp));
        }
        Partition::from_multiset(parts)
    }

    /// Least common multiple of the parts: the order of a permutation of this
    /// cycle type.
    pub fn lcm(&self) -> u64 {
        self.0.iter().fold(1, |acc, &x| crate::arith::lcm(acc, x as u64))
    }

    /// Sign of a permutation of this cycle type.
    pub fn is_even(&self) -> bool {
        self.0.iter().filter(|&&x| x % 2 == 0).count() % 2 == 0
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `n`, in reverse lexicographic order: `(n)` first,
/// `(1^n)` last.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            rec(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` into distinct parts, in reverse lexicographic order.
pub fn strict_partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            rec(n - first, first - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// The p-core and p-weight, removing rim p-hooks on the abacus by always
/// moving the lowest removable bead.
pub fn core_and_weight(lambda: &Partition, p: usize) -> (Partition, usize) {
    assert!(p >= 2);
    let mut beads = lambda.beta_set(lambda.len());
    let mut weight = 0;
    loop {
        beads.sort_unstable();
        let Some(pos) = beads.iter().position(|&b| b >= p && !beads.contains(&(b - p))) else {
            break;
        };
        beads[pos] -= p;
        weight += 1;
    }
    (Partition::from_beta_set(&beads), weight)
}

pub fn p_core(lambda: &Partition, p: usize) -> Partition {
    core_and_weight(lambda, p).0
}

pub fn p_weight(lambda: &Partition, p: usize) -> usize {
    core_and_weight(lambda, p).1
}

/// A block of S_n predicted by its p-core.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnBlock {
    pub core: Partition,
    pub weight: usize,
    /// Members in the order of [`partitions`].
    pub members: Vec<Partition>,
}

/// Partitions of `n` grouped by p-core, blocks ordered by first member.
pub fn sn_blocks(n: usize, p: usize) -> Vec<SnBlock> {
    let mut blocks: Vec<SnBlock> = Vec::new();
    for lambda in partitions(n) {
        let (core, weight) = core_and_weight(&lambda, p);
        match blocks.iter_mut().find(|b| b.core == core) {
            Some(b) => b.members.push(lambda),
            None => blocks.push(SnBlock { core, weight, members: vec![lambda] }),
        }
    }
    blocks
}

/// `exp(D) = p^{r+1}` for a block of weight `w ≥ 1`, where `p^r ≤ w < p^{r+1}`.
pub fn sn_defect_exponent(w: usize, p: u64) -> Result<u64> {
    if w == 0 {
        return Err(Error::ZeroWeight);
    }
    let mut q = p;
    while q <= w as u64 {
        q *= p;
    }
    Ok(q)
}

fn big_valuation(n: &BigUint, p: u64) -> u32 {
    let p = BigUint::from(p);
    let zero = BigUint::from(0u32);
    let mut n = n.clone();
    let mut v = 0;
    while &n % &p == zero {
        n /= &p;
        v += 1;
    }
    v
}

/// For every λ ⊢ n, the chain `|S_n|_p / χ^λ(1)_p ≥ p^w ≥ p w ≥ exp D`.
///
/// Violations carry the index of λ in [`partitions`]; `lhs` and `rhs` are
/// the two sides of the first failing inequality.
pub fn verify_sn_dagger(n: usize, p: u64) -> CheckReport {
    let fact: BigUint = (1..=n as u64).product();
    let nu_fact = big_valuation(&fact, p);
    let mut violations = Vec::new();
    for (i, lambda) in partitions(n).iter().enumerate() {
        let w = p_weight(lambda, p as usize);
        let codegree_p = p.pow(nu_fact - big_valuation(&lambda.degree(), p));
        let p_w = p.pow(w as u32);
        let exp = sn_defect_exponent(w, p).unwrap_or(1);
        let chain: [(u64, u64); 3] = [(codegree_p, p_w), (p_w, p * w as u64), (p * w as u64, exp)];
        let links = if w == 0 { &chain[..1] } else { &chain[..] };
        if let Some(&(lhs, rhs)) = links.iter().find(|(a, b)| a < b) {
            violations.push(Violation { character: i, class: None, block: None, defect: None, lhs, rhs });
        }
    }
    let mut report =
        CheckReport::from_violations(Check::SymDagger, &format!("S{n}"), Some(p), violations);
    report.notes.push(format!("{} partitions", partitions(n).len()));
    report
}
