//! Murnaghan–Nakayama rule on the abacus.
//!
//! A partition is a set of beads (its beta-numbers, `n` beads for a partition
//! of `n`); removing a rim `k`-hook moves one bead from `b` to an empty
//! position `b - k`, with sign `(-1)^{beads strictly between}`.

use std::collections::HashMap;

use rayon::prelude::*;

use super::{partitions, Partition};
use crate::error::{Error, Result};

/// Largest `n` accepted; values of S_n then fit comfortably in `i128`.
pub const MN_MAX_N: usize = 40;

struct Evaluator<'a> {
    cycle_type: &'a [usize],
    memo: HashMap<(u128, usize), i128>,
}

impl Evaluator<'_> {
    fn value(&mut self, mask: u128, depth: usize) -> i128 {
        if depth == self.cycle_type.len() {
            return 1;
        }
        if let Some(&v) = self.memo.get(&(mask, depth)) {
            return v;
        }
        let k = self.cycle_type[depth];
        let mut acc = 0i128;
        let mut rest = mask;
        while rest != 0 {
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if b < k || mask & (1u128 << (b - k)) != 0 {
                continue;
            }
            // beads strictly between b - k and b
            let between = (mask >> (b - k + 1)) & ((1u128 << (k - 1)) - 1);
            let sign = if between.count_ones().is_multiple_of(2) { 1 } else { -1 };
            let moved = (mask & !(1u128 << b)) | (1u128 << (b - k));
            acc += sign * self.value(moved, depth + 1);
        }
        self.memo.insert((mask, depth), acc);
        acc
    }
}

fn bead_mask(lambda: &Partition, n: usize) -> u128 {
    lambda.beta_set(n).iter().fold(0u128, |m, &b| m | (1u128 << b))
}

fn check_sizes(lambda: &Partition, cycle_type: &Partition) -> Result<usize> {
    let n = lambda.size();
    if cycle_type.size() != n {
        return Err(Error::InvalidArgument(format!(
            "{lambda} and cycle type {cycle_type} have different sizes"
        )));
    }
    if n > MN_MAX_N {
        return Err(Error::InvalidArgument(format!("n = {n} exceeds {MN_MAX_N}")));
    }
    Ok(n)
}

/// `χ^λ` on the class of permutations of the given cycle type.
pub fn mn_value(lambda: &Partition, cycle_type: &Partition) -> Result<i128> {
    let n = check_sizes(lambda, cycle_type)?;
    let mut ev = Evaluator { cycle_type: cycle_type.parts(), memo: HashMap::new() };
    Ok(ev.value(bead_mask(lambda, n), 0))
}

/// The character table of S_n: rows and columns both indexed by
/// [`partitions`]`(n)` (characters by λ, classes by cycle type).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MnTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    /// `values[λ][μ]`.
    pub values: Vec<Vec<i128>>,
}

impl MnTable {
    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.partitions.iter().position(|p| p == lambda)
    }

    /// Class size `n! / z_μ`.
    pub fn class_size(&self, mu: &Partition) -> u128 {
        let fact: u128 = (1..=self.n as u128).product();
        let mut z: u128 = 1;
        let mut i = 0;
        let parts = mu.parts();
        while i < parts.len() {
            let k = parts[i];
            let mult = parts[i..].iter().take_while(|&&x| x == k).count();
            z *= (k as u128).pow(mult as u32) * (1..=mult as u128).product::<u128>();
            i += mult;
        }
        fact / z
    }
}

pub fn mn_table(n: usize) -> Result<MnTable> {
    if n > MN_MAX_N {
        return Err(Error::InvalidArgument(format!("n = {n} exceeds {MN_MAX_N}")));
    }
    let parts = partitions(n);
    let masks: Vec<u128> = parts.iter().map(|l| bead_mask(l, n)).collect();
    let columns: Vec<Vec<i128>> = parts
        .par_iter()
        .map(|mu| {
            let mut ev = Evaluator { cycle_type: mu.parts(), memo: HashMap::new() };
            masks.iter().map(|&m| ev.value(m, 0)).collect()
        })
        .collect();
    let values = (0..parts.len())
        .map(|l| columns.iter().map(|col| col[l]).collect())
        .collect();
    Ok(MnTable { n, partitions: parts, values })
}
