//! Brauer p-blocks, defects and defect-group exponents from a character table.
//!
//! Two characters lie in the same p-block when their central characters agree
//! modulo a prime ideal above `p` on every class. The ideal is fixed by
//! [`ReductionMap`]. Defect groups are never built: the p-element classes
//! meeting a defect group are exactly those on which some character of the
//! block is nonzero, and the exponent is read off their orders.

use std::collections::BTreeMap;

use crate::arith::{is_p_power, multiplicative_order, p_part, valuation};
use crate::chartab::{central_character, CharacterTable, Cyclotomic};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::poly::{self, Poly};

/// Reduction `Z[ζ_e] → F_{p^m}` modulo a prime ideal above `p`.
///
/// With `e = p^a e'`, `p ∤ e'`, the target is `F_p[x]/(f)` for an irreducible
/// factor `f` of Φ_{e'} modulo `p`, and `ζ_e ↦ x̄`.
#[derive(Clone, Debug)]
pub struct ReductionMap {
    e: u64,
    p: u64,
    modulus: Poly,
}

impl ReductionMap {
    /// The reduction through the least factor (compared leading coefficient
    /// first).
    pub fn new(e: u64, p: u64) -> Self {
        Self::with_factor(e, p, 0).expect("Φ_{e'} has at least one factor")
    }

    /// The reduction through the factor with the given index in the sorted
    /// factor list.
    pub fn with_factor(e: u64, p: u64, index: usize) -> Result<Self> {
        let factors = Self::factors(e, p);
        let modulus = factors.get(index).cloned().ok_or_else(|| {
            Error::InvalidArgument(format!("Φ has only {} factors mod {p}", factors.len()))
        })?;
        Ok(ReductionMap { e, p, modulus })
    }

    /// Irreducible factors of Φ_{e'} modulo `p`, sorted.
    pub fn factors(e: u64, p: u64) -> Vec<Poly> {
        let e_prime = e / p_part(e, p);
        let m = multiplicative_order(p % e_prime.max(1), e_prime) as usize;
        let phi = poly::cyclotomic_mod(e_prime, p);
        poly::equal_degree_factors(&phi, m.max(1), p)
    }

    /// Degree `m` of the residue field over F_p.
    pub fn residue_degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Image of a value whose conductor divides `e`, as a coefficient vector
    /// of length `m`.
    pub fn reduce(&self, x: &Cyclotomic) -> Vec<u64> {
        let c = x.conductor();
        assert_eq!(self.e % c, 0, "conductor {c} does not divide {}", self.e);
        let step = self.e / c;
        let p = self.p;
        let m = self.residue_degree();
        // x̄ has order e' dividing m-th roots; reduce exponents of x̄ first
        let xbar_order = self.e / p_part(self.e, p);
        let mut acc = vec![0u64; m];
        for (i, &coef) in x.coeffs().iter().enumerate() {
            if coef == 0 {
                continue;
            }
            let k = (i as u64 * step) % xbar_order;
            let power = poly::pow_mod_poly(&[0, 1], k, &self.modulus, p);
            let cm = coef.rem_euclid(p as i64) as u64;
            for (a, &b) in acc.iter_mut().zip(&power) {
                *a = (*a + cm * b) % p;
            }
        }
        acc
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Table rows, increasing.
    pub characters: Vec<usize>,
    /// `max def(χ)` over the block.
    pub defect: u32,
    /// p-element classes on which some character of the block is nonzero.
    pub geoff_set: Vec<usize>,
    /// `exp(D)`: the largest element order over the geoff set.
    pub exponent: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub prime: u64,
    /// Blocks ordered by their first character; the principal block is first.
    pub blocks: Vec<Block>,
}

impl BlockDecomposition {
    pub fn block_of(&self, chi: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.characters.contains(&chi))
            .expect("blocks partition Irr(G)")
    }

    /// Sets of characters, for comparing partitions.
    pub fn partition(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|b| b.characters.clone()).collect()
    }
}

/// `def(χ)` with `p^{def(χ)} = (|G|/χ(1))_p`.
pub fn char_defect(t: &CharacterTable, chi: usize, p: u64) -> u32 {
    valuation(t.order(), p) - valuation(t.degree(chi), p)
}

/// The p-blocks of `t`, through the default reduction map.
pub fn block_partition(t: &CharacterTable, p: u64) -> BlockDecomposition {
    block_partition_with(t, p, &ReductionMap::new(t.exponent(), p))
}

/// The p-blocks of `t`, through a chosen reduction map for `exp G`.
pub fn block_partition_with(t: &CharacterTable, p: u64, map: &ReductionMap) -> BlockDecomposition {
    let r = t.num_classes();
    let mut groups: BTreeMap<Vec<Vec<u64>>, Vec<usize>> = BTreeMap::new();
    for chi in 0..t.values().len() {
        let key: Vec<Vec<u64>> = (0..r)
            .map(|k| {
                let omega = central_character(t, chi, k).expect("central characters are integral");
                map.reduce(&omega)
            })
            .collect();
        groups.entry(key).or_default().push(chi);
    }
    let mut parts: Vec<Vec<usize>> = groups.into_values().collect();
    parts.sort();
    let blocks = parts
        .into_iter()
        .map(|characters| {
            let defect = characters.iter().map(|&c| char_defect(t, c, p)).max().unwrap();
            let geoff_set = geoff_set(t, &characters, p);
            let exponent = geoff_set.iter().map(|&c| t.classes()[c].order).max().unwrap_or(1);
            Block { characters, defect, geoff_set, exponent }
        })
        .collect();
    BlockDecomposition { prime: p, blocks }
}

/// p-element classes on which some character in `characters` is nonzero.
pub fn geoff_set(t: &CharacterTable, characters: &[usize], p: u64) -> Vec<usize> {
    t.p_element_classes(p)
        .into_iter()
        .filter(|&c| characters.iter().any(|&chi| !t.value(chi, c).is_zero()))
        .collect()
}

/// `exp(D)` for a block.
pub fn defect_group_exponent(t: &CharacterTable, block: &Block) -> u64 {
    block.geoff_set.iter().map(|&c| t.classes()[c].order).max().unwrap_or(1)
}

/// `exp(D/Z(G)_p)`, by coset orders in the group the table was computed from
/// (class indices must agree).
pub fn defect_group_exponent_mod_center(
    t: &CharacterTable,
    block: &Block,
    p: u64,
    g: &FiniteGroup,
) -> u64 {
    let zp: Vec<_> = g
        .center()
        .elements()
        .iter()
        .filter(|z| is_p_power(g.element_order(z), p))
        .cloned()
        .collect();
    let zp = g.subgroup(&zp).expect("central elements lie in the group");
    debug_assert_eq!(t.num_classes(), g.classes().len());
    block
        .geoff_set
        .iter()
        .map(|&c| {
            g.coset_order(&zp, &g.classes()[c].representative)
                .expect("class representatives lie in the group")
        })
        .max()
        .unwrap_or(1)
}

/// `exp(D/Z(G)_p)` from table data alone: the least `p^k` sending each
/// geoff-set class into a central p-class under the power maps.
pub fn defect_group_exponent_mod_center_from_table(t: &CharacterTable, block: &Block, p: u64) -> u64 {
    let central: Vec<bool> = t
        .classes()
        .iter()
        .map(|c| c.size == 1 && is_p_power(c.order, p))
        .collect();
    block
        .geoff_set
        .iter()
        .map(|&c| {
            let class = &t.classes()[c];
            let mut q = 1;
            while !central[class.power(q)] {
                q *= p;
            }
            q
        })
        .max()
        .unwrap_or(1)
}

/// `|Z(G)|` read from the table: the number of classes of size one.
pub fn center_order(t: &CharacterTable) -> u64 {
    t.classes().iter().filter(|c| c.size == 1).count() as u64
}
