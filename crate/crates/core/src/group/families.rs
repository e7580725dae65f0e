//! Standard families with fixed generating sets.
//!
//! These are used by tests and by the corpus generator; the shipped corpus
//! files record the generators explicitly.

use super::element::{Domain, GroupElement};
use super::field::SmallField;
use super::FiniteGroup;
use crate::error::{Error, Result};

fn cycle(degree: usize, points: &[usize]) -> GroupElement {
    Domain::permutations(degree)
        .permutation_from_cycles(&[points])
        .expect("valid cycle")
}

fn build(domain: Domain, gens: Vec<GroupElement>) -> FiniteGroup {
    FiniteGroup::enumerate(domain, gens).expect("family members are within the bound")
}

/// S_n on `{1..n}`, generated by `(1 2)` and `(1 2 ... n)`.
pub fn symmetric(n: usize) -> FiniteGroup {
    let domain = Domain::permutations(n.max(1));
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle(n, &[1, 2]));
    }
    if n >= 3 {
        gens.push(cycle(n, &(1..=n).collect::<Vec<_>>()));
    }
    build(domain, gens)
}

/// A_n on `{1..n}`, generated by `(1 2 3)` and an `n`- or `(n-1)`-cycle of
/// even parity.
pub fn alternating(n: usize) -> FiniteGroup {
    let domain = Domain::permutations(n.max(1));
    let mut gens = Vec::new();
    if n >= 3 {
        gens.push(cycle(n, &[1, 2, 3]));
    }
    if n >= 4 {
        let long: Vec<usize> = if n % 2 == 1 { (1..=n).collect() } else { (2..=n).collect() };
        gens.push(cycle(n, &long));
    }
    build(domain, gens)
}

/// C_n as the regular action of an `n`-cycle.
pub fn cyclic(n: usize) -> FiniteGroup {
    let n = n.max(1);
    let gens = if n >= 2 { vec![cycle(n, &(1..=n).collect::<Vec<_>>())] } else { vec![] };
    build(Domain::permutations(n), gens)
}

/// Dihedral group of the given order `2m` (`m ≥ 3`) acting on the vertices
/// of an `m`-gon.
pub fn dihedral(order: usize) -> Result<FiniteGroup> {
    if !order.is_multiple_of(2) || order < 6 {
        return Err(Error::InvalidArgument(format!("no dihedral group of order {order}")));
    }
    let m = order / 2;
    let domain = Domain::permutations(m);
    let rotation = cycle(m, &(1..=m).collect::<Vec<_>>());
    let reflection: Vec<usize> = (0..m).map(|i| (m - i) % m).collect();
    let reflection = domain.permutation(&reflection)?;
    FiniteGroup::enumerate(domain, vec![rotation, reflection])
}

/// Dicyclic group `⟨a, b | a^{2k}, b^2 = a^k, a^b = a^{-1}⟩` of the given
/// order `4k` (`k ≥ 2`), in its regular permutation representation. For
/// orders that are powers of two this is the generalised quaternion group.
pub fn quaternion(order: usize) -> FiniteGroup {
    dicyclic(order).expect("order divisible by 4 and at least 8")
}

pub fn dicyclic(order: usize) -> Result<FiniteGroup> {
    if !order.is_multiple_of(4) || order < 8 {
        return Err(Error::InvalidArgument(format!("no dicyclic group of order {order}")));
    }
    let m = order / 2;
    // a^i b^j is point i + m j; right multiplication gives the regular action
    let mul = |(i, j): (usize, usize), (k, l): (usize, usize)| -> (usize, usize) {
        let k = if j == 1 { (m - k) % m } else { k };
        let mut i = (i + k) % m;
        let mut j = j + l;
        if j == 2 {
            i = (i + m / 2) % m;
            j = 0;
        }
        (i, j)
    };
    let domain = Domain::permutations(order);
    let right = |g: (usize, usize)| -> Result<GroupElement> {
        let images: Vec<usize> = (0..order)
            .map(|x| {
                let (i, j) = mul((x % m, x / m), g);
                i + m * j
            })
            .collect();
        domain.permutation(&images)
    };
    let gens = vec![right((1, 0))?, right((0, 1))?];
    FiniteGroup::enumerate(domain, gens)
}

fn elementary(n: usize, i: usize, j: usize, c: u16) -> Vec<u16> {
    let mut m = vec![0u16; n * n];
    for d in 0..n {
        m[d * n + d] = 1;
    }
    m[i * n + j] = c;
    m
}

/// Transvections `I + c E_{i,i+1}`, `I + c E_{i+1,i}` with `c` running over
/// the power basis `1, x, .., x^{k-1}` of F_q.
fn sl_generators(domain: &Domain, field: &SmallField, n: usize) -> Result<Vec<GroupElement>> {
    let p = field.characteristic() as u16;
    let basis: Vec<u16> = (0..field.degree()).map(|t| p.pow(t)).collect();
    let mut gens = Vec::new();
    for i in 0..n.saturating_sub(1) {
        for &c in &basis {
            gens.push(domain.matrix(&elementary(n, i, i + 1, c))?);
            gens.push(domain.matrix(&elementary(n, i + 1, i, c))?);
        }
    }
    Ok(gens)
}

/// SL_n(q) over the shipped field of order `q`.
pub fn special_linear(n: usize, q: u64) -> Result<FiniteGroup> {
    let field = SmallField::standard(q)?;
    let domain = Domain::matrices(field.clone(), n);
    let gens = sl_generators(&domain, &field, n)?;
    FiniteGroup::enumerate(domain, gens)
}

/// GL_n(q): SL_n(q) together with `diag(ω, 1, .., 1)` for the primitive
/// element `ω`.
pub fn general_linear(n: usize, q: u64) -> Result<FiniteGroup> {
    let field = SmallField::standard(q)?;
    let domain = Domain::matrices(field.clone(), n);
    let mut gens = sl_generators(&domain, &field, n)?;
    if q > 2 {
        gens.push(domain.matrix(&elementary(n, 0, 0, field.primitive_element()))?);
    }
    FiniteGroup::enumerate(domain, gens)
}
