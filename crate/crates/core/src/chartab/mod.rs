//! Character tables by the Dixon–Schneider method.
//!
//! The class sums span the center of the group algebra, and the central
//! characters `ω_χ` are their common eigenvectors. Working over a prime field
//! F_ℓ with `ℓ ≡ 1 (mod exp G)`, the eigenvectors are found by splitting
//! F_ℓ^r under the class matrices one after another. Each eigenvector gives a
//! character modulo ℓ, and the values are lifted to Z[ζ] from the
//! multiplicities of the eigenvalues of `ρ(g)`.

pub mod cyclotomic;
pub mod modular;

use std::cmp::Ordering;

use rayon::prelude::*;

pub use cyclotomic::{Accumulator, Cyclotomic};

use crate::arith::{inv_mod, is_prime, isqrt, lcm, mul_mod, pow_mod, primitive_root};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::poly;
use modular::{char_poly, kernel, mat_vec, rref, Matrix};

/// Number of Dixon primes tried before giving up.
const MAX_PRIME_ATTEMPTS: usize = 8;

/// Class data a table carries independently of any group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub order: u64,
    pub size: u64,
    /// `powers[k]` is the class of `g^k`, `0 ≤ k < order`.
    pub powers: Vec<usize>,
}

impl ClassInfo {
    /// Class of `g^{-1}`.
    pub fn inverse_class(&self) -> usize {
        self.powers[(self.order - 1) as usize]
    }

    pub fn power(&self, k: u64) -> usize {
        self.powers[(k % self.order) as usize]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    order: u64,
    classes: Vec<ClassInfo>,
    /// Rows are characters, columns are classes.
    values: Vec<Vec<Cyclotomic>>,
}

impl CharacterTable {
    /// Assembles a table from raw parts without validation; see
    /// [`verify_orthogonality`].
    pub fn from_parts(order: u64, classes: Vec<ClassInfo>, values: Vec<Vec<Cyclotomic>>) -> Self {
        CharacterTable { order, classes, values }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.classes.iter().fold(1, |acc, c| lcm(acc, c.order))
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn values(&self) -> &[Vec<Cyclotomic>] {
        &self.values
    }

    pub fn value(&self, chi: usize, class: usize) -> &Cyclotomic {
        &self.values[chi][class]
    }

    pub fn set_value(&mut self, chi: usize, class: usize, v: Cyclotomic) {
        self.values[chi][class] = v;
    }

    pub fn degree(&self, chi: usize) -> u64 {
        self.values[chi][0]
            .as_integer()
            .and_then(|d| u64::try_from(d).ok())
            .expect("degrees are positive integers")
    }

    pub fn degrees(&self) -> Vec<u64> {
        (0..self.values.len()).map(|i| self.degree(i)).collect()
    }

    /// Index of the trivial character.
    pub fn trivial(&self) -> usize {
        self.values
            .iter()
            .position(|row| row.iter().all(|v| v.as_integer() == Some(1)))
            .expect("a table contains the trivial character")
    }

    /// Whether `χ(g) = χ(1)` only on the identity class.
    pub fn is_faithful(&self, chi: usize) -> bool {
        let d = Cyclotomic::integer(self.degree(chi) as i64);
        self.values[chi].iter().skip(1).all(|v| *v != d)
    }

    /// Classes whose elements have `p`-power order, the identity included.
    pub fn p_element_classes(&self, p: u64) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&c| crate::arith::is_p_power(self.classes[c].order, p))
            .collect()
    }

    /// Sorts rows canonically: by degree, then by value vectors in class
    /// order, larger coordinate vectors first (so the trivial character
    /// leads).
    pub fn canonicalize(&mut self) {
        let classes = &self.classes;
        self.values.sort_by(|a, b| row_cmp(classes, a, b));
    }
}

fn row_cmp(classes: &[ClassInfo], a: &[Cyclotomic], b: &[Cyclotomic]) -> Ordering {
    let da = a[0].as_integer().unwrap_or(0);
    let db = b[0].as_integer().unwrap_or(0);
    da.cmp(&db).then_with(|| {
        for ((x, y), c) in a.iter().zip(b).zip(classes) {
            let ord = y.coeffs_at(c.order).cmp(&x.coeffs_at(c.order));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    })
}

/// Smallest prime `ℓ ≡ 1 (mod exponent)` with `ℓ > 2√order`.
pub fn dixon_prime(order: u64, exponent: u64) -> u64 {
    next_dixon_prime(order, exponent, 0)
}

/// Smallest valid Dixon prime strictly greater than `after`.
pub fn next_dixon_prime(order: u64, exponent: u64, after: u64) -> u64 {
    let floor = 2 * isqrt(order) + 1;
    let floor = floor.max(after + 1);
    let e = exponent.max(1);
    let mut l = (floor.saturating_sub(1) / e) * e + 1;
    while l < floor || (l * l <= 4 * order) || !is_prime(l) {
        l += e;
    }
    l
}

/// Class multiplication coefficients `a[i][j][k] = #{(x, y) ∈ K_i × K_j :
/// xy = z}` for a fixed `z ∈ K_k`.
#[derive(Clone, Debug)]
pub struct ClassCoefficients {
    r: usize,
    data: Vec<u64>,
}

impl ClassCoefficients {
    pub fn num_classes(&self) -> usize {
        self.r
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.data[(i * self.r + j) * self.r + k]
    }
}

pub fn class_mult_coeffs(g: &FiniteGroup) -> ClassCoefficients {
    let classes = g.classes();
    let r = classes.len();
    let inverse_class: Vec<u32> = g
        .elements()
        .par_iter()
        .map(|x| g.class_of(&g.inverse(x)).unwrap() as u32)
        .collect();
    let per_k: Vec<Vec<u64>> = classes
        .par_iter()
        .map(|ck| {
            let z = &ck.representative;
            let mut counts = vec![0u64; r * r];
            // x ∈ K_i, y = x^{-1} z ∈ K_j; x^{-1} z = (z^{-1} x)^{-1}
            let zi = g.inverse(z);
            for (idx, x) in g.elements().iter().enumerate() {
                let i = g.class_of_index(idx);
                let w = g.index_of(&g.mul(&zi, x)).unwrap();
                let j = inverse_class[w] as usize;
                counts[i * r + j] += 1;
            }
            counts
        })
        .collect();
    let mut data = vec![0u64; r * r * r];
    for (k, counts) in per_k.iter().enumerate() {
        for ij in 0..r * r {
            data[ij * r + k] = counts[ij];
        }
    }
    ClassCoefficients { r, data }
}

/// The character table, using the smallest Dixon prime and moving to the next
/// one if splitting stalls.
pub fn character_table(g: &FiniteGroup) -> Result<CharacterTable> {
    let coeffs = class_mult_coeffs(g);
    let mut l = dixon_prime(g.order(), g.exponent());
    for _ in 0..MAX_PRIME_ATTEMPTS {
        match table_mod_prime(g, &coeffs, l) {
            Err(Error::SplitFailure { .. }) => {
                l = next_dixon_prime(g.order(), g.exponent(), l);
            }
            other => return other,
        }
    }
    Err(Error::SplitFailure { last_prime: l })
}

/// The character table computed with a caller-chosen Dixon prime.
pub fn character_table_with_prime(g: &FiniteGroup, l: u64) -> Result<CharacterTable> {
    let e = g.exponent();
    if !is_prime(l) || l % e != 1 || l * l <= 4 * g.order() || l >= 1 << 31 {
        return Err(Error::InvalidArgument(format!("{l} is not a Dixon prime for this group")));
    }
    table_mod_prime(g, &class_mult_coeffs(g), l)
}

fn table_mod_prime(g: &FiniteGroup, coeffs: &ClassCoefficients, l: u64) -> Result<CharacterTable> {
    if l >= 1 << 31 {
        return Err(Error::SplitFailure { last_prime: l });
    }
    let r = coeffs.num_classes();
    let classes: Vec<ClassInfo> = g
        .classes()
        .iter()
        .map(|c| ClassInfo { order: c.order, size: c.size, powers: c.powers.clone() })
        .collect();
    let eigvecs = split_eigenspaces(coeffs, l)?;
    if eigvecs.len() != r {
        return Err(Error::SplitFailure { last_prime: l });
    }
    let order = g.order();
    let sizes_inv: Vec<u64> = classes
        .iter()
        .map(|c| inv_mod(c.size % l, l).unwrap())
        .collect();
    let inv_cls: Vec<usize> = classes.iter().map(|c| c.inverse_class()).collect();
    let e = g.exponent();
    let z = pow_mod(primitive_root(l), (l - 1) / e, l);
    let max_degree = isqrt(order);

    let rows: Vec<Vec<Cyclotomic>> = eigvecs
        .par_iter()
        .map(|w| -> Result<Vec<Cyclotomic>> {
            // χ(1)^2 = |G| / Σ ω_i ω_{i*} / |K_i|
            let s = (0..r).fold(0u64, |acc, i| {
                (acc + mul_mod(mul_mod(w[i], w[inv_cls[i]], l), sizes_inv[i], l)) % l
            });
            let s_inv = inv_mod(s, l).ok_or(Error::SplitFailure { last_prime: l })?;
            let d2 = mul_mod(order % l, s_inv, l);
            let d = (1..=max_degree)
                .find(|&d| d * d % l == d2)
                .ok_or(Error::SplitFailure { last_prime: l })?;
            let chi: Vec<u64> = (0..r)
                .map(|i| mul_mod(mul_mod(w[i], d, l), sizes_inv[i], l))
                .collect();
            (0..r).map(|c| lift_value(&chi, &classes[c], d, e, z, l)).collect()
        })
        .collect::<Result<_>>()?;
    let mut table = CharacterTable { order, classes, values: rows };
    table.canonicalize();
    Ok(table)
}

/// Recovers `χ(g) = Σ_k m_k ζ_m^k` from the values of `χ` on the powers of
/// `g` modulo ℓ.
fn lift_value(chi: &[u64], class: &ClassInfo, d: u64, e: u64, z: u64, l: u64) -> Result<Cyclotomic> {
    let m = class.order;
    let zm = pow_mod(z, e / m, l);
    let zm_inv = inv_mod(zm, l).unwrap();
    let m_inv = inv_mod(m % l, l).unwrap();
    let mut mult = Vec::with_capacity(m as usize);
    for k in 0..m {
        let step = pow_mod(zm_inv, k, l);
        let mut acc = 0u64;
        let mut w = 1u64;
        for j in 0..m {
            acc = (acc + mul_mod(chi[class.powers[j as usize]], w, l)) % l;
            w = mul_mod(w, step, l);
        }
        let mk = mul_mod(acc, m_inv, l);
        if mk > d {
            return Err(Error::SplitFailure { last_prime: l });
        }
        mult.push(mk as i64);
    }
    Ok(Cyclotomic::from_exponent_sums(m, &mult))
}

/// Common eigenvectors of the class matrices `M_i[j][k] = a_{ijk}`,
/// normalised so the identity coordinate is 1.
fn split_eigenspaces(coeffs: &ClassCoefficients, l: u64) -> Result<Vec<Vec<u64>>> {
    let r = coeffs.num_classes();
    let identity: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut done: Vec<Vec<Vec<u64>>> = Vec::new();
    let mut pending: Vec<Vec<Vec<u64>>> = vec![identity];
    for i in 1..r {
        if pending.is_empty() {
            break;
        }
        let m: Matrix = (0..r)
            .map(|j| (0..r).map(|k| coeffs.get(i, j, k) % l).collect())
            .collect();
        let mut next = Vec::new();
        for space in pending {
            for part in split_space(&m, space, l)? {
                if part.len() == 1 {
                    done.push(part);
                } else {
                    next.push(part);
                }
            }
        }
        pending = next;
    }
    // the trivial group never enters the loop
    let (lines, rest): (Vec<_>, Vec<_>) = pending.into_iter().partition(|s| s.len() == 1);
    done.extend(lines);
    if !rest.is_empty() {
        return Err(Error::SplitFailure { last_prime: l });
    }
    done.into_iter()
        .map(|mut basis| {
            let v = basis.pop().unwrap();
            let inv = inv_mod(v[0], l).ok_or(Error::SplitFailure { last_prime: l })?;
            Ok(v.iter().map(|&x| mul_mod(x, inv, l)).collect())
        })
        .collect()
}

/// Splits an invariant subspace (RREF basis rows) into eigenspaces of `m`.
fn split_space(m: &Matrix, mut basis: Vec<Vec<u64>>, l: u64) -> Result<Vec<Vec<Vec<u64>>>> {
    let pivots = rref(&mut basis, l);
    let d = basis.len();
    if d == 1 {
        return Ok(vec![basis]);
    }
    // coordinates of M b_s in the RREF basis are its pivot entries
    let images: Vec<Vec<u64>> = basis.iter().map(|b| mat_vec(m, b, l)).collect();
    let restricted: Matrix = (0..d)
        .map(|t| (0..d).map(|s| images[s][pivots[t]]).collect())
        .collect();
    let cp = char_poly(&restricted, l);
    let roots = poly::roots(&cp, l);
    let mut parts = Vec::new();
    let mut total = 0;
    for lambda in roots {
        let shifted: Matrix = (0..d)
            .map(|t| {
                (0..d)
                    .map(|s| {
                        let diag = if s == t { lambda } else { 0 };
                        (restricted[t][s] + l - diag) % l
                    })
                    .collect()
            })
            .collect();
        let ker = kernel(&shifted, l);
        total += ker.len();
        let mut vecs: Vec<Vec<u64>> = ker
            .iter()
            .map(|c| {
                let mut v = vec![0u64; m.len()];
                for (s, &cs) in c.iter().enumerate() {
                    if cs == 0 {
                        continue;
                    }
                    for (x, &b) in v.iter_mut().zip(&basis[s]) {
                        *x = (*x + mul_mod(cs, b, l)) % l;
                    }
                }
                v
            })
            .collect();
        rref(&mut vecs, l);
        parts.push(vecs);
    }
    if total != d {
        return Err(Error::SplitFailure { last_prime: l });
    }
    Ok(parts)
}

/// `ω_χ(K) = |K| χ(g_K) / χ(1)`.
pub fn central_character(t: &CharacterTable, chi: usize, class: usize) -> Result<Cyclotomic> {
    let size = t.classes[class].size as i64;
    t.values[chi][class]
        .scale(size)
        .div_exact(t.degree(chi) as i64)
}

/// Outcome of one table invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub results: Vec<InvariantResult>,
}

impl OrthogonalityReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> Vec<&InvariantResult> {
        self.results.iter().filter(|r| !r.passed).collect()
    }
}

/// Checks every table invariant exactly.
pub fn verify_orthogonality(t: &CharacterTable) -> OrthogonalityReport {
    let mut results = Vec::new();
    let mut push = |name, failure: Option<String>| {
        results.push(InvariantResult { name, passed: failure.is_none(), detail: failure });
    };
    let r = t.classes.len();
    let order = t.order;

    let shape_ok = t.values.len() == r && t.values.iter().all(|row| row.len() == r);
    push("square", (!shape_ok).then(|| format!("{} rows for {r} classes", t.values.len())));
    if !shape_ok {
        return OrthogonalityReport { results };
    }

    let size_sum: u64 = t.classes.iter().map(|c| c.size).sum();
    let class_eq = size_sum == order && t.classes.iter().all(|c| c.size > 0 && order.is_multiple_of(c.size));
    push("class-equation", (!class_eq).then(|| format!("class sizes sum to {size_sum}, |G| = {order}")));

    let powers_ok = t.classes.iter().enumerate().all(|(i, c)| {
        c.powers.len() as u64 == c.order
            && c.powers.first() == Some(&0)
            && (c.order == 1 || c.powers.get(1) == Some(&i))
            && c.powers.iter().all(|&p| p < r)
    });
    push("power-maps", (!powers_ok).then(|| "malformed power map".to_string()));

    let degrees: Vec<Option<u64>> = t
        .values
        .iter()
        .map(|row| row[0].as_integer().filter(|&d| d > 0).map(|d| d as u64))
        .collect();
    let bad_degree = degrees.iter().position(|d| d.is_none());
    push("positive-degrees", bad_degree.map(|i| format!("row {i} has value {} at 1", t.values[i][0])));
    if bad_degree.is_some() || !powers_ok || !class_eq {
        return OrthogonalityReport { results };
    }
    let degrees: Vec<u64> = degrees.into_iter().map(Option::unwrap).collect();

    let sq: u64 = degrees.iter().map(|d| d * d).sum();
    push("degree-sum", (sq != order).then(|| format!("Σ χ(1)^2 = {sq}, |G| = {order}")));

    let bad_div = degrees.iter().position(|d| !order.is_multiple_of(*d));
    push("degrees-divide-order", bad_div.map(|i| format!("χ_{i}(1) = {} ∤ {order}", degrees[i])));

    let bad_cond = (0..t.values.len()).flat_map(|i| (0..r).map(move |c| (i, c))).find(|&(i, c)| {
        !t.classes[c].order.is_multiple_of(t.values[i][c].conductor())
    });
    push(
        "values-in-class-field",
        bad_cond.map(|(i, c)| format!("χ_{i} on class {c} has conductor {}", t.values[i][c].conductor())),
    );
    if bad_cond.is_some() {
        return OrthogonalityReport { results };
    }

    let e = t.exponent();
    let conj: Vec<Vec<Cyclotomic>> =
        t.values.iter().map(|row| row.iter().map(|v| v.conj()).collect()).collect();

    let row_fail = (0..t.values.len())
        .into_par_iter()
        .flat_map_iter(|i| (i..t.values.len()).map(move |j| (i, j)))
        .find_map_first(|(i, j)| {
            let mut acc = Accumulator::new(e);
            for c in 0..r {
                acc.add_scaled(&(&t.values[i][c] * &conj[j][c]), t.classes[c].size as i64);
            }
            let expected = if i == j { order as i64 } else { 0 };
            let got = acc.finish();
            (got != Cyclotomic::integer(expected)).then(|| format!("⟨χ_{i}, χ_{j}⟩·|G| = {got}"))
        });
    push("row-orthogonality", row_fail);

    let col_fail = (0..r)
        .into_par_iter()
        .flat_map_iter(|a| (a..r).map(move |b| (a, b)))
        .find_map_first(|(a, b)| {
            let m = lcm(t.classes[a].order, t.classes[b].order);
            let mut acc = Accumulator::new(m);
            for (row, crow) in t.values.iter().zip(&conj) {
                acc.add_scaled(&(&row[a] * &crow[b]), 1);
            }
            let expected = if a == b { (order / t.classes[a].size) as i64 } else { 0 };
            let got = acc.finish();
            (got != Cyclotomic::integer(expected))
                .then(|| format!("Σ χ(g_{a}) conj χ(g_{b}) = {got}"))
        });
    push("column-orthogonality", col_fail);

    OrthogonalityReport { results }
}

/// Image of a row under `ζ ↦ ζ^k` applied valuewise (`k` prime to `exp G`).
pub fn galois_conjugate_row(t: &CharacterTable, chi: usize, k: i64) -> Vec<Cyclotomic> {
    t.values[chi].iter().map(|v| v.galois(k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::families::*;

    #[test]
    fn dixon_primes() {
        assert_eq!(dixon_prime(6, 6), 7);
        assert_eq!(dixon_prime(120, 60), 61);
        assert_eq!(dixon_prime(1, 1), 3);
        assert_eq!(next_dixon_prime(6, 6, 7), 13);
    }

    #[test]
    fn class_coefficients() {
        let g = symmetric(3);
        let a = class_mult_coeffs(&g);
        // transposition · transposition = 1 in three ways
        assert_eq!(a.get(1, 1, 0), 3);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(a.get(0, j, i), u64::from(i == j));
                let lhs: u64 = (0..3).map(|k| a.get(i, j, k) * g.classes()[k].size).sum();
                assert_eq!(lhs, g.classes()[i].size * g.classes()[j].size);
            }
        }
    }

    #[test]
    fn cyclic_two() {
        let t = character_table(&cyclic(2)).unwrap();
        let ints: Vec<Vec<i64>> = t
            .values()
            .iter()
            .map(|row| row.iter().map(|v| v.as_integer().unwrap()).collect())
            .collect();
        assert_eq!(ints, vec![vec![1, 1], vec![1, -1]]);
    }

    #[test]
    fn small_tables_are_orthogonal() {
        for g in [symmetric(4), alternating(4), cyclic(6), quaternion(8), general_linear(2, 3).unwrap()] {
            let t = character_table(&g).unwrap();
            let rep = verify_orthogonality(&t);
            assert!(rep.passed(), "{:?}", rep.failures());
            assert_eq!(t.trivial(), 0);
        }
        let t = character_table(&symmetric(4)).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 2, 3, 3]);
    }

    #[test]
    fn perturbed_table_fails() {
        let mut t = character_table(&symmetric(3)).unwrap();
        let v = t.value(2, 1) + &Cyclotomic::one();
        t.set_value(2, 1, v);
        let rep = verify_orthogonality(&t);
        assert!(!rep.passed());
        assert!(rep.failures().iter().any(|f| f.name == "row-orthogonality"));
    }

    #[test]
    fn central_characters_of_s3() {
        let t = character_table(&symmetric(3)).unwrap();
        let two = t.degrees().iter().position(|&d| d == 2).unwrap();
        assert_eq!(central_character(&t, two, 2).unwrap(), Cyclotomic::integer(-1));
        assert_eq!(central_character(&t, 0, 0).unwrap(), Cyclotomic::one());
    }

    #[test]
    fn table_does_not_depend_on_the_prime() {
        let g = alternating(5);
        let l0 = dixon_prime(g.order(), g.exponent());
        let l1 = next_dixon_prime(g.order(), g.exponent(), l0);
        assert_eq!(
            character_table_with_prime(&g, l0).unwrap(),
            character_table_with_prime(&g, l1).unwrap()
        );
    }
}
