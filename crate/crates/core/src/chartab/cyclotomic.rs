//! Exact arithmetic in cyclotomic rings Z[ζ_e].
//!
//! A value is stored at a conductor `e` as its coordinate vector in the power
//! basis `1, ζ_e, .., ζ_e^{φ(e)-1}`, reduced modulo the cyclotomic polynomial
//! Φ_e. Rational integers are always stored at conductor 1. Two values with
//! different conductors are compared and combined after lifting both to the
//! lowest common multiple of their conductors.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use crate::arith::{divisors, euler_phi, gcd, lcm};
use crate::error::{Error, Result};

/// Default bound on conductors produced by arithmetic.
pub const CONDUCTOR_BOUND: u64 = 100_000;

fn cache() -> &'static RwLock<HashMap<u64, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Mobius function.
fn mobius(mut n: u64) -> i8 {
    let mut sign = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Φ_n with integer coefficients, lowest degree first (cached).
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    assert!(n >= 1);
    if let Some(p) = cache().read().unwrap().get(&n) {
        return p.clone();
    }
    // Φ_n = Π_{d | n} (x^d - 1)^{μ(n/d)}: multiply first, then divide
    let mut poly = vec![1i64];
    let divs = divisors(n);
    for &d in &divs {
        if mobius(n / d) == 1 {
            let d = d as usize;
            let mut next = vec![0i64; poly.len() + d];
            for (i, &c) in poly.iter().enumerate() {
                next[i + d] += c;
                next[i] -= c;
            }
            poly = next;
        }
    }
    for &d in &divs {
        if mobius(n / d) == -1 {
            // (x^d - 1) q = a  gives  q_i = q_{i-d} - a_i
            let d = d as usize;
            let len = poly.len() - d;
            let mut q = vec![0i64; len];
            for i in 0..len {
                q[i] = if i >= d { q[i - d] } else { 0 } - poly[i];
            }
            poly = q;
        }
    }
    let poly = Arc::new(poly);
    cache().write().unwrap().insert(n, poly.clone());
    poly
}

/// Reduces a polynomial modulo Φ_e in place, returning `φ(e)` coordinates.
fn reduce(e: u64, mut a: Vec<i128>) -> Vec<i64> {
    let phi = cyclotomic_polynomial(e);
    let deg = phi.len() - 1;
    for top in (deg..a.len()).rev() {
        let t = a[top];
        if t == 0 {
            continue;
        }
        for (j, &c) in phi.iter().enumerate() {
            a[top - deg + j] -= t * c as i128;
        }
    }
    a.resize(deg, 0);
    a.into_iter()
        .map(|c| i64::try_from(c).expect("cyclotomic coefficient overflow"))
        .collect()
}

/// An element of Z[ζ_e].
#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<i64>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn integer(n: i64) -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![n] }
    }

    /// `ζ_e^k`.
    pub fn zeta(e: u64, k: u64) -> Self {
        let mut m = vec![0i64; e as usize];
        m[(k % e) as usize] = 1;
        Self::from_exponent_sums(e, &m)
    }

    /// `Σ_k m[k] ζ_e^k` for `0 ≤ k < e`.
    pub fn from_exponent_sums(e: u64, m: &[i64]) -> Self {
        assert_eq!(m.len() as u64, e, "one multiplicity per power of ζ_e");
        Self::from_unreduced(e, m.iter().map(|&c| c as i128).collect())
    }

    /// Coordinates at conductor `e`; `coeffs.len()` must be `φ(e)`.
    pub fn from_coeffs(e: u64, coeffs: Vec<i64>) -> Result<Self> {
        if e == 0 || coeffs.len() as u64 != euler_phi(e) {
            return Err(Error::InvalidArgument(format!(
                "conductor {e} needs {} coefficients, got {}",
                if e == 0 { 0 } else { euler_phi(e) },
                coeffs.len()
            )));
        }
        Ok(Cyclotomic { conductor: e, coeffs }.normalized())
    }

    fn from_unreduced(e: u64, a: Vec<i128>) -> Self {
        Cyclotomic { conductor: e, coeffs: reduce(e, a) }.normalized()
    }

    fn normalized(mut self) -> Self {
        if self.conductor != 1 && self.coeffs[1..].iter().all(|&c| c == 0) {
            self.coeffs.truncate(1);
            self.conductor = 1;
        }
        self
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Power-basis coordinates at [`Self::conductor`].
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.is_rational().then(|| self.coeffs[0])
    }

    /// Coordinates at a multiple `e` of the conductor.
    pub fn coeffs_at(&self, e: u64) -> Vec<i64> {
        assert_eq!(e % self.conductor, 0, "{e} is not a multiple of {}", self.conductor);
        if e == self.conductor {
            return self.coeffs.clone();
        }
        reduce(e, self.lift_unreduced(e))
    }

    /// The same value as a polynomial in `ζ_e` of degree `< e`.
    fn lift_unreduced(&self, e: u64) -> Vec<i128> {
        let step = (e / self.conductor) as usize;
        let mut a = vec![0i128; e as usize];
        for (i, &c) in self.coeffs.iter().enumerate() {
            a[i * step] += c as i128;
        }
        a
    }

    fn common_conductor(&self, other: &Self) -> Result<u64> {
        let e = lcm(self.conductor, other.conductor);
        if e > CONDUCTOR_BOUND {
            return Err(Error::ConductorOverflow { conductor: e, bound: CONDUCTOR_BOUND });
        }
        Ok(e)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let e = self.common_conductor(other)?;
        let mut a = self.lift_unreduced(e);
        for (x, y) in a.iter_mut().zip(other.lift_unreduced(e)) {
            *x += y;
        }
        Ok(Self::from_unreduced(e, a))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let e = self.common_conductor(other)?;
        let x = self.coeffs_at(e);
        let y = other.coeffs_at(e);
        let mut a = vec![0i128; x.len() + y.len() - 1];
        for (i, &u) in x.iter().enumerate() {
            if u == 0 {
                continue;
            }
            for (j, &v) in y.iter().enumerate() {
                a[i + j] += u as i128 * v as i128;
            }
        }
        Ok(Self::from_unreduced(e, a))
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|&c| c * k).collect(),
        }
    }

    /// Exact division by a nonzero integer.
    pub fn div_exact(&self, k: i64) -> Result<Self> {
        if k == 0 || self.coeffs.iter().any(|&c| c % k != 0) {
            return Err(Error::NonIntegral(format!("{self} / {k}")));
        }
        Ok(Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|&c| c / k).collect(),
        })
    }

    /// Image under the Galois automorphism `ζ ↦ ζ^k`, `gcd(k, e) = 1`.
    pub fn galois(&self, k: i64) -> Self {
        let e = self.conductor;
        let k = k.rem_euclid(e as i64) as u64;
        assert_eq!(gcd(k, e), 1, "{k} is not a unit modulo {e}");
        let mut a = vec![0i128; e as usize];
        for (i, &c) in self.coeffs.iter().enumerate() {
            a[(i as u64 * k % e) as usize] += c as i128;
        }
        Self::from_unreduced(e, a)
    }

    /// Complex conjugate, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let e = lcm(self.conductor, other.conductor);
        self.coeffs_at(e) == other.coeffs_at(e)
    }
}

impl Eq for Cyclotomic {}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::integer(n)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl std::ops::$tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            /// Panics on conductor overflow; use the `checked_` form to recover.
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                self.$checked(rhs).expect("conductor overflow")
            }
        }
        impl std::ops::$tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Mul, mul, checked_mul);

impl std::ops::Sub<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &rhs.neg()
    }
}

impl std::ops::Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl std::ops::Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic::neg(&self)
    }
}

/// Sums values of varying conductors dividing a fixed `e`, reducing once at
/// the end.
pub struct Accumulator {
    e: u64,
    buf: Vec<i128>,
}

impl Accumulator {
    pub fn new(e: u64) -> Self {
        Accumulator { e, buf: vec![0; e as usize] }
    }

    /// Adds `k · x`; the conductor of `x` must divide `e`.
    pub fn add_scaled(&mut self, x: &Cyclotomic, k: i64) {
        let step = (self.e / x.conductor) as usize;
        debug_assert_eq!(self.e % x.conductor, 0);
        for (i, &c) in x.coeffs.iter().enumerate() {
            self.buf[i * step] += c as i128 * k as i128;
        }
    }

    pub fn finish(self) -> Cyclotomic {
        Cyclotomic::from_unreduced(self.e, self.buf)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Human-readable form such as `-1 - 2*z12^3` (`zN` is ζ_N).
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}*")?;
                    }
                    write!(f, "z{}", self.conductor)?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(*cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // the first coefficient of absolute value 2 appears at n = 105
        assert!(cyclotomic_polynomial(105).contains(&-2));
        for n in 1..60u64 {
            assert_eq!(cyclotomic_polynomial(n).len() as u64 - 1, euler_phi(n));
        }
    }

    #[test]
    fn root_of_unity_identities() {
        let z3 = Cyclotomic::zeta(3, 1);
        let z3sq = Cyclotomic::zeta(3, 2);
        assert_eq!(&z3 + &z3sq, Cyclotomic::integer(-1));
        let x = Cyclotomic::zeta(8, 1) + Cyclotomic::zeta(8, 7);
        assert_eq!(&x * &x, Cyclotomic::integer(2));
        assert!((&x * &Cyclotomic::zero()).is_zero());
        // ζ_4 = ζ_8^2 after lifting
        assert_eq!(Cyclotomic::zeta(4, 1), Cyclotomic::zeta(8, 2));
        assert_eq!(Cyclotomic::zeta(4, 1).conj(), Cyclotomic::zeta(4, 3));
        assert_eq!(Cyclotomic::zeta(6, 3), Cyclotomic::integer(-1));
    }

    #[test]
    fn exact_division() {
        let x = Cyclotomic::from_exponent_sums(3, &[2, 4, 0]);
        assert_eq!(x.div_exact(2).unwrap(), Cyclotomic::from_exponent_sums(3, &[1, 2, 0]));
        assert!(matches!(x.div_exact(4), Err(Error::NonIntegral(_))));
    }

    #[test]
    fn conductor_overflow() {
        let a = Cyclotomic::zeta(1009, 1);
        let b = Cyclotomic::zeta(1013, 1);
        assert!(matches!(a.checked_add(&b), Err(Error::ConductorOverflow { .. })));
    }

    #[test]
    fn accumulator_matches_sum() {
        let xs = [Cyclotomic::zeta(4, 1), Cyclotomic::zeta(3, 2), Cyclotomic::integer(5)];
        let mut acc = Accumulator::new(12);
        let mut sum = Cyclotomic::zero();
        for x in &xs {
            acc.add_scaled(x, 3);
            sum = &sum + &x.scale(3);
        }
        assert_eq!(acc.finish(), sum);
    }

    #[test]
    fn display() {
        let x = Cyclotomic::from_exponent_sums(5, &[0, 1, 0, 0, 0]);
        assert_eq!(x.to_string(), "z5");
        assert_eq!(Cyclotomic::zeta(5, 4).to_string(), "-1 - z5 - z5^2 - z5^3");
        assert_eq!(Cyclotomic::integer(-3).to_string(), "-3");
    }
}
