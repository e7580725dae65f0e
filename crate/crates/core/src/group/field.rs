//! Small finite fields F_q, `q = p^k`, with full addition and multiplication
//! tables.
//!
//! An element is coded by the integer `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
//! where `c_0 + c_1 x + ...` is its residue modulo the defining polynomial.
//! The code order is the canonical order of field elements.

use std::fmt;
use std::sync::Arc;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::poly;

/// Largest field order accepted. Tables are `q^2` entries.
pub const MAX_FIELD_ORDER: u64 = 1024;

#[derive(Clone, PartialEq, Eq)]
pub struct SmallField {
    characteristic: u64,
    degree: u32,
    /// Monic, lowest degree first, length `degree + 1`.
    polynomial: Vec<u64>,
    order: u16,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

impl fmt::Debug for SmallField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}) [poly {:?}]", self.order, self.polynomial)
    }
}

impl SmallField {
    /// Builds F_{p^k} from a monic defining polynomial of degree `k` (lowest
    /// coefficient first). Irreducibility is verified.
    pub fn new(characteristic: u64, polynomial: Vec<u64>) -> Result<Self> {
        let p = characteristic;
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("characteristic {p} is not prime")));
        }
        let polynomial = poly::trim(polynomial.into_iter().map(|c| c % p).collect());
        let k = match poly::degree(&polynomial) {
            Some(k) if k >= 1 => k,
            _ => return Err(Error::InvalidField("defining polynomial must have degree ≥ 1".into())),
        };
        if polynomial[k] != 1 {
            return Err(Error::InvalidField("defining polynomial must be monic".into()));
        }
        if !poly::is_irreducible_naive(&polynomial, p) {
            return Err(Error::InvalidField(format!(
                "polynomial {polynomial:?} is reducible over F_{p}"
            )));
        }
        let q = p
            .checked_pow(k as u32)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or_else(|| Error::InvalidField(format!("field order {p}^{k} too large")))?;
        let qs = q as usize;

        let decode = |c: usize| -> Vec<u64> {
            let mut v = vec![0u64; k];
            let mut c = c as u64;
            for x in v.iter_mut() {
                *x = c % p;
                c /= p;
            }
            v
        };
        let encode = |v: &[u64]| -> u16 {
            v.iter().rev().fold(0u64, |acc, &c| acc * p + c) as u16
        };

        let mut add = vec![0u16; qs * qs];
        let mut mul = vec![0u16; qs * qs];
        for a in 0..qs {
            let va = decode(a);
            for b in 0..qs {
                let vb = decode(b);
                let sum: Vec<u64> = va.iter().zip(&vb).map(|(x, y)| (x + y) % p).collect();
                add[a * qs + b] = encode(&sum);
                let mut prod = poly::rem(&poly::mul(&poly::trim(va.clone()), &poly::trim(vb), p), &polynomial, p);
                prod.resize(k, 0);
                mul[a * qs + b] = encode(&prod);
            }
        }
        let neg = (0..qs)
            .map(|a| (0..qs).find(|&b| add[a * qs + b] == 0).unwrap() as u16)
            .collect();
        let inv = (0..qs)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..qs).find(|&b| mul[a * qs + b] == 1).unwrap() as u16
                }
            })
            .collect();
        Ok(SmallField {
            characteristic: p,
            degree: k as u32,
            polynomial,
            order: q as u16,
            add,
            mul,
            neg,
            inv,
        })
    }

    /// One of the shipped fields F_2, F_3, F_4, F_5, F_7, F_8, F_9, F_13,
    /// F_17, with fixed defining polynomials (x for prime fields, x²+x+1 for
    /// F_4, x³+x+1 for F_8, x²+x+2 for F_9).
    pub fn standard(q: u64) -> Result<Arc<SmallField>> {
        let (p, polynomial) = match q {
            2 | 3 | 5 | 7 | 13 | 17 => (q, vec![0, 1]),
            4 => (2, vec![1, 1, 1]),
            8 => (2, vec![1, 1, 0, 1]),
            9 => (3, vec![2, 1, 1]),
            _ => return Err(Error::InvalidField(format!("no shipped field of order {q}"))),
        };
        Ok(Arc::new(SmallField::new(p, polynomial)?))
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn polynomial(&self) -> &[u64] {
        &self.polynomial
    }

    pub fn order(&self) -> u16 {
        self.order
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.order as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.order as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u16) -> Option<u16> {
        (a != 0).then(|| self.inv[a as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: u16) -> Option<u64> {
        if a == 0 || a >= self.order {
            return None;
        }
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }

    /// Smallest element (by code) of multiplicative order `q - 1`.
    pub fn primitive_element(&self) -> u16 {
        (1..self.order)
            .find(|&a| self.element_order(a) == Some(self.order as u64 - 1))
            .expect("finite fields have primitive elements")
    }
}
