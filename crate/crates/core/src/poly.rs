//! Dense univariate polynomials over a prime field F_p, `p < 2^31`.
//!
//! Coefficients are stored lowest degree first. The zero polynomial is the
//! empty vector; every other polynomial has a nonzero leading coefficient.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{inv_mod, mul_mod};

pub type Poly = Vec<u64>;

pub fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &[u64]) -> Option<usize> {
    if a.is_empty() {
        None
    } else {
        Some(a.len() - 1)
    }
}

pub fn add(a: &[u64], b: &[u64], p: u64) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(out)
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(out)
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    trim(out)
}

/// Quotient and remainder of `a` by nonzero `b`.
pub fn div_rem(a: &[u64], b: &[u64], p: u64) -> (Poly, Poly) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut rem = trim(a.to_vec());
    let db = b.len() - 1;
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = inv_mod(b[db], p).expect("leading coefficient is a unit");
    let mut quot = vec![0u64; rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = mul_mod(*rem.last().unwrap(), lead_inv, p);
        quot[shift] = c;
        for (j, &bj) in b.iter().enumerate() {
            let t = mul_mod(c, bj, p);
            rem[shift + j] = (rem[shift + j] + p - t) % p;
        }
        rem = trim(rem);
    }
    (trim(quot), rem)
}

pub fn rem(a: &[u64], b: &[u64], p: u64) -> Poly {
    div_rem(a, b, p).1
}

pub fn monic(a: &[u64], p: u64) -> Poly {
    match a.last() {
        None => Vec::new(),
        Some(&lead) => {
            let inv = inv_mod(lead, p).expect("nonzero leading coefficient");
            a.iter().map(|&c| mul_mod(c, inv, p)).collect()
        }
    }
}

/// Monic greatest common divisor.
pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    monic(&x, p)
}

pub fn mul_mod_poly(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Poly {
    rem(&mul(a, b, p), modulus, p)
}

pub fn pow_mod_poly(base: &[u64], mut exp: u64, modulus: &[u64], p: u64) -> Poly {
    let mut acc = rem(&[1], modulus, p);
    let mut b = rem(base, modulus, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_poly(&acc, &b, modulus, p);
        }
        b = mul_mod_poly(&b, &b, modulus, p);
        exp >>= 1;
    }
    acc
}

pub fn eval(a: &[u64], x: u64, p: u64) -> u64 {
    a.iter().rev().fold(0, |acc, &c| (mul_mod(acc, x, p) + c) % p)
}

/// Whether `f` (of degree ≥ 1) is irreducible over F_p, by trial division
/// with every monic polynomial of degree at most half of `deg f`.
pub fn is_irreducible_naive(f: &[u64], p: u64) -> bool {
    let Some(d) = degree(f) else { return false };
    if d == 0 {
        return false;
    }
    for k in 1..=d / 2 {
        let count = p.pow(k as u32);
        for code in 0..count {
            let mut g = vec![0u64; k + 1];
            let mut c = code;
            for coeff in g.iter_mut().take(k) {
                *coeff = c % p;
                c /= p;
            }
            g[k] = 1;
            if rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Computes `a^((p^m - 1)/2)` (odd `p`) or the trace `a + a^2 + ... + a^(2^(m-1))`
/// (`p = 2`) modulo `f`; both split a product of degree-`m` irreducibles.
fn splitting_image(a: &[u64], m: usize, f: &[u64], p: u64) -> Poly {
    if p == 2 {
        let mut acc = Vec::new();
        let mut t = rem(a, f, p);
        for _ in 0..m {
            acc = add(&acc, &t, p);
            t = mul_mod_poly(&t, &t, f, p);
        }
        acc
    } else {
        // (p^m - 1)/2 = (p - 1)/2 * (1 + p + ... + p^(m-1))
        let mut prod = rem(&[1], f, p);
        let mut t = rem(a, f, p);
        for _ in 0..m {
            prod = mul_mod_poly(&prod, &t, f, p);
            t = pow_mod_poly(&t, p, f, p);
        }
        let half = pow_mod_poly(&prod, (p - 1) / 2, f, p);
        sub(&half, &[1], p)
    }
}

/// All monic irreducible factors of a squarefree monic `f` whose irreducible
/// factors all have degree `m` (Cantor–Zassenhaus equal-degree splitting with a
/// fixed-seed generator). Factors are returned sorted by [`lex_key`].
pub fn equal_degree_factors(f: &[u64], m: usize, p: u64) -> Vec<Poly> {
    let f = monic(f, p);
    let d = degree(&f).expect("nonzero polynomial");
    assert!(m >= 1 && d.is_multiple_of(m), "degree {d} not a multiple of {m}");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_b10c);
    let mut pending = vec![f];
    let mut done = Vec::new();
    while let Some(g) = pending.pop() {
        let dg = g.len() - 1;
        if dg == m {
            done.push(g);
            continue;
        }
        loop {
            let a: Poly = trim((0..dg).map(|_| rng.gen_range(0..p)).collect());
            if a.is_empty() {
                continue;
            }
            let h = gcd(&splitting_image(&a, m, &g, p), &g, p);
            let dh = h.len().saturating_sub(1);
            if dh > 0 && dh < dg {
                let (q, _) = div_rem(&g, &h, p);
                pending.push(h);
                pending.push(monic(&q, p));
                break;
            }
        }
    }
    done.sort_by_key(|g| lex_key(g));
    done
}

/// Comparison key for polynomials: coefficients read from the leading term
/// down, i.e. the order in which the polynomial is written.
pub fn lex_key(g: &[u64]) -> Vec<u64> {
    g.iter().rev().copied().collect()
}

/// Distinct roots in F_p of `f`, in increasing order.
pub fn roots(f: &[u64], p: u64) -> Vec<u64> {
    let f = monic(&trim(f.to_vec()), p);
    if degree(&f).unwrap_or(0) == 0 {
        return Vec::new();
    }
    // g = gcd(f, x^p - x) is the product of the distinct linear factors
    let xp = pow_mod_poly(&[0, 1], p, &f, p);
    let g = gcd(&sub(&xp, &[0, 1], p), &f, p);
    if degree(&g).unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut out: Vec<u64> = if p < 64 {
        (0..p).filter(|&x| eval(&g, x, p) == 0).collect()
    } else {
        equal_degree_factors(&g, 1, p)
            .into_iter()
            .map(|lin| (p - lin[0]) % p)
            .collect()
    };
    out.sort_unstable();
    out
}

/// `x^n - 1` divided by all cyclotomic factors of proper divisors, reduced
/// modulo `p`: the image of the n-th cyclotomic polynomial in F_p[x].
pub fn cyclotomic_mod(n: u64, p: u64) -> Poly {
    let phi = crate::chartab::cyclotomic::cyclotomic_polynomial(n);
    trim(phi.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect())
}
