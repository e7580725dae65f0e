//! Linear algebra over F_ℓ for a prime `ℓ < 2^31`.

use crate::arith::{inv_mod, mul_mod};

pub type Matrix = Vec<Vec<u64>>;

/// Row-reduces `rows` in place and returns the pivot columns. Zero rows are
/// dropped, so the result is the reduced row echelon basis of the span.
pub fn rref(rows: &mut Vec<Vec<u64>>, l: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        let inv = inv_mod(rows[r][c], l).unwrap();
        for x in rows[r].iter_mut() {
            *x = mul_mod(*x, inv, l);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = (*x + l - mul_mod(f, y, l)) % l;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{v : A v = 0}` for a square or rectangular `A`.
pub fn kernel(a: &Matrix, l: u64) -> Vec<Vec<u64>> {
    let ncols = a.first().map_or(0, |r| r.len());
    let mut m = a.clone();
    let pivots = rref(&mut m, l);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; ncols];
            v[f] = 1;
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = (l - row[f]) % l;
            }
            v
        })
        .collect()
}

pub fn mat_vec(a: &Matrix, v: &[u64], l: u64) -> Vec<u64> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0u64, |acc, (&x, &y)| (acc + mul_mod(x, y, l)) % l)
        })
        .collect()
}

/// Characteristic polynomial `det(xI - A)`, lowest degree first, via
/// reduction to Hessenberg form.
pub fn char_poly(a: &Matrix, l: u64) -> Vec<u64> {
    let n = a.len();
    let mut h = a.clone();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else { continue };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let inv = inv_mod(h[m][m - 1], l).unwrap();
        for j in m + 1..n {
            let u = mul_mod(h[j][m - 1], inv, l);
            if u == 0 {
                continue;
            }
            // row_j -= u row_m; col_m += u col_j
            for k in 0..n {
                h[j][k] = (h[j][k] + l - mul_mod(u, h[m][k], l)) % l;
            }
            for row in h.iter_mut() {
                row[m] = (row[m] + mul_mod(u, row[j], l)) % l;
            }
        }
    }
    // p_m = (x - h_mm) p_{m-1} - Σ_{i<m} h_im (h_{i+1,i} .. h_{m,m-1}) p_{i-1}
    let mut ps: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        let prev = &ps[m];
        let mut next = vec![0u64; m + 2];
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = (next[k + 1] + c) % l;
            next[k] = (next[k] + l - mul_mod(h[m][m], c, l)) % l;
        }
        let mut t = 1u64;
        for i in (0..m).rev() {
            t = mul_mod(t, h[i + 1][i], l);
            let coef = mul_mod(h[i][m], t, l);
            if coef == 0 {
                continue;
            }
            for (k, &c) in ps[i].iter().enumerate() {
                next[k] = (next[k] + l - mul_mod(coef, c, l)) % l;
            }
        }
        ps.push(next);
    }
    ps.pop().unwrap()
}
