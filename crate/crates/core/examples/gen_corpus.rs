//! Writes the shipped corpus of group files.
//!
//! ```text
//! cargo run --example gen_corpus -- corpus/groups
//! ```
//!
//! The double covers are built from Clifford matrices over F_17, where
//! `4^2 = -1` and `6^2 = 2`: with anticommuting `γ_1..γ_n` squaring to 1,
//! the elements `t_i = (γ_i - γ_{i+1})/√2` generate 2.S_n and map onto the
//! Coxeter transpositions `(i, i+1)`.

use std::fs;
use std::path::PathBuf;

use blockcheck::group::families::*;
use blockcheck::group::field::SmallField;
use blockcheck::group::{Domain, FiniteGroup};
use blockcheck::io::{GroupFile, Projection};

const P: i64 = 17;
const I: i64 = 4;
const INV_SQRT2: i64 = 3;

type Mat = Vec<Vec<i64>>;

fn kron(a: &Mat, b: &Mat) -> Mat {
    let (n, m) = (a.len(), b.len());
    let mut out = vec![vec![0; n * m]; n * m];
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                for l in 0..m {
                    out[i * m + k][j * m + l] = (a[i][j] * b[k][l]).rem_euclid(P);
                }
            }
        }
    }
    out
}

fn kron_all(factors: &[Mat]) -> Mat {
    factors.iter().skip(1).fold(factors[0].clone(), |acc, f| kron(&acc, f))
}

/// `2k + 1` pairwise anticommuting involutions of size `2^k`.
fn gammas(k: usize) -> Vec<Mat> {
    let id = vec![vec![1, 0], vec![0, 1]];
    let x = vec![vec![0, 1], vec![1, 0]];
    let z = vec![vec![1, 0], vec![0, P - 1]];
    // i·XZ
    let y = vec![vec![0, (P - I) % P], vec![I, 0]];
    let mut out = Vec::new();
    for j in 0..k {
        for mid in [&x, &y] {
            let mut f = vec![z.clone(); j];
            f.push(mid.clone());
            f.extend(std::iter::repeat_n(id.clone(), k - j - 1));
            out.push(kron_all(&f));
        }
    }
    out.push(kron_all(&vec![z; k]));
    out
}

/// `t_1..t_{n-1}` as flattened matrices over F_17.
fn coxeter_lifts(n: usize) -> (usize, Vec<Vec<u16>>) {
    let g = gammas(n / 2);
    let dim = g[0].len();
    let ts = (0..n - 1)
        .map(|i| {
            let mut flat = Vec::with_capacity(dim * dim);
            for r in 0..dim {
                for c in 0..dim {
                    flat.push(((g[i][r][c] - g[i + 1][r][c]) * INV_SQRT2).rem_euclid(P) as u16);
                }
            }
            flat
        })
        .collect();
    (dim, ts)
}

fn transposition(n: usize, i: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (1..=n).collect();
    v.swap(i, i + 1);
    v
}

fn compose(n: usize, a: &[usize], b: &[usize]) -> Vec<usize> {
    // a first, then b, on 1-based image lists
    (0..n).map(|x| b[a[x] - 1]).collect()
}

fn mat_mul(dim: usize, a: &[u16], b: &[u16]) -> Vec<u16> {
    let mut out = vec![0u16; dim * dim];
    for r in 0..dim {
        for c in 0..dim {
            let s: i64 = (0..dim).map(|k| a[r * dim + k] as i64 * b[k * dim + c] as i64).sum();
            out[r * dim + c] = s.rem_euclid(P) as u16;
        }
    }
    out
}

/// 2.S_n, or 2.A_n generated by the lifts of `(1 2)(i i+1)`.
fn double_cover(n: usize, alternating: bool) -> (FiniteGroup, Projection) {
    let (dim, ts) = coxeter_lifts(n);
    let (gens, images): (Vec<Vec<u16>>, Vec<Vec<usize>>) = if alternating {
        (1..n - 1)
            .map(|i| {
                (
                    mat_mul(dim, &ts[0], &ts[i]),
                    compose(n, &transposition(n, 0), &transposition(n, i)),
                )
            })
            .unzip()
    } else {
        ts.into_iter().enumerate().map(|(i, t)| (t, transposition(n, i))).unzip()
    };
    let domain = Domain::matrices(SmallField::standard(P as u64).unwrap(), dim);
    let gens = gens.iter().map(|m| domain.matrix(m).unwrap()).collect();
    let g = FiniteGroup::enumerate(domain, gens).unwrap();
    (g, Projection { degree: n, images })
}

fn perm_group(degree: usize, cycles: &[&[&[usize]]]) -> FiniteGroup {
    let d = Domain::permutations(degree);
    let gens = cycles.iter().map(|c| d.permutation_from_cycles(c).unwrap()).collect();
    FiniteGroup::enumerate(d, gens).unwrap()
}

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "corpus/groups".into()));
    fs::create_dir_all(&dir).unwrap();
    let mut entries: Vec<(String, String, FiniteGroup, Option<Projection>)> = Vec::new();
    let mut add = |name: &str, desc: String, g: FiniteGroup| {
        entries.push((name.to_string(), desc, g, None));
    };
    for n in 3..=7 {
        add(&format!("s{n}"), format!("symmetric group S_{n}"), symmetric(n));
    }
    for n in 4..=7 {
        add(&format!("a{n}"), format!("alternating group A_{n}"), alternating(n));
    }
    for n in [1, 2, 6, 12] {
        add(&format!("c{n}"), format!("cyclic group of order {n}"), cyclic(n));
    }
    for k in [8, 16, 32, 64] {
        add(&format!("d{k}"), format!("dihedral group of order {k}"), dihedral(k).unwrap());
        add(&format!("q{k}"), format!("generalised quaternion group of order {k}"), quaternion(k));
    }
    add("gl23", "GL_2(3)".into(), general_linear(2, 3).unwrap());
    add("gl24", "GL_2(4)".into(), general_linear(2, 4).unwrap());
    add("gl25", "GL_2(5)".into(), general_linear(2, 5).unwrap());
    for q in [5, 7, 9, 13, 17] {
        add(&format!("sl2_{q}"), format!("SL_2({q})"), special_linear(2, q).unwrap());
    }
    add("sl32", "SL_3(2)".into(), special_linear(3, 2).unwrap());
    add("sl34", "SL_3(4)".into(), special_linear(3, 4).unwrap());
    add(
        "a5xc2",
        "A_5 x C_2, rejected by the nearly simple filter".into(),
        perm_group(7, &[&[&[1, 2, 3, 4, 5]], &[&[1, 2, 3]], &[&[6, 7]]]),
    );
    add(
        "m11",
        "Mathieu group M_11".into(),
        perm_group(11, &[&[&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]], &[&[3, 7, 11, 8], &[4, 10, 5, 6]]]),
    );
    for n in 4..=6 {
        for alt in [false, true] {
            let (g, proj) = double_cover(n, alt);
            let (name, desc) = if alt {
                (format!("2a{n}"), format!("double cover 2.A_{n} over F_17"))
            } else {
                (format!("2s{n}"), format!("double cover 2.S_{n} over F_17"))
            };
            entries.push((name, desc, g, Some(proj)));
        }
    }
    for (name, desc, g, proj) in entries {
        let mut file = GroupFile::from_group(&name, &g);
        file.description = Some(desc);
        file.projection = proj;
        let path = dir.join(format!("{name}.json"));
        fs::write(&path, file.to_json()).unwrap();
        println!("{} order {}", path.display(), g.order());
    }
}
