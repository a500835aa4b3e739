//! Independent oracles on plain exponent vectors and dense linear algebra.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

pub type Exp = Vec<u32>;

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Generators of the `t`-th power: all products of `t` generators.
pub fn power_gens(gens: &[Exp], t: u32) -> Vec<Exp> {
    let n = gens.first().map_or(0, |g| g.len());
    let mut cur: BTreeSet<Exp> = BTreeSet::new();
    cur.insert(vec![0; n]);
    for _ in 0..t {
        let mut next = BTreeSet::new();
        for a in &cur {
            for g in gens {
                next.insert(a.iter().zip(g).map(|(x, y)| x + y).collect());
            }
        }
        // Drop non-minimal elements to keep the sets small.
        let all: Vec<Exp> = next.into_iter().collect();
        cur = all
            .iter()
            .filter(|a| !all.iter().any(|b| b != *a && divides(b, a)))
            .cloned()
            .collect();
    }
    cur.into_iter().collect()
}

pub fn frobenius(gens: &[Exp], q: u32) -> Vec<Exp> {
    gens.iter().map(|g| g.iter().map(|e| e * q).collect()).collect()
}

/// Whether the monomial ideal `(a)` lies inside `(b)`.
pub fn contained(a: &[Exp], b: &[Exp]) -> bool {
    a.iter().all(|x| b.iter().any(|y| divides(y, x)))
}

/// `max{t : I^t ⊄ J^[q]}` by enumeration.
pub fn brute_threshold(i: &[Exp], j: &[Exp], q: u32, limit: u32) -> Option<u32> {
    let jq = frobenius(j, q);
    (1..=limit).find(|&t| contained(&power_gens(i, t), &jq)).map(|t| t - 1)
}

/// `min{t : J^[q] ⊄ I^t}` by enumeration.
pub fn brute_limbus(i: &[Exp], j: &[Exp], q: u32, limit: u32) -> Option<u32> {
    let jq = frobenius(j, q);
    (1..=limit).find(|&t| !contained(&jq, &power_gens(i, t)))
}

/// Number of lattice points outside the ideal, counted in the box given
/// by the pure powers. `None` if some variable has no pure power.
pub fn lattice_colength(gens: &[Exp]) -> Option<u64> {
    let n = gens.first()?.len();
    let mut bound = vec![0u32; n];
    for v in 0..n {
        bound[v] = gens
            .iter()
            .filter(|g| g.iter().enumerate().all(|(k, &e)| k == v || e == 0) && g[v] > 0)
            .map(|g| g[v])
            .min()?;
    }
    let mut count = 0u64;
    let mut e = vec![0u32; n];
    loop {
        if !gens.iter().any(|g| divides(g, &e)) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == n {
                return Some(count);
            }
            e[k] += 1;
            if e[k] < bound[k] {
                break;
            }
            e[k] = 0;
            k += 1;
        }
    }
}

/// Sparse polynomial over F_p for the linear-algebra oracle.
pub type Poly = BTreeMap<Exp, u64>;

pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Exp> {
    if n == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for a in 0..=d {
        for mut rest in monomials_of_degree(n - 1, d - a) {
            rest.insert(0, a);
            out.push(rest);
        }
    }
    out
}

pub fn shift(f: &Poly, m: &[u32]) -> Poly {
    f.iter()
        .map(|(e, c)| (e.iter().zip(m).map(|(a, b)| a + b).collect(), *c))
        .collect()
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Whether homogeneous `f` of degree `deg` lies in the span of
/// `{m g : deg m + deg g = deg}`, by Gaussian elimination mod `p`.
pub fn member_by_linear_algebra(f: &Poly, gens: &[(Poly, u32)], deg: u32, n: usize, p: u64) -> bool {
    let cols = monomials_of_degree(n, deg);
    let index: BTreeMap<&Exp, usize> = cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let to_row = |g: &Poly| -> Vec<u64> {
        let mut row = vec![0u64; cols.len()];
        for (e, c) in g {
            row[index[e]] = *c % p;
        }
        row
    };
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (g, dg) in gens {
        if *dg > deg {
            continue;
        }
        for m in monomials_of_degree(n, deg - dg) {
            rows.push(to_row(&shift(g, &m)));
        }
    }
    let rank = |mut mat: Vec<Vec<u64>>| -> usize {
        let mut r = 0;
        for c in 0..cols.len() {
            let Some(piv) = (r..mat.len()).find(|&i| mat[i][c] != 0) else {
                continue;
            };
            mat.swap(r, piv);
            let inv = pow_mod(mat[r][c], p - 2, p);
            for k in 0..cols.len() {
                mat[r][k] = mat[r][k] * inv % p;
            }
            for i in 0..mat.len() {
                if i != r && mat[i][c] != 0 {
                    let factor = mat[i][c];
                    for k in 0..cols.len() {
                        mat[i][k] = (mat[i][k] + p * p - factor * mat[r][k] % p) % p;
                    }
                }
            }
            r += 1;
        }
        r
    };
    let base = rank(rows.clone());
    rows.push(to_row(f));
    rank(rows) == base
}
