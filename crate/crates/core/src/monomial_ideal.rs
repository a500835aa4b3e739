//! Monomial ideals and exact counting of their staircases.
//!
//! The colength of a monomial ideal is computed by slicing along the last
//! variable: between two consecutive exponents of that variable among the
//! generators, the slice ideal in the remaining variables is constant, so
//! the count is a weighted sum of lower-dimensional colengths. Cost is
//! governed by the number of distinct exponents, not by the number of
//! generator subsets.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::algebra::Monomial;
use crate::error::{HkError, Result};

/// Length of a quotient: a finite count or infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colength {
    Finite(u64),
    Infinite,
}

impl Colength {
    pub fn finite(self) -> Option<u64> {
        match self {
            Colength::Finite(n) => Some(n),
            Colength::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Colength::Finite(_))
    }
}

impl fmt::Display for Colength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colength::Finite(n) => write!(f, "{n}"),
            Colength::Infinite => write!(f, "infinite"),
        }
    }
}

/// An ideal generated by monomials, stored as its minimal generating set in
/// a canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: vec![Monomial::one(nvars)],
        }
    }

    /// The ideal generated by all variables.
    pub fn maximal(nvars: usize) -> Self {
        Self::minimalize((0..nvars).map(|i| Monomial::var(nvars, i)).collect(), nvars)
    }

    /// Divisibility-minimal antichain generating the same ideal as `gens`.
    pub fn minimalize(gens: Vec<Monomial>, nvars: usize) -> Self {
        let rows = minimal_rows(gens.into_iter().map(|m| m.exponents().to_vec()).collect());
        MonomialIdeal {
            nvars,
            gens: rows.into_iter().map(Monomial::new).collect(),
        }
    }

    /// Checked constructor that validates arities first.
    pub fn from_generators(gens: Vec<Monomial>, nvars: usize) -> Result<Self> {
        if let Some(m) = gens.iter().find(|m| m.nvars() != nvars) {
            return Err(HkError::ArityMismatch {
                expected: nvars,
                got: m.nvars(),
            });
        }
        Ok(Self::minimalize(gens, nvars))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    /// True iff some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// The first generator of `other` outside `self`, if any.
    pub fn non_member<'a>(&self, other: &'a MonomialIdeal) -> Option<&'a Monomial> {
        other.gens.iter().find(|m| !self.contains(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        self.non_member(other).is_none()
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Self::minimalize(g, self.nvars)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        let mut g = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                g.push(a.mul(b)?);
            }
        }
        Ok(Self::minimalize(g, self.nvars))
    }

    /// `I^k` by repeated multiplication; `k = 0` gives the unit ideal.
    pub fn power(&self, k: u64) -> Result<MonomialIdeal> {
        let mut acc = Self::unit(self.nvars);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn frobenius(&self, q: u64) -> Result<MonomialIdeal> {
        let g = self.gens.iter().map(|m| m.pow(q)).collect::<Result<Vec<_>>>()?;
        Ok(Self::minimalize(g, self.nvars))
    }

    /// Number of standard monomials; infinite iff the dimension is positive.
    pub fn staircase_colength(&self) -> Result<Colength> {
        let cache = colength_cache();
        if let Some(c) = cache.lock().expect("colength cache poisoned").get(self) {
            return Ok(*c);
        }
        let rows: Vec<&[u64]> = self.gens.iter().map(|m| m.exponents()).collect();
        let c = match staircase(rows, self.nvars) {
            None => Colength::Infinite,
            Some(n) => Colength::Finite(
                u64::try_from(n).map_err(|_| HkError::overflow("colength exceeds 64 bits"))?,
            ),
        };
        let mut guard = cache.lock().expect("colength cache poisoned");
        if guard.len() >= COLENGTH_CACHE_CAP {
            guard.clear();
        }
        guard.insert(self.clone(), c);
        Ok(c)
    }

    /// Number of standard monomials of weighted degree exactly `deg`.
    pub fn graded_slice_length(&self, deg: i64, weights: &[u64]) -> Result<u64> {
        if deg < 0 {
            return Ok(0);
        }
        if weights.len() != self.nvars {
            return Err(HkError::ArityMismatch {
                expected: self.nvars,
                got: weights.len(),
            });
        }
        let rows: Vec<&[u64]> = self.gens.iter().map(|m| m.exponents()).collect();
        let n = graded_count(rows, self.nvars, deg as u64, weights);
        u64::try_from(n).map_err(|_| HkError::overflow("slice length exceeds 64 bits"))
    }

    /// Combinatorial Krull dimension of the quotient; `None` for the unit
    /// ideal.
    pub fn dimension(&self) -> Option<usize> {
        if self.is_unit() {
            return None;
        }
        let masks: Vec<u64> = self.gens.iter().map(Monomial::support_mask).collect();
        // dim = n - (smallest set of variables meeting every support).
        for size in 0..=self.nvars {
            if hitting_set_exists(&masks, self.nvars, size, 0, 0) {
                return Some(self.nvars - size);
            }
        }
        Some(0)
    }
}

const COLENGTH_CACHE_CAP: usize = 4096;

fn colength_cache() -> &'static Mutex<HashMap<MonomialIdeal, Colength>> {
    static CACHE: OnceLock<Mutex<HashMap<MonomialIdeal, Colength>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn hitting_set_exists(masks: &[u64], n: usize, size: usize, start: usize, chosen: u64) -> bool {
    if size == 0 {
        return masks.iter().all(|m| m & chosen != 0);
    }
    (start..n).any(|i| hitting_set_exists(masks, n, size - 1, i + 1, chosen | (1 << i)))
}

fn degree_of(row: &[u64]) -> u128 {
    row.iter().map(|&e| e as u128).sum()
}

/// Minimal antichain of exponent rows, sorted by (degree, exponents).
pub(crate) fn minimal_rows(mut rows: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    rows.sort_unstable_by(|a, b| degree_of(a).cmp(&degree_of(b)).then_with(|| a.cmp(b)));
    rows.dedup();
    if rows.len() < 2 {
        return rows;
    }
    let d0 = degree_of(&rows[0]);
    if rows.iter().all(|r| degree_of(r) == d0) {
        return rows;
    }
    let mut kept: Vec<Vec<u64>> = Vec::with_capacity(rows.len());
    let mut kept_deg: Vec<u128> = Vec::with_capacity(rows.len());
    for r in rows {
        let d = degree_of(&r);
        // Candidates of equal degree cannot divide r unless equal (deduped).
        let bound = kept_deg.partition_point(|&k| k < d);
        let redundant = kept[..bound]
            .iter()
            .any(|k| k.iter().zip(&r).all(|(a, b)| a <= b));
        if !redundant {
            kept.push(r);
            kept_deg.push(d);
        }
    }
    kept
}

#[inline]
fn prefix_divides(a: &[u64], b: &[u64], k: usize) -> bool {
    a[..k].iter().zip(&b[..k]).all(|(x, y)| x <= y)
}

/// Keeps `active` minimal on the first `k` coordinates while inserting `r`.
fn insert_minimal<'a>(active: &mut Vec<&'a [u64]>, r: &'a [u64], k: usize) {
    if active.iter().any(|a| prefix_divides(a, r, k)) {
        return;
    }
    active.retain(|a| !prefix_divides(r, a, k));
    active.push(r);
}

/// Colength of the ideal generated by `rows` restricted to their first `k`
/// coordinates. `None` means infinite.
fn staircase(mut rows: Vec<&[u64]>, k: usize) -> Option<u128> {
    if rows.iter().any(|r| r[..k].iter().all(|&e| e == 0)) {
        return Some(0);
    }
    if k == 0 {
        return Some(1);
    }
    if rows.is_empty() {
        return None;
    }
    if k == 1 {
        return rows.iter().map(|r| r[0] as u128).min();
    }
    let z = k - 1;
    rows.sort_unstable_by_key(|r| r[z]);
    if rows[0][z] > 0 {
        return None;
    }
    let mut total: u128 = 0;
    let mut active: Vec<&[u64]> = Vec::new();
    let mut i = 0;
    while i < rows.len() {
        let level = rows[i][z];
        while i < rows.len() && rows[i][z] == level {
            insert_minimal(&mut active, rows[i], z);
            i += 1;
        }
        let slice = staircase(active.clone(), z);
        if i == rows.len() {
            // Top slice extends to infinity in the last variable.
            return match slice {
                Some(0) => Some(total),
                _ => None,
            };
        }
        let width = (rows[i][z] - level) as u128;
        total = total.checked_add(width.checked_mul(slice?)?)?;
    }
    unreachable!("loop returns at the top slice")
}

/// Standard monomials in the first `k` variables of weighted degree `deg`.
fn graded_count(mut rows: Vec<&[u64]>, k: usize, deg: u64, weights: &[u64]) -> u128 {
    if rows.iter().any(|r| r[..k].iter().all(|&e| e == 0)) {
        return 0;
    }
    if k == 0 {
        return (deg == 0) as u128;
    }
    let w = weights[k - 1];
    if k == 1 {
        if deg % w != 0 {
            return 0;
        }
        let a = deg / w;
        let blocked = rows.iter().any(|r| r[0] <= a);
        return (!blocked) as u128;
    }
    let z = k - 1;
    rows.sort_unstable_by_key(|r| r[z]);
    let mut total = 0u128;
    let mut active: Vec<&[u64]> = Vec::new();
    let mut next = 0;
    for a in 0..=deg / w {
        let mut changed = false;
        while next < rows.len() && rows[next][z] <= a {
            insert_minimal(&mut active, rows[next], z);
            next += 1;
            changed = true;
        }
        if changed && active.iter().any(|r| r[..z].iter().all(|&e| e == 0)) {
            break;
        }
        total += graded_count(active.clone(), z, deg - w * a, weights);
    }
    total
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", g.exponents())?;
        }
        write!(f, ")")
    }
}
