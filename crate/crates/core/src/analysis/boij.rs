//! Boij ratios of the associated graded slices and the functional ℋ_n.
//!
//! With `μ` generators of `I`, the slice `I^j M_q / I^{j+1} M_q`
//! (`M_q = R/J^[q]`) is a quotient of the degree `j` part of a polynomial
//! ring in `μ` variables, and the ratio of their lengths never increases.
//! ℋ_n sums these ratios with weight `q^{μ-d-1}`, so its discrete slopes
//! never increase either.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{HkError, Result};
use crate::ideal::{binomial, Ideal};
use crate::limits::estimate::{ceil_times, Rational};
use crate::limits::{length_table, rational_string};

/// Length of `(I^j + J^[q]) / (I^{j+1} + J^[q])` for `j = 0..=j_max`.
pub fn slice_lengths(i: &Ideal, j: &Ideal, n: u32, j_max: u64) -> Result<Vec<u64>> {
    let table = length_table(i, j, n)?;
    let mut g = table.lock().expect("length table poisoned");
    let mut out = Vec::with_capacity(j_max as usize + 1);
    let mut prev = g.raw(0)?;
    for t in 1..=(j_max as i64 + 1) {
        let cur = g.raw(t)?;
        out.push(cur - prev);
        prev = cur;
    }
    Ok(out)
}

/// `binom(μ + j - 1, μ - 1)`, the length of `S_j`.
pub fn s_length(mu: usize, j: u64) -> Result<u128> {
    binomial(mu as u128 + j as u128 - 1, mu as u128 - 1)
        .ok_or_else(|| HkError::overflow(format!("binomial({} + {j} - 1, {} - 1)", mu, mu)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoijRow {
    pub j: u64,
    pub slice_length: u64,
    pub binomial: u128,
    #[serde(serialize_with = "ser_rational")]
    pub ratio: Rational,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(r))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoijReport {
    pub n: u32,
    pub q: u64,
    pub mu: usize,
    pub rows: Vec<BoijRow>,
    /// First `j` where `ratio_{j+1} > ratio_j`, if any.
    pub violation: Option<u64>,
}

impl BoijReport {
    pub fn is_non_increasing(&self) -> bool {
        self.violation.is_none()
    }
}

pub fn boij_ratios(i: &Ideal, j: &Ideal, n: u32, j_max: u64) -> Result<BoijReport> {
    let mu = i.minimal_generator_count()?;
    if mu == 0 {
        return Err(HkError::Domain("I is zero in R".into()));
    }
    let q = crate::algebra::checked_power(i.ring().characteristic(), n)?;
    let slices = slice_lengths(i, j, n, j_max)?;
    let mut rows = Vec::with_capacity(slices.len());
    for (k, &len) in slices.iter().enumerate() {
        let b = s_length(mu, k as u64)?;
        let den = i128::try_from(b).map_err(|_| HkError::overflow("binomial"))?;
        rows.push(BoijRow {
            j: k as u64,
            slice_length: len,
            binomial: b,
            ratio: Rational::new(len as i128, den),
        });
    }
    let violation = rows
        .windows(2)
        .find(|w| w[1].ratio > w[0].ratio)
        .map(|w| w[0].j);
    Ok(BoijReport {
        n,
        q,
        mu,
        rows,
        violation,
    })
}

/// Parameters of ℋ_n: `μ`, the base point `s₀` and the level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexityContext {
    pub mu: usize,
    pub s0: Rational,
    pub n: u32,
    pub q: u64,
    pub dim: usize,
}

impl ConvexityContext {
    /// `c(s) = s^{μ-1} / (μ-1)!`.
    pub fn c(&self, s: f64) -> f64 {
        let m = self.mu as i32 - 1;
        let fact: f64 = (1..=self.mu.saturating_sub(1)).map(|k| k as f64).product();
        s.powi(m) / fact
    }

    /// `q^{μ-d-1}` exactly.
    pub fn weight(&self) -> BigRational {
        let e = self.mu as i64 - self.dim as i64 - 1;
        let base = BigInt::from(self.q).pow(e.unsigned_abs() as u32);
        if e >= 0 {
            BigRational::from_integer(base)
        } else {
            BigRational::new(BigInt::one(), base)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPoint {
    pub s: Rational,
    pub value: BigRational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvexReport {
    pub context: ConvexityContext,
    pub points: Vec<ConvexPoint>,
    /// Discrete slopes `ℋ_n((j+1)/q) - ℋ_n(j/q)` from `j = ⌈s₀q⌉`.
    pub slopes: Vec<BigRational>,
    /// First `j` where the slope increases, if any.
    pub violation: Option<u64>,
}

impl ConvexReport {
    pub fn slopes_non_increasing(&self) -> bool {
        self.violation.is_none()
    }
}

/// `ℋ_n(s, s₀) = Σ_{j=⌈s₀q⌉}^{⌈sq⌉-1} q^{μ-d-1} ℓ(slice_j) / ℓ(S_j)` at every
/// grid point, plus the discrete slopes over the covered range.
pub fn convex_functional(
    i: &Ideal,
    j: &Ideal,
    n: u32,
    s0: Rational,
    grid: &[Rational],
) -> Result<ConvexReport> {
    if s0 <= Rational::zero() {
        return Err(HkError::Config("s0 must be positive".into()));
    }
    if let Some(bad) = grid.iter().find(|s| **s < s0) {
        return Err(HkError::Config(format!("grid point {bad} lies below s0 = {s0}")));
    }
    let mu = i.minimal_generator_count()?;
    if mu == 0 {
        return Err(HkError::Domain("I is zero in R".into()));
    }
    let q = crate::algebra::checked_power(i.ring().characteristic(), n)?;
    let ctx = ConvexityContext {
        mu,
        s0,
        n,
        q,
        dim: i.ring().dim(),
    };
    let start = ceil_times(&s0, q)?;
    let top = grid
        .iter()
        .map(|s| ceil_times(s, q))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .unwrap_or(start)
        .max(start + 2);
    let slices = slice_lengths(i, j, n, top as u64)?;
    let weight = ctx.weight();
    let slopes: Vec<BigRational> = (start..top)
        .map(|k| {
            let b = s_length(mu, k as u64)?;
            Ok(&weight * BigRational::new(BigInt::from(slices[k as usize]), BigInt::from(b)))
        })
        .collect::<Result<_>>()?;
    let mut points = Vec::with_capacity(grid.len());
    for s in grid {
        let end = ceil_times(s, q)?;
        let mut acc = BigRational::zero();
        for slope in &slopes[..(end - start) as usize] {
            acc += slope;
        }
        points.push(ConvexPoint { s: *s, value: acc });
    }
    let violation = slopes
        .windows(2)
        .position(|w| w[1] > w[0])
        .map(|k| start as u64 + k as u64);
    Ok(ConvexReport {
        context: ctx,
        points,
        slopes,
        violation,
    })
}
