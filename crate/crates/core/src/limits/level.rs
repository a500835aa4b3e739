//! Finite-level invariants: h_n, densities, Hilbert–Kunz and Hilbert–Samuel
//! data, F-threshold and F-limbus levels.

use rayon::prelude::*;
use serde::Serialize;

use super::estimate::{
    ceil_times, extrapolate, floor_times, q_power, rational_to_f64, InvariantEstimate,
    LevelSample, Rational,
};
use super::table::length_table;
use crate::algebra::checked_power;
use crate::error::{HkError, Result};
use crate::groebner::Budget;
use crate::ideal::Ideal;
use crate::monomial_ideal::Colength;

fn q_of(i: &Ideal, n: u32) -> Result<u64> {
    checked_power(i.ring().characteristic(), n)
}

fn dim_of(i: &Ideal) -> i64 {
    i.ring().dim() as i64
}

/// `ℓ(R/(I^{⌈sq⌉} + J^[q]))` and its normalization by `q^dim`.
pub fn h_level(i: &Ideal, j: &Ideal, n: u32, s: Rational) -> Result<LevelSample> {
    let q = q_of(i, n)?;
    let t = ceil_times(&s, q)?;
    let table = length_table(i, j, n)?;
    let raw = table.lock().expect("length table poisoned").raw(t)?;
    let normalized = Rational::from_integer(raw as i128) * q_power(q, -dim_of(i))?;
    Ok(LevelSample {
        n,
        q,
        s,
        ceil_sq: t,
        raw,
        normalized,
    })
}

/// Level samples for every point of `grid`, in grid order.
pub fn h_levels(i: &Ideal, j: &Ideal, n: u32, grid: &[Rational]) -> Result<Vec<LevelSample>> {
    grid.iter().map(|s| h_level(i, j, n, *s)).collect()
}

/// Estimate of `h(s)` from the given levels.
///
/// Levels where `sq` is an integer are preferred when at least two exist,
/// since there the level values follow `L + C/q` without rounding noise.
pub fn h_estimate(i: &Ideal, j: &Ideal, s: Rational, levels: &[u32]) -> Result<InvariantEstimate> {
    let samples: Vec<LevelSample> = levels
        .par_iter()
        .map(|&n| h_level(i, j, n, s))
        .collect::<Result<_>>()?;
    let integral: Vec<&LevelSample> = samples
        .iter()
        .filter(|x| (x.s * Rational::from_integer(x.q as i128)).is_integer())
        .collect();
    let chosen: Vec<&LevelSample> = if integral.len() >= 2 {
        integral
    } else {
        samples.iter().collect()
    };
    let pts: Vec<(u32, u64, Rational)> = chosen.iter().map(|x| (x.n, x.q, x.normalized)).collect();
    extrapolate("h", &pts)
}

/// `raw(⌈sq⌉ + 1) - raw(⌈sq⌉)`.
pub fn density_numerator(i: &Ideal, j: &Ideal, n: u32, s: Rational) -> Result<u64> {
    let q = q_of(i, n)?;
    let t = ceil_times(&s, q)?;
    let table = length_table(i, j, n)?;
    let mut g = table.lock().expect("length table poisoned");
    let hi = g.raw(t + 1)?;
    let lo = g.raw(t)?;
    Ok(hi - lo)
}

/// `f_n(s) = (raw(s + 1/q) - raw(s)) / q^{dim-1}`.
pub fn density_level(i: &Ideal, j: &Ideal, n: u32, s: Rational) -> Result<Rational> {
    let q = q_of(i, n)?;
    let d = density_numerator(i, j, n, s)?;
    Ok(Rational::from_integer(d as i128) * q_power(q, 1 - dim_of(i))?)
}

/// Density values across levels with their spread over the last three.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityDiagnostic {
    pub values: Vec<(u32, f64)>,
    pub oscillation: f64,
}

pub fn density_diagnostic(
    i: &Ideal,
    j: &Ideal,
    s: Rational,
    levels: &[u32],
) -> Result<DensityDiagnostic> {
    let values: Vec<(u32, f64)> = levels
        .iter()
        .map(|&n| density_level(i, j, n, s).map(|v| (n, rational_to_f64(&v))))
        .collect::<Result<_>>()?;
    let tail = &values[values.len().saturating_sub(3)..];
    let hi = tail.iter().map(|v| v.1).fold(f64::NEG_INFINITY, f64::max);
    let lo = tail.iter().map(|v| v.1).fold(f64::INFINITY, f64::min);
    Ok(DensityDiagnostic {
        oscillation: if tail.is_empty() { 0.0 } else { hi - lo },
        values,
    })
}

/// Length of the degree `⌊sq⌋` part of `R/J^[q]`, divided by `q^{dim-1}`.
pub fn graded_density_level(j: &Ideal, n: u32, s: Rational) -> Result<Rational> {
    if !j.is_weighted_homogeneous()? {
        let ring = j.ring();
        let bad = j
            .nonzero_generators()
            .find(|g| !g.is_weighted_homogeneous(ring.weights()).unwrap_or(false))
            .expect("some generator is inhomogeneous");
        return Err(HkError::Inhomogeneous {
            generator: bad.display_with(ring.variables()).to_string(),
            degrees: bad.weighted_degrees(ring.weights())?,
        });
    }
    let q = q_of(j, n)?;
    let deg = floor_times(&s, q)?;
    let jq = j.frobenius_power(q)?;
    let weights = j.ring().weights();
    let len = match jq.monomial_with_relations() {
        Some(m) => m.graded_slice_length(deg, weights)?,
        None => jq.groebner()?.graded_slice_length(deg, weights)?,
    };
    Ok(Rational::from_integer(len as i128) * q_power(q, 1 - dim_of(j))?)
}

/// `ℓ(R/J^[q])`.
pub fn hilbert_kunz_level(j: &Ideal, n: u32) -> Result<u64> {
    let q = q_of(j, n)?;
    match j.frobenius_power(q)?.colength()? {
        Colength::Finite(v) => Ok(v),
        Colength::Infinite => Err(HkError::InfiniteColength(format!(
            "J = {j} is not primary to the maximal ideal"
        ))),
    }
}

/// Estimate of `e_HK(J)` from `ℓ(R/J^[q]) / q^dim`.
pub fn hilbert_kunz(j: &Ideal, levels: &[u32]) -> Result<InvariantEstimate> {
    let pts: Vec<(u32, u64, Rational)> = levels
        .par_iter()
        .map(|&n| {
            let q = q_of(j, n)?;
            let v = hilbert_kunz_level(j, n)?;
            Ok((n, q, Rational::from_integer(v as i128) * q_power(q, -dim_of(j))?))
        })
        .collect::<Result<_>>()?;
    extrapolate("e_HK", &pts)
}

/// `ℓ(R/I^t)` for `t = 0..=t_max`.
pub fn hilbert_samuel_lengths(i: &Ideal, t_max: u64) -> Result<Vec<u64>> {
    if !i.is_finite_colength()? {
        return Err(HkError::InfiniteColength(format!(
            "I = {i} is not primary to the maximal ideal"
        )));
    }
    let zero = Ideal::zero(i.ring().clone());
    let table = length_table(i, &zero, 0)?;
    let mut g = table.lock().expect("length table poisoned");
    (0..=t_max as i64).map(|t| g.raw(t)).collect()
}

fn dth_difference(vals: &[u64], at: usize, d: usize) -> i128 {
    let mut acc: i128 = 0;
    let mut binom: i128 = 1;
    for k in 0..=d {
        let term = binom * vals[at - k] as i128;
        acc += if k % 2 == 0 { term } else { -term };
        binom = binom * (d - k) as i128 / (k as i128 + 1);
    }
    acc
}

/// `e(I)` as the `dim`-th difference of `t ↦ ℓ(R/I^t)` at `t_max`.
pub fn hilbert_samuel(i: &Ideal, t_max: u64) -> Result<InvariantEstimate> {
    let d = i.ring().dim();
    if t_max < d as u64 + 3 {
        return Err(HkError::Config(format!(
            "t_max must be at least dim + 3 = {}",
            d + 3
        )));
    }
    let vals = hilbert_samuel_lengths(i, t_max)?;
    let top = t_max as usize;
    let last = dth_difference(&vals, top, d);
    let prev = dth_difference(&vals, top - 1, d);
    let levels: Vec<u32> = ((top - d - 1)..=top).map(|t| t as u32).collect();
    if last == prev {
        return Ok(InvariantEstimate::exact("e", Rational::from_integer(last), levels));
    }
    let mut est = InvariantEstimate::exact("e", Rational::from_integer(last), levels);
    est.model = super::estimate::Model::InverseQ;
    est.error_bound = (last - prev).unsigned_abs() as f64;
    Ok(est)
}

/// `c_n = max{t : I^t ⊄ J^[q]}`.
pub fn f_threshold_level(i: &Ideal, j: &Ideal, n: u32) -> Result<u64> {
    if j.contains_element(&j.ring().one())? {
        return Err(HkError::Domain("J is the unit ideal".into()));
    }
    if !j.radical_contains(i)? {
        return Err(HkError::NotBounded(format!(
            "I = {i} is not contained in the radical of J = {j}"
        )));
    }
    let table = length_table(i, j, n)?;
    let mut g = table.lock().expect("length table poisoned");
    // Exponential search for an upper bound, then bisection.
    let mut hi: i64 = 1;
    while !g.power_inside(hi)? {
        hi = hi.checked_mul(2).ok_or_else(|| HkError::overflow("threshold search"))?;
    }
    let mut lo = hi / 2; // I^lo ⊄ J^[q], or lo = 0
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if g.power_inside(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(lo as u64)
}

/// F-limbus level `b_n = min{t : J^[q] ⊄ I^t}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LimbusLevel {
    pub value: u64,
    /// Set when `J ⊄ √I`; then `b_n = 1` at every level and the limit is 0.
    pub outside_radical: bool,
}

pub fn f_limbus_level(i: &Ideal, j: &Ideal, n: u32) -> Result<LimbusLevel> {
    let ring = i.ring().clone();
    if i.contains_element(&ring.one())? {
        return Err(HkError::NotBounded("I is the unit ideal".into()));
    }
    let q = q_of(i, n)?;
    let jq = j.frobenius_power(q)?;
    if Ideal::zero(ring.clone()).contains(&jq)? {
        return Err(HkError::NotBounded("J^[q] is zero in R".into()));
    }
    if !i.radical_contains(j)? {
        return Ok(LimbusLevel {
            value: 1,
            outside_radical: true,
        });
    }
    let budget = Budget::default();
    let inside = |t: i64| -> Result<bool> { i.power(t, &budget)?.contains(&jq) };
    if !inside(1)? {
        return Ok(LimbusLevel {
            value: 1,
            outside_radical: false,
        });
    }
    // Past this power every element of I^t has larger degree than J^[q].
    let weights = ring.weights();
    let top = jq
        .nonzero_generators()
        .map(|g| g.weighted_degrees(weights).map(|d| d.into_iter().max().unwrap_or(0)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .unwrap_or(0);
    let low = i
        .nonzero_generators()
        .map(|g| g.min_weighted_degree(weights))
        .min()
        .unwrap_or(1)
        .max(1);
    let bound = (top / low + 1) as i64;
    let mut lo: i64 = 1;
    let mut hi: i64 = 2;
    while inside(hi)? {
        lo = hi;
        if hi > bound {
            return Err(HkError::NotBounded("J^[q] lies in every power of I".into()));
        }
        hi *= 2;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if inside(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(LimbusLevel {
        value: hi as u64,
        outside_radical: false,
    })
}

/// The c-stable point: least `t` with `raw(t) = ℓ(R/J^[q])`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StablePoint {
    pub n: u32,
    pub q: u64,
    pub t: u64,
    pub ratio: Rational,
}

pub fn stable_point_level(i: &Ideal, j: &Ideal, n: u32) -> Result<StablePoint> {
    let plateau = hilbert_kunz_level(j, n)?;
    let c = f_threshold_level(i, j, n)?;
    let q = q_of(i, n)?;
    let table = length_table(i, j, n)?;
    let mut g = table.lock().expect("length table poisoned");
    let mut t: u64 = 0;
    while g.raw(t as i64)? != plateau {
        t += 1;
    }
    if t != c + 1 {
        return Err(HkError::Domain(format!(
            "stable point {t} disagrees with threshold level {c} + 1"
        )));
    }
    Ok(StablePoint {
        n,
        q,
        t,
        ratio: Rational::new(t as i128, q as i128),
    })
}

/// Estimate of `c^J(I)` from `c_n / q`.
pub fn f_threshold_estimate(i: &Ideal, j: &Ideal, levels: &[u32]) -> Result<InvariantEstimate> {
    let pts: Vec<(u32, u64, Rational)> = levels
        .par_iter()
        .map(|&n| {
            let q = q_of(i, n)?;
            let c = f_threshold_level(i, j, n)?;
            Ok((n, q, Rational::new(c as i128, q as i128)))
        })
        .collect::<Result<_>>()?;
    extrapolate("c", &pts)
}

/// Estimate of `b^J(I)` from `b_n / q`; exactly 0 outside the radical.
pub fn f_limbus_estimate(i: &Ideal, j: &Ideal, levels: &[u32]) -> Result<InvariantEstimate> {
    let mut pts = Vec::new();
    for &n in levels {
        let b = f_limbus_level(i, j, n)?;
        if b.outside_radical {
            return Ok(InvariantEstimate::exact("b", Rational::from_integer(0), levels.to_vec()));
        }
        let q = q_of(i, n)?;
        pts.push((n, q, Rational::new(b.value as i128, q as i128)));
    }
    extrapolate("b", &pts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RingSpec;
    use crate::limits::estimate::{EstimateValue, Model};
    use std::sync::Arc;

    fn r(a: i128, b: i128) -> Rational {
        Rational::new(a, b)
    }

    fn ring(p: u64, vars: &[&str]) -> Arc<RingSpec> {
        Arc::new(RingSpec::polynomial_ring(p, vars).unwrap())
    }

    fn id(ring: &Arc<RingSpec>, g: &[&str]) -> Ideal {
        Ideal::parse(ring.clone(), g).unwrap()
    }

    #[test]
    fn h_level_examples() {
        let r2 = ring(2, &["x", "y"]);
        let m = Ideal::maximal(r2.clone());
        let s = h_level(&m, &m, 1, r(1, 1)).unwrap();
        assert_eq!((s.raw, s.normalized), (3, r(3, 4)));
        let r1 = ring(3, &["x"]);
        let (i, j) = (id(&r1, &["x^2"]), id(&r1, &["x^3"]));
        let s = h_level(&i, &j, 1, r(1, 1)).unwrap();
        assert_eq!((s.raw, s.normalized), (6, r(2, 1)));
        assert_eq!(h_level(&i, &j, 1, r(-1, 1)).unwrap().raw, 0);
    }

    #[test]
    fn h_estimate_examples() {
        let r2 = ring(2, &["x", "y"]);
        let m = Ideal::maximal(r2.clone());
        let e = h_estimate(&m, &m, r(1, 2), &[1, 2, 3, 4, 5, 6]).unwrap();
        assert!((e.to_f64() - 0.125).abs() <= 2.0 / 64.0);
        let r1 = ring(3, &["x"]);
        let e = h_estimate(&id(&r1, &["x^2"]), &id(&r1, &["x^3"]), r(1, 1), &[1, 2, 3]).unwrap();
        assert_eq!(e.model, Model::Exact);
        assert_eq!(e.value, EstimateValue::Exact(r(2, 1)));
        let (x, y) = (id(&r2, &["x"]), id(&r2, &["y"]));
        let e = h_estimate(&x, &y, r(3, 4), &[2, 3, 4]).unwrap();
        assert_eq!(e.value, EstimateValue::Exact(r(3, 4)));
    }

    #[test]
    fn densities() {
        let r1 = ring(2, &["x"]);
        let x = id(&r1, &["x"]);
        for k in -12..20 {
            let s = r(k, 8);
            let expect = if s > r(-1, 8) && s <= r(7, 8) { 1 } else { 0 };
            assert_eq!(density_level(&x, &x, 3, s).unwrap(), r(expect, 1), "s = {s}");
        }
        let r2 = ring(2, &["x", "y"]);
        let m = Ideal::maximal(r2.clone());
        let f = density_level(&m, &m, 7, r(1, 2)).unwrap();
        assert!((rational_to_f64(&f) - 0.5).abs() < 0.02);
        assert_eq!(density_level(&m, &m, 3, r(5, 1)).unwrap(), r(0, 1));
        let diag = density_diagnostic(&m, &m, r(1, 2), &[4, 5, 6]).unwrap();
        assert!(diag.oscillation < 0.1);
    }

    #[test]
    fn graded_densities() {
        let r2 = ring(2, &["x", "y"]);
        let m = Ideal::maximal(r2.clone());
        assert_eq!(graded_density_level(&m, 1, r(1, 2)).unwrap(), r(1, 1));
        assert_eq!(graded_density_level(&m, 1, r(1, 1)).unwrap(), r(1, 2));
        assert_eq!(graded_density_level(&m, 1, r(-1, 2)).unwrap(), r(0, 1));
        let bad = id(&r2, &["x^2 + y"]);
        assert!(matches!(graded_density_level(&bad, 1, r(1, 1)), Err(HkError::Inhomogeneous { .. })));
    }

    #[test]
    fn hilbert_kunz_examples() {
        let r2 = ring(2, &["x", "y"]);
        let m = Ideal::maximal(r2.clone());
        let m2 = m.power(2, &Budget::default()).unwrap();
        let e = hilbert_kunz(&m2, &[1, 2, 3]).unwrap();
        assert_eq!(e.value, EstimateValue::Exact(r(3, 1)));
        assert_eq!(hilbert_kunz(&m, &[1, 2]).unwrap().value, EstimateValue::Exact(r(1, 1)));
        let cusp = Arc::new(RingSpec::parse(2, &["x", "y"], &[3, 2], &["x^2 - y^3"]).unwrap());
        let e = hilbert_kunz(&Ideal::maximal(cusp), &[1, 2, 3, 4, 5, 6, 7, 8]).unwrap();
        assert_eq!(e.value, EstimateValue::Exact(r(2, 1)));
    }

    #[test]
    fn hilbert_samuel_examples() {
        let r2 = ring(2, &["x", "y"]);
        let m = Ideal::maximal(r2.clone());
        assert_eq!(hilbert_samuel(&m, 6).unwrap().value, EstimateValue::Exact(r(1, 1)));
        let i = id(&r2, &["x^2", "y"]);
        assert_eq!(hilbert_samuel(&i, 6).unwrap().value, EstimateValue::Exact(r(2, 1)));
        let cusp = Arc::new(RingSpec::parse(2, &["x", "y"], &[3, 2], &["x^2 - y^3"]).unwrap());
        let e = hilbert_samuel(&Ideal::maximal(cusp), 6).unwrap();
        assert_eq!(e.value, EstimateValue::Exact(r(2, 1)));
        assert!(hilbert_samuel(&m, 3).is_err());
    }

    #[test]
    fn thresholds() {
        let r2 = ring(2, &["x", "y"]);
        let m = Ideal::maximal(r2.clone());
        let m2 = m.power(2, &Budget::default()).unwrap();
        assert_eq!(f_threshold_level(&m, &m2, 2).unwrap(), 10);
        let r1 = ring(2, &["x"]);
        let x = id(&r1, &["x"]);
        for n in 0..6 {
            assert_eq!(f_threshold_level(&x, &x, n).unwrap(), (1 << n) - 1);
            assert_eq!(f_limbus_level(&x, &x, n).unwrap().value, (1 << n) + 1);
        }
        let (x2, y2) = (id(&r2, &["x"]), id(&r2, &["y"]));
        assert!(matches!(f_threshold_level(&x2, &y2, 1), Err(HkError::NotBounded(_))));
        let b = f_limbus_level(&y2, &x2, 2).unwrap();
        assert!(b.outside_radical);
        let r3 = ring(3, &["x"]);
        assert_eq!(f_limbus_level(&id(&r3, &["x^2"]), &id(&r3, &["x^3"]), 1).unwrap().value, 5);
    }

    #[test]
    fn stable_points() {
        let r2 = ring(2, &["x", "y"]);
        let m = Ideal::maximal(r2.clone());
        let sp = stable_point_level(&m, &m, 2).unwrap();
        assert_eq!((sp.t, sp.ratio), (7, r(7, 4)));
        let r3 = ring(3, &["x"]);
        let sp = stable_point_level(&id(&r3, &["x^2"]), &id(&r3, &["x^3"]), 1).unwrap();
        assert_eq!(sp.t, 5);
    }
}
