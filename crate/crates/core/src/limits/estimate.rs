//! Level samples and first-order `C/q` extrapolation.

use std::fmt;

use num_rational::Ratio;
use num_traits::{CheckedMul, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{HkError, Result};

pub type Rational = Ratio<i128>;

/// Renders a rational as `num/den`, always with an explicit denominator.
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// Parses `a`, `a/b` or a decimal such as `0.25`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || HkError::Config(format!("not a rational number: `{text}`"));
    if let Some((a, b)) = t.split_once('/') {
        let a: i128 = a.trim().parse().map_err(|_| bad())?;
        let b: i128 = b.trim().parse().map_err(|_| bad())?;
        if b == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(a, b));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        let neg = whole.trim_start().starts_with('-');
        let w: i128 = if whole.is_empty() || whole == "-" { 0 } else { whole.parse().map_err(|_| bad())? };
        if frac.is_empty() || frac.len() > 18 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let den = 10i128.pow(frac.len() as u32);
        let f: i128 = frac.parse().map_err(|_| bad())?;
        let mag = w.abs() * den + f;
        return Ok(Rational::new(if neg { -mag } else { mag }, den));
    }
    Ok(Rational::from_integer(t.parse().map_err(|_| bad())?))
}

/// `q^e` as a rational, allowing negative exponents.
pub fn q_power(q: u64, e: i64) -> Result<Rational> {
    let base = i128::from(q);
    let mag = base
        .checked_pow(e.unsigned_abs() as u32)
        .ok_or_else(|| HkError::overflow(format!("{q}^{e}")))?;
    Ok(if e >= 0 {
        Rational::from_integer(mag)
    } else {
        Rational::new(1, mag)
    })
}

/// `⌈s q⌉` computed exactly.
pub fn ceil_times(s: &Rational, q: u64) -> Result<i64> {
    let v = s
        .checked_mul(&Rational::from_integer(q as i128))
        .ok_or_else(|| HkError::overflow("s*q"))?;
    i64::try_from(v.ceil().to_integer()).map_err(|_| HkError::overflow("ceil(s*q)"))
}

/// `⌊s q⌋` computed exactly.
pub fn floor_times(s: &Rational, q: u64) -> Result<i64> {
    let v = s
        .checked_mul(&Rational::from_integer(q as i128))
        .ok_or_else(|| HkError::overflow("s*q"))?;
    i64::try_from(v.floor().to_integer()).map_err(|_| HkError::overflow("floor(s*q)"))
}

/// One level value of an h-function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelSample {
    pub n: u32,
    pub q: u64,
    pub s: Rational,
    pub ceil_sq: i64,
    pub raw: u64,
    pub normalized: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    Exact,
    InverseQ,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::Exact => "exact",
            Model::InverseQ => "C/q",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum EstimateValue {
    Exact(Rational),
    Approx(f64),
}

impl EstimateValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            EstimateValue::Exact(r) => rational_to_f64(r),
            EstimateValue::Approx(v) => *v,
        }
    }

    pub fn exact(&self) -> Option<Rational> {
        match self {
            EstimateValue::Exact(r) => Some(*r),
            EstimateValue::Approx(_) => None,
        }
    }
}

/// Limit estimate from level values `v_n ≈ L + C/q_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantEstimate {
    pub invariant: String,
    pub value: EstimateValue,
    pub error_bound: f64,
    pub levels: Vec<u32>,
    pub model: Model,
    /// Fitted `C` (zero for exact estimates).
    pub slope: f64,
}

impl InvariantEstimate {
    pub fn exact(invariant: impl Into<String>, value: Rational, levels: Vec<u32>) -> Self {
        InvariantEstimate {
            invariant: invariant.into(),
            value: EstimateValue::Exact(value),
            error_bound: 0.0,
            levels,
            model: Model::Exact,
            slope: 0.0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }
}

impl Serialize for InvariantEstimate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("InvariantEstimate", 5)?;
        st.serialize_field("invariant", &self.invariant)?;
        match &self.value {
            EstimateValue::Exact(r) => st.serialize_field("value", &rational_string(r))?,
            EstimateValue::Approx(v) => st.serialize_field("value", v)?,
        }
        st.serialize_field("error_bound", &self.error_bound)?;
        st.serialize_field("levels", &self.levels)?;
        st.serialize_field("model", &self.model.to_string())?;
        st.end()
    }
}

/// Least-squares line `y = a + b x`, returned as `(a, b)`.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let b = if sxx.is_zero() { 0.0 } else { sxy / sxx };
    (my - b * mx, b)
}

/// Fits `v = L + C/q` to `(n, q, v)` samples.
///
/// When the last `min(3, len)` values coincide the estimate is exact.
/// Otherwise `error_bound` is the smallest `E` with
/// `|v_n - L| <= E * q_max / q_n` on every sample.
pub fn extrapolate(invariant: &str, samples: &[(u32, u64, Rational)]) -> Result<InvariantEstimate> {
    if samples.len() < 2 {
        return Err(HkError::Config(format!(
            "estimating {invariant} needs at least two levels"
        )));
    }
    let levels: Vec<u32> = samples.iter().map(|s| s.0).collect();
    let tail = &samples[samples.len() - samples.len().min(3)..];
    if tail.iter().all(|s| s.2 == tail[0].2) {
        return Ok(InvariantEstimate::exact(invariant, tail[0].2, levels));
    }
    let xs: Vec<f64> = samples.iter().map(|s| 1.0 / s.1 as f64).collect();
    let ys: Vec<f64> = samples.iter().map(|s| rational_to_f64(&s.2)).collect();
    let (limit, slope) = linear_fit(&xs, &ys);
    let q_max = samples.iter().map(|s| s.1).max().expect("nonempty") as f64;
    let error_bound = samples
        .iter()
        .zip(&ys)
        .map(|(s, y)| (y - limit).abs() * s.1 as f64 / q_max)
        .fold(0.0, f64::max);
    Ok(InvariantEstimate {
        invariant: invariant.to_string(),
        value: EstimateValue::Approx(limit),
        error_bound,
        levels,
        model: Model::InverseQ,
        slope,
    })
}
