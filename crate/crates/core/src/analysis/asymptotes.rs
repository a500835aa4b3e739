//! Leading behaviour of h near zero and at infinity.

use serde::Serialize;

use crate::error::{HkError, Result};
use crate::ideal::Ideal;
use crate::limits::{h_estimate, hilbert_kunz, hilbert_samuel, linear_fit, Rational};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AsymptoteFit {
    /// Power `e` in `h(s) ~ L s^e`.
    pub exponent: i64,
    /// Fitted limit `L`.
    pub limit: f64,
    /// `(s, h(s)/s^e)` samples behind the fit.
    pub samples: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AsymptoteReport {
    pub near_zero: AsymptoteFit,
    pub at_infinity: AsymptoteFit,
    /// `e(I)/d!` when `I` has finite colength.
    pub reference: Option<f64>,
}

fn quotient_dimension(id: &Ideal) -> Result<usize> {
    id.groebner()?
        .leading()
        .dimension()
        .ok_or_else(|| HkError::Domain(format!("{id} is the unit ideal")))
}

fn factorial(d: usize) -> f64 {
    (1..=d).map(|k| k as f64).product()
}

/// Fits `h(s)/s^{d-dim(R/I)}` as `s → 0` and `h(s)/s^{dim(R/J)}` as
/// `s → ∞` (the plateau `e_HK(J)` when `J` has finite colength), using
/// `s = p^{∓k}` for `k = 1, 2, 3` and `h` extrapolated over `levels`.
pub fn asymptote_check(i: &Ideal, j: &Ideal, levels: &[u32]) -> Result<AsymptoteReport> {
    if i.is_zero_generated() {
        return Err(HkError::Domain("I is zero".into()));
    }
    let ring = i.ring();
    let d = ring.dim();
    let p = ring.characteristic() as i128;
    let e0 = d as i64 - quotient_dimension(i)? as i64;

    let mut near = Vec::new();
    for k in 1..=3u32 {
        let s = Rational::new(1, p.pow(k));
        let h = h_estimate(i, j, s, levels)?.to_f64();
        let sf = 1.0 / p.pow(k) as f64;
        near.push((sf, h / sf.powi(e0 as i32)));
    }
    let xs: Vec<f64> = near.iter().map(|x| x.0).collect();
    let ys: Vec<f64> = near.iter().map(|x| x.1).collect();
    let near_zero = AsymptoteFit {
        exponent: e0,
        limit: linear_fit(&xs, &ys).0,
        samples: near,
    };

    let at_infinity = if j.is_finite_colength()? {
        let e = hilbert_kunz(j, levels)?.to_f64();
        AsymptoteFit {
            exponent: 0,
            limit: e,
            samples: Vec::new(),
        }
    } else {
        let e_inf = quotient_dimension(j)? as i64;
        let mut far = Vec::new();
        for k in 1..=3u32 {
            let s = Rational::from_integer(p.pow(k));
            let h = h_estimate(i, j, s, levels)?.to_f64();
            let sf = p.pow(k) as f64;
            far.push((sf, h / sf.powi(e_inf as i32)));
        }
        let xs: Vec<f64> = far.iter().map(|x| 1.0 / x.0).collect();
        let ys: Vec<f64> = far.iter().map(|x| x.1).collect();
        AsymptoteFit {
            exponent: e_inf,
            limit: linear_fit(&xs, &ys).0,
            samples: far,
        }
    };

    let reference = if i.is_finite_colength()? {
        let e = hilbert_samuel(i, d as u64 + 6)?.to_f64();
        Some(e / factorial(d))
    } else {
        None
    };
    Ok(AsymptoteReport {
        near_zero,
        at_infinity,
        reference,
    })
}
