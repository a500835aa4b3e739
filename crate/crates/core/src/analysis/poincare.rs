//! Frobenius–Poincaré level values and their quadrature counterpart.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::checked_power;
use crate::error::{HkError, Result};
use crate::ideal::Ideal;
use crate::limits::length_table;

/// A point `y` of the complex plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexPoint {
    pub re: f64,
    pub im: f64,
}

impl ComplexPoint {
    pub fn new(re: f64, im: f64) -> Self {
        ComplexPoint { re, im }
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// Tail terms below this size are dropped when the sum is infinite.
const TAIL_EPS: f64 = 1e-13;

/// `F_n(y) = Σ_j (raw(j+1) - raw(j)) e^{-iyj/q} / q^dim`.
///
/// The sum is finite when `J` has finite colength. Otherwise `y` must lie
/// in the open lower half plane, where the terms decay geometrically.
pub fn frobenius_poincare_level(i: &Ideal, j: &Ideal, n: u32, y: ComplexPoint) -> Result<Complex64> {
    let ring = i.ring();
    let q = checked_power(ring.characteristic(), n)?;
    let d = ring.dim() as i32;
    let finite = j.is_finite_colength()?;
    if !finite && y.im >= 0.0 {
        return Err(HkError::Domain(format!(
            "J has infinite colength, so y = {}{:+}i must have negative imaginary part",
            y.re, y.im
        )));
    }
    let table = length_table(i, j, n)?;
    let mut g = table.lock().expect("length table poisoned");
    let stable = if finite { g.stable_point(u64::MAX)? } else { None };
    let yc = y.to_complex();
    let qf = q as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    let mut prev = g.raw(0)?;
    let mut k: i64 = 0;
    loop {
        if let Some(s) = stable {
            if k as u64 >= s {
                break;
            }
        }
        let cur = g.raw(k + 1)?;
        let step = (cur - prev) as f64;
        let phase = (-Complex64::i() * yc * (k as f64 / qf)).exp();
        acc += phase * step;
        prev = cur;
        k += 1;
        if stable.is_none() {
            // |e^{-iyk/q}| = e^{im(y) k/q}; stop once the remaining mass,
            // bounded by the current step size times a geometric tail, is
            // negligible.
            let decay = (y.im * k as f64 / qf).exp();
            let ratio = (y.im / qf).exp();
            let tail = decay * (step + 1.0) * (k as f64 + qf) / (1.0 - ratio);
            if tail < TAIL_EPS * qf.powi(d) {
                break;
            }
        }
    }
    Ok(acc / qf.powi(d))
}

/// `∫_0^C h(t) iy e^{-iyt} dt + h(C) e^{-iyC}` by the composite trapezoid
/// rule on the given nodes, `C` being the last node.
pub fn frobenius_poincare_integral(
    samples: &[(f64, f64)],
    plateau: f64,
    y: ComplexPoint,
) -> Result<Complex64> {
    let last = samples
        .last()
        .ok_or_else(|| HkError::Domain("no h samples to integrate".into()))?;
    let yc = y.to_complex();
    let iy = Complex64::i() * yc;
    let integrand = |t: f64, h: f64| iy * (-iy * t).exp() * h;
    let mut acc = Complex64::new(0.0, 0.0);
    for w in samples.windows(2) {
        let (t0, h0) = w[0];
        let (t1, h1) = w[1];
        acc += (integrand(t0, h0) + integrand(t1, h1)) * ((t1 - t0) / 2.0);
    }
    Ok(acc + (-iy * last.0).exp() * plateau)
}

/// `(1 - e^{-iy}) / (iy)`, with the value 1 at `y = 0`.
pub fn dvr_limit(y: ComplexPoint) -> Complex64 {
    let yc = y.to_complex();
    if yc.norm() < 1e-12 {
        return Complex64::new(1.0, 0.0);
    }
    let iy = Complex64::i() * yc;
    (Complex64::new(1.0, 0.0) - (-iy).exp()) / iy
}
