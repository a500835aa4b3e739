//! Level-n checks of the power, Frobenius-power and adjunction identities.

use serde::Serialize;

use crate::algebra::{checked_power, Monomial, Polynomial, RingSpec};
use crate::error::{HkError, Result};
use crate::groebner::Budget;
use crate::ideal::Ideal;
use crate::limits::estimate::{q_power, rational_to_f64, Rational};
use crate::limits::h_level;
use std::sync::Arc;

/// One grid point of [`scaling_check`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalingRow {
    pub s: f64,
    /// `h_n(I^{n0}, J)(s)` and `h_n(I, J)(n0 s)`.
    pub power_lhs: f64,
    pub power_rhs: f64,
    /// `h_n(I, J^[p^{n0}])(s)` and `p^{n0 d} h_n(I, J)(s / p^{n0})`.
    pub frobenius_lhs: f64,
    pub frobenius_rhs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalingReport {
    pub n0: u32,
    pub n: u32,
    pub q: u64,
    pub rows: Vec<ScalingRow>,
    pub power_residual: f64,
    pub frobenius_residual: f64,
    /// True when every power-law residual is exactly zero.
    pub power_exact: bool,
}

/// Compares both sides of the two scaling laws at level `n`.
///
/// The power law is an identity of level values whenever `sq` is an
/// integer; the Frobenius law only holds in the limit, so its residual
/// decays like `C/q`.
pub fn scaling_check(
    i: &Ideal,
    j: &Ideal,
    n0: u32,
    n: u32,
    grid: &[Rational],
) -> Result<ScalingReport> {
    if n0 == 0 {
        return Err(HkError::Config("n0 must be positive".into()));
    }
    let ring = i.ring();
    let p = ring.characteristic();
    let q = checked_power(p, n)?;
    let pn0 = checked_power(p, n0)?;
    let i_pow = i.power(n0 as i64, &Budget::default())?;
    let j_frob = j.frobenius_power(pn0)?;
    let scale = q_power(pn0, ring.dim() as i64)?;
    let mut rows = Vec::with_capacity(grid.len());
    let mut power_residual: f64 = 0.0;
    let mut frobenius_residual: f64 = 0.0;
    let mut power_exact = true;
    for s in grid {
        let pl = h_level(&i_pow, j, n, *s)?.normalized;
        let pr = h_level(i, j, n, *s * Rational::from_integer(n0 as i128))?.normalized;
        let fl = h_level(i, &j_frob, n, *s)?.normalized;
        let fr = scale * h_level(i, j, n, *s / Rational::from_integer(pn0 as i128))?.normalized;
        power_exact &= pl == pr;
        power_residual = power_residual.max(rational_to_f64(&(pl - pr)).abs());
        frobenius_residual = frobenius_residual.max(rational_to_f64(&(fl - fr)).abs());
        rows.push(ScalingRow {
            s: rational_to_f64(s),
            power_lhs: rational_to_f64(&pl),
            power_rhs: rational_to_f64(&pr),
            frobenius_lhs: rational_to_f64(&fl),
            frobenius_rhs: rational_to_f64(&fr),
        });
    }
    Ok(ScalingReport {
        n0,
        n,
        q,
        rows,
        power_residual,
        frobenius_residual,
        power_exact,
    })
}

/// One grid point of [`adjoin_variable_check`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdjoinRow {
    pub s: f64,
    pub extended: f64,
    pub reference: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdjoinReport {
    pub alpha: u64,
    pub beta: u64,
    pub n: u32,
    pub q: u64,
    pub rows: Vec<AdjoinRow>,
    pub max_residual: f64,
}

/// Name for the new variable that does not clash with the ring's.
fn fresh_name(ring: &RingSpec) -> String {
    let mut name = "t".to_string();
    let mut k = 0;
    while ring.variables().contains(&name) {
        k += 1;
        name = format!("t{k}");
    }
    name
}

/// Level-`n` h-values of `(I + (t^α), J + (t^β))` in `R[t]` against
/// `α ∫_{s-β/α}^{s} h_n(I, J)(x) dx`, integrated by trapezoids on the
/// q-grid. With `α = 0` the ideal `I` is extended without `t` and the
/// reference is `β h_n(I, J)(s)`.
pub fn adjoin_variable_check(
    i: &Ideal,
    j: &Ideal,
    alpha: u64,
    beta: u64,
    n: u32,
    grid: &[Rational],
) -> Result<AdjoinReport> {
    if beta == 0 {
        return Err(HkError::Config("beta must be positive".into()));
    }
    let ring = i.ring();
    let q = checked_power(ring.characteristic(), n)?;
    let ext = Arc::new(ring.adjoin_variable(&fresh_name(ring), 1)?);
    let nv = ext.nvars();
    let t_pow = |e: u64| -> Polynomial {
        let mut ex = vec![0u64; nv];
        ex[nv - 1] = e;
        Polynomial::monomial(ext.field(), Monomial::new(ex))
    };
    let lift = |id: &Ideal| -> Result<Vec<Polynomial>> {
        id.nonzero_generators().map(|g| ring.lift(g, 1)).collect()
    };
    let mut ig = lift(i)?;
    if alpha > 0 {
        ig.push(t_pow(alpha));
    }
    let mut jg = lift(j)?;
    jg.push(t_pow(beta));
    let i_ext = Ideal::new(ext.clone(), ig)?;
    let j_ext = Ideal::new(ext, jg)?;

    let h = |x: Rational| -> Result<f64> { Ok(rational_to_f64(&h_level(i, j, n, x)?.normalized)) };
    let qr = Rational::from_integer(q as i128);
    let mut rows = Vec::with_capacity(grid.len());
    let mut max_residual: f64 = 0.0;
    for s in grid {
        let extended = rational_to_f64(&h_level(&i_ext, &j_ext, n, *s)?.normalized);
        let reference = if alpha == 0 {
            beta as f64 * h(*s)?
        } else {
            let a = *s - Rational::new(beta as i128, alpha as i128);
            // Nodes: a, the q-grid points strictly inside, and s.
            let mut nodes = vec![a];
            let mut k = (a * qr).floor() + Rational::from_integer(1);
            while k / qr < *s {
                nodes.push(k / qr);
                k += Rational::from_integer(1);
            }
            nodes.push(*s);
            let mut acc = 0.0;
            let mut prev = (rational_to_f64(&nodes[0]), h(nodes[0])?);
            for x in &nodes[1..] {
                let cur = (rational_to_f64(x), h(*x)?);
                acc += (cur.0 - prev.0) * (cur.1 + prev.1) / 2.0;
                prev = cur;
            }
            alpha as f64 * acc
        };
        max_residual = max_residual.max((extended - reference).abs());
        rows.push(AdjoinRow {
            s: rational_to_f64(s),
            extended,
            reference,
        });
    }
    Ok(AdjoinReport {
        alpha,
        beta,
        n,
        q,
        rows,
        max_residual,
    })
}
