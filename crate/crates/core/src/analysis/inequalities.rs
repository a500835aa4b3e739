//! Numerical checks of inequalities relating h, e, e_HK and F-thresholds.

use serde::Serialize;

use crate::error::{HkError, Result};
use crate::groebner::Budget;
use crate::ideal::Ideal;
use crate::limits::{f_threshold_estimate, h_estimate, hilbert_kunz, hilbert_samuel, Rational};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InequalityCheck {
    pub check: String,
    pub inputs: String,
    pub level: u32,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
    pub witness: Option<String>,
}

fn factorial(r: u32) -> f64 {
    (1..=r).map(f64::from).product()
}

/// Slack used for comparisons between extrapolated values.
const TOL: f64 = 1e-9;

/// Runs every applicable check for `(I, J)` with height parameter `r`.
///
/// * `watanabe_containment` (per level): `I^{q+1} ⊄ I^[q]`, with the first
///   generator of `I^{q+1}` outside `I^[q]` as witness.
/// * `watanabe_multiplicity`: `e_HK(I) > e(I)/d!`.
/// * `hk_threshold_bound`: `e_HK(J) ≤ c^J(I)^r / r! · e_HK(J R/I)`.
/// * `smirnov_betancourt`: `e_HK(J) ≤ (c^J(I)/r)^r · e_HK(J R/I)`.
/// * `hmtw`: `e(I)/d^d ≥ min h(x)/x^d` over a grid of `(0, c^J(I)]`, for
///   `J` generated by a system of parameters.
/// * `normalized_monotonicity`: `h(s)/s^r` never increases on the grid.
pub fn inequality_report(i: &Ideal, j: &Ideal, r: u32, levels: &[u32]) -> Result<Vec<InequalityCheck>> {
    if levels.is_empty() {
        return Err(HkError::Config("no levels given".into()));
    }
    if r == 0 {
        return Err(HkError::Config("r must be positive".into()));
    }
    let ring = i.ring();
    let p = ring.characteristic();
    let d = ring.dim() as u32;
    let top = *levels.iter().max().expect("nonempty");
    let inputs = format!("I = {i}; J = {j}; r = {r}");
    let mut out = Vec::new();

    for &n in levels {
        let q = crate::algebra::checked_power(p, n)?;
        let big = i.power(q as i64 + 1, &Budget::default())?;
        let frob = i.frobenius_power(q)?;
        let witness = frob.non_member(&big)?.map(|g| g.display_with(ring.variables()).to_string());
        out.push(InequalityCheck {
            check: "watanabe_containment".into(),
            inputs: format!("I = {i}; q = {q}"),
            level: n,
            lhs: (q + 1) as f64,
            rhs: q as f64,
            holds: witness.is_some(),
            witness,
        });
    }

    let i_finite = i.is_finite_colength()?;
    let e_i = if i_finite {
        Some(hilbert_samuel(i, d as u64 + 6)?.to_f64())
    } else {
        None
    };
    if let Some(e) = e_i {
        let ehk = hilbert_kunz(i, levels)?.to_f64();
        let rhs = e / factorial(d);
        out.push(InequalityCheck {
            check: "watanabe_multiplicity".into(),
            inputs: format!("I = {i}"),
            level: top,
            lhs: ehk,
            rhs,
            holds: ehk > rhs + TOL,
            witness: None,
        });
    }

    let c = f_threshold_estimate(i, j, levels)?.to_f64();
    if j.is_finite_colength()? {
        let ehk_j = hilbert_kunz(j, levels)?.to_f64();
        let quot = Arc::new(ring.quotient(&i.nonzero_generators().cloned().collect::<Vec<_>>())?);
        let j_bar = Ideal::new(quot, j.generators().to_vec())?;
        let ehk_bar = hilbert_kunz(&j_bar, levels)?.to_f64();
        let bound = c.powi(r as i32) / factorial(r) * ehk_bar;
        out.push(InequalityCheck {
            check: "hk_threshold_bound".into(),
            inputs: inputs.clone(),
            level: top,
            lhs: ehk_j,
            rhs: bound,
            holds: ehk_j <= bound + TOL,
            witness: None,
        });
        let sb = (c / r as f64).powi(r as i32) * ehk_bar;
        out.push(InequalityCheck {
            check: "smirnov_betancourt".into(),
            inputs: inputs.clone(),
            level: top,
            lhs: ehk_j,
            rhs: sb,
            holds: ehk_j <= sb + TOL,
            witness: None,
        });
    }

    let grid = threshold_grid(p, c);
    let mut hs = Vec::with_capacity(grid.len());
    for s in &grid {
        let est = h_estimate(i, j, *s, levels)?;
        hs.push((crate::limits::rational_to_f64(s), est.to_f64(), est.error_bound));
    }

    // Only meaningful when J is a parameter ideal.
    let j_parameters = j.is_finite_colength()? && j.minimal_generator_count()? == d as usize;
    if let (Some(e), false, true) = (e_i, hs.is_empty(), j_parameters) {
        let (x0, v, _) = hs
            .iter()
            .map(|&(x, h, err)| (x, h / x.powi(d as i32), err))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("nonempty");
        let lhs = e / f64::from(d).powi(d as i32);
        out.push(InequalityCheck {
            check: "hmtw".into(),
            inputs: inputs.clone(),
            level: top,
            lhs,
            rhs: v,
            holds: lhs + TOL >= v,
            witness: Some(format!("x0 = {x0}")),
        });
    }

    if hs.len() >= 2 {
        let vals: Vec<(f64, f64, f64)> = hs
            .iter()
            .map(|&(x, h, err)| (x, h / x.powi(r as i32), err / x.powi(r as i32)))
            .collect();
        let mut worst = 0.0f64;
        let mut witness = None;
        for w in vals.windows(2) {
            let rise = w[1].1 - w[0].1 - (w[0].2 + w[1].2);
            if rise > worst + TOL {
                worst = rise;
                witness = Some(format!("s = {} to {}", w[0].0, w[1].0));
            }
        }
        out.push(InequalityCheck {
            check: "normalized_monotonicity".into(),
            inputs,
            level: top,
            lhs: worst,
            rhs: 0.0,
            holds: witness.is_none(),
            witness,
        });
    }
    Ok(out)
}

/// `s = k/p²` for `k ≥ 1` up to `c`, at most 32 points.
fn threshold_grid(p: u64, c: f64) -> Vec<Rational> {
    let den = (p * p) as i128;
    (1..)
        .map(|k| Rational::new(k, den))
        .take_while(|s| crate::limits::rational_to_f64(s) <= c + 1e-12)
        .take(32)
        .collect()
}
