//! Built-in bank of closed-form instances checked by the `verify` job.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::RingSpec;
use crate::analysis::{
    adjoin_variable_check, boij_ratios, convex_functional, frobenius_poincare_level, scaling_check,
    ComplexPoint,
};
use crate::error::Result;
use crate::ideal::{binomial, Ideal};
use crate::limits::{
    f_limbus_level, f_threshold_level, h_estimate, hilbert_kunz_level, raw_length,
    stable_point_level, Model, Rational,
};
use crate::monomial_ideal::Colength;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

type Check = fn() -> Result<(bool, String)>;

fn ring(p: u64, vars: &[&str]) -> Arc<RingSpec> {
    Arc::new(RingSpec::polynomial_ring(p, vars).expect("valid ring"))
}

fn dvr_closed_form() -> Result<(bool, String)> {
    let r = ring(3, &["x"]);
    let i = Ideal::parse(r.clone(), &["x^2"])?;
    let j = Ideal::parse(r, &["x^3"])?;
    for n in 1..=3 {
        let q = 3u64.pow(n);
        for t in 0..=(2 * q) {
            let raw = raw_length(&i, &j, n, t as i64)?;
            if raw != (2 * t).min(3 * q) {
                return Ok((false, format!("raw({t}) = {raw} at q = {q}")));
            }
        }
    }
    let e = h_estimate(&i, &j, Rational::from_integer(1), &[1, 2, 3])?;
    Ok((e.model == Model::Exact && e.to_f64() == 2.0, format!("h(1) = {}", e.to_f64())))
}

fn plane_stable_points() -> Result<(bool, String)> {
    let m = Ideal::maximal(ring(2, &["x", "y"]));
    for n in 1..=4 {
        let sp = stable_point_level(&m, &m, n)?;
        if sp.t != 2 * sp.q - 1 {
            return Ok((false, format!("t = {} at q = {}", sp.t, sp.q)));
        }
    }
    Ok((true, "t = 2q - 1 for n = 1..4".into()))
}

fn hilbert_kunz_of_powers() -> Result<(bool, String)> {
    for d in [2usize, 3] {
        let vars = ["x", "y", "z"];
        let r = ring(2, &vars[..d]);
        let m = Ideal::maximal(r);
        for t in 1..=3u64 {
            let mt = m.power(t as i64, &Default::default())?;
            let want = binomial(t as u128 + d as u128 - 1, d as u128).expect("small");
            for n in 1..=2 {
                let q = 2u128.pow(n);
                let got = hilbert_kunz_level(&mt, n)? as u128;
                if got != want * q.pow(d as u32) {
                    return Ok((false, format!("d = {d}, t = {t}, n = {n}: {got}")));
                }
            }
        }
    }
    Ok((true, "e_HK(m^t) = binom(t+d-1, d) at levels 1, 2".into()))
}

fn threshold_and_limbus() -> Result<(bool, String)> {
    let r = ring(2, &["x", "y"]);
    let m = Ideal::maximal(r.clone());
    let m2 = Ideal::parse(r, &["x^2", "x*y", "y^2"])?;
    let c = f_threshold_level(&m, &m2, 2)?;
    let r3 = ring(3, &["x"]);
    let i = Ideal::parse(r3.clone(), &["x^2"])?;
    let j = Ideal::parse(r3, &["x^3"])?;
    let b = f_limbus_level(&i, &j, 1)?;
    Ok((c == 10 && b.value == 5, format!("c = {c}, b = {}", b.value)))
}

fn boij_and_convexity() -> Result<(bool, String)> {
    let r = ring(2, &["x", "y", "z"]);
    let cases: [(&[&str], &[&str]); 3] = [
        (&["x^2", "y^3", "z"], &["x", "y", "z"]),
        (&["x*y", "y^2", "z^3"], &["x^2", "y^2", "z^2"]),
        (&["x", "y*z"], &["x^3", "y", "z^2"]),
    ];
    for (ig, jg) in cases {
        let i = Ideal::parse(r.clone(), ig)?;
        let j = Ideal::parse(r.clone(), jg)?;
        for n in 1..=2 {
            let b = boij_ratios(&i, &j, n, 24)?;
            if !b.is_non_increasing() {
                return Ok((false, format!("Boij ratios increase for I = {i}")));
            }
            let grid: Vec<Rational> = (2..=16).map(|k| Rational::new(k, 4)).collect();
            let c = convex_functional(&i, &j, n, Rational::new(1, 2), &grid)?;
            if !c.slopes_non_increasing() {
                return Ok((false, format!("slopes increase for I = {i}")));
            }
        }
    }
    Ok((true, "3 instances, levels 1, 2".into()))
}

fn poincare_at_zero() -> Result<(bool, String)> {
    let r = ring(2, &["x", "y"]);
    let m = Ideal::maximal(r.clone());
    let j = Ideal::parse(r, &["x^2", "y^3"])?;
    for jj in [&m, &j] {
        for n in 1..=3 {
            let f = frobenius_poincare_level(&m, jj, n, ComplexPoint::new(0.0, 0.0))?;
            let q = 2f64.powi(n as i32);
            let e = hilbert_kunz_level(jj, n)? as f64 / (q * q);
            if (f.re - e).abs() > 1e-12 || f.im.abs() > 1e-12 {
                return Ok((false, format!("F(0) = {f} vs {e}")));
            }
        }
    }
    Ok((true, "F_n(0) equals the e_HK level value".into()))
}

fn scaling_and_adjunction() -> Result<(bool, String)> {
    let r = ring(3, &["x"]);
    let x = Ideal::maximal(r.clone());
    let j = Ideal::parse(r, &["x^2"])?;
    let grid: Vec<Rational> = (0..=27).map(|k| Rational::new(k, 9)).collect();
    let s = scaling_check(&x, &j, 2, 2, &grid)?;
    let a = adjoin_variable_check(&x, &x, 1, 1, 3, &grid)?;
    Ok((
        s.power_exact && a.max_residual <= 3.0 / 27.0,
        format!("power residual {}, adjunction residual {}", s.power_residual, a.max_residual),
    ))
}

fn groebner_matches_staircase() -> Result<(bool, String)> {
    let r = Arc::new(RingSpec::parse(2, &["x", "y"], &[3, 2], &["x^2 + y^3"])?);
    let j = Ideal::parse(r, &["x^4", "y^4"])?;
    let gb = j.groebner()?.colength()?;
    let plane = ring(2, &["x", "y"]);
    let k = Ideal::parse(plane, &["x^3", "x*y^2", "y^5"])?;
    let mono = k.as_monomial_ideal().expect("monomial").staircase_colength()?;
    let poly = k.groebner()?.colength()?;
    Ok((
        gb == Colength::Finite(8) && mono == poly,
        format!("cusp colength {gb:?}, staircase {mono:?} vs basis {poly:?}"),
    ))
}

const BANK: [(&str, Check); 8] = [
    ("dvr_closed_form", dvr_closed_form),
    ("plane_stable_points", plane_stable_points),
    ("hilbert_kunz_of_powers", hilbert_kunz_of_powers),
    ("threshold_and_limbus", threshold_and_limbus),
    ("boij_and_convexity", boij_and_convexity),
    ("poincare_at_zero", poincare_at_zero),
    ("scaling_and_adjunction", scaling_and_adjunction),
    ("groebner_matches_staircase", groebner_matches_staircase),
];

/// Runs every check; an error counts as a failure.
pub fn run_verify_bank() -> Vec<VerifyOutcome> {
    BANK.iter()
        .map(|(name, check)| {
            let (passed, detail) = match check() {
                Ok(v) => v,
                Err(e) => (false, e.to_string()),
            };
            VerifyOutcome {
                name: name.to_string(),
                passed,
                detail,
            }
        })
        .collect()
}
