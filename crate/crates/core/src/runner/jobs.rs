//! Job execution and report assembly.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::cache::ResultCache;
use super::config::{Job, JobConfig};
use super::verify::run_verify_bank;
use crate::algebra::checked_power;
use crate::analysis::{
    adjoin_variable_check, asymptote_check, boij_ratios, convex_functional, frobenius_poincare_level,
    inequality_report, scaling_check,
};
use crate::error::{HkError, Result};
use crate::ideal::Ideal;
use crate::limits::{
    density_level, density_numerator, extrapolate, f_limbus_level, f_threshold_level,
    graded_density_level, h_level, hilbert_kunz_level, hilbert_samuel, hilbert_samuel_lengths,
    length_table, rational_string, stable_point_level, InvariantEstimate, Rational,
};
use crate::limits::estimate::q_power;
use crate::monomial_ideal::Colength;

/// A job result: the JSON document and the flat rows used for CSV.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub json: Value,
    pub rows: Vec<Value>,
    /// Set by `verify` when some check failed.
    #[serde(default)]
    pub failed: bool,
}

impl Report {
    fn rows_only(rows: Vec<Value>) -> Self {
        Report {
            json: Value::Array(rows.clone()),
            rows,
            failed: false,
        }
    }
}

fn rat_parts(r: &Rational) -> (i64, i64) {
    (
        i64::try_from(*r.numer()).unwrap_or(i64::MAX),
        i64::try_from(*r.denom()).unwrap_or(i64::MAX),
    )
}

fn estimate_json(e: &InvariantEstimate) -> Result<Value> {
    Ok(serde_json::to_value(e)?)
}

/// Grid at level `n`, resolving a bare q-grid to `0..=stable point`.
fn grid_at(cfg: &JobConfig, n: u32) -> Result<Vec<Rational>> {
    let q = checked_power(cfg.ring.characteristic(), n)?;
    let stable = if cfg.grid.needs_stable_point() {
        let table = length_table(&cfg.i, &cfg.j, n)?;
        let mut g = table.lock().expect("length table poisoned");
        match g.jq_colength() {
            Colength::Finite(len) => g.stable_point(len + 1)?,
            Colength::Infinite => None,
        }
    } else {
        None
    };
    cfg.grid.points(q, stable)
}

fn level_report(cfg: &JobConfig, n: u32) -> Result<Report> {
    let (i, j) = (&cfg.i, &cfg.j);
    let q = checked_power(cfg.ring.characteristic(), n)?;
    let d = cfg.ring.dim() as i64;
    Ok(match cfg.job {
        Job::HGrid => {
            let mut rows = Vec::new();
            for s in grid_at(cfg, n)? {
                let x = h_level(i, j, n, s)?;
                let (sn, sd) = rat_parts(&s);
                let (vn, vd) = rat_parts(&x.normalized);
                rows.push(json!({
                    "n": n, "q": q, "s_num": sn, "s_den": sd, "ceil_sq": x.ceil_sq,
                    "raw_length": x.raw, "normalized_num": vn, "normalized_den": vd,
                }));
            }
            Report::rows_only(rows)
        }
        Job::DensityGrid => {
            let mut rows = Vec::new();
            for s in grid_at(cfg, n)? {
                let num = density_numerator(i, j, n, s)?;
                let f = density_level(i, j, n, s)?;
                let (sn, sd) = rat_parts(&s);
                let (fn_, fd) = rat_parts(&f);
                rows.push(json!({
                    "n": n, "q": q, "s_num": sn, "s_den": sd,
                    "ceil_sq": crate::limits::estimate::ceil_times(&s, q)?,
                    "numerator": num, "density_num": fn_, "density_den": fd,
                }));
            }
            Report::rows_only(rows)
        }
        Job::GradedDensity => {
            let mut rows = Vec::new();
            for s in grid_at(cfg, n)? {
                let f = graded_density_level(j, n, s)?;
                let (sn, sd) = rat_parts(&s);
                let (fn_, fd) = rat_parts(&f);
                rows.push(json!({
                    "n": n, "q": q, "s_num": sn, "s_den": sd,
                    "floor_sq": crate::limits::estimate::floor_times(&s, q)?,
                    "density_num": fn_, "density_den": fd,
                }));
            }
            Report::rows_only(rows)
        }
        Job::Ehk => {
            let raw = hilbert_kunz_level(j, n)?;
            let v = Rational::from_integer(raw as i128) * q_power(q, -d)?;
            let (vn, vd) = rat_parts(&v);
            Report::rows_only(vec![json!({
                "n": n, "q": q, "raw_length": raw, "normalized_num": vn, "normalized_den": vd,
            })])
        }
        Job::FThreshold => {
            let c = f_threshold_level(i, j, n)?;
            Report::rows_only(vec![json!({"invariant": "c_level", "n": n, "value": c})])
        }
        Job::FLimbus => {
            let b = f_limbus_level(i, j, n)?;
            Report::rows_only(vec![json!({
                "invariant": "b_level", "n": n, "value": b.value, "outside_radical": b.outside_radical,
            })])
        }
        Job::StablePoint => {
            let sp = stable_point_level(i, j, n)?;
            Report::rows_only(vec![json!({
                "n": n, "q": q, "t": sp.t, "ratio": rational_string(&sp.ratio),
            })])
        }
        Job::FpGrid => {
            let mut rows = Vec::new();
            for y in &cfg.y {
                let f = frobenius_poincare_level(i, j, n, *y)?;
                rows.push(json!({
                    "n": n, "q": q, "y_re": y.re, "y_im": y.im, "f_re": f.re, "f_im": f.im,
                }));
            }
            Report::rows_only(rows)
        }
        Job::Convexity => {
            let s0 = cfg.s0.expect("checked at parse time");
            let grid: Vec<Rational> = grid_at(cfg, n)?.into_iter().filter(|s| *s >= s0).collect();
            let rep = convex_functional(i, j, n, s0, &grid)?;
            let rows: Vec<Value> = rep
                .points
                .iter()
                .map(|p| {
                    let (sn, sd) = rat_parts(&p.s);
                    json!({
                        "n": n, "q": q, "s_num": sn, "s_den": sd,
                        "value_num": p.value.numer().to_string(),
                        "value_den": p.value.denom().to_string(),
                    })
                })
                .collect();
            let json = json!({
                "n": n, "q": q, "mu": rep.context.mu, "s0": rational_string(&s0),
                "points": rows.clone(),
                "slopes": rep.slopes.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "slopes_non_increasing": rep.slopes_non_increasing(),
                "violation": rep.violation,
            });
            Report { json, rows, failed: false }
        }
        Job::Boij => {
            let rep = boij_ratios(i, j, n, cfg.j_max.expect("checked at parse time"))?;
            let rows = rep
                .rows
                .iter()
                .map(|r| {
                    let (an, ad) = rat_parts(&r.ratio);
                    json!({
                        "n": n, "q": q, "mu": rep.mu, "j": r.j, "slice_length": r.slice_length,
                        "binomial": r.binomial.to_string(), "ratio_num": an, "ratio_den": ad,
                    })
                })
                .collect();
            let mut json = serde_json::to_value(&rep)?;
            json["non_increasing"] = Value::Bool(rep.is_non_increasing());
            Report { json, rows, failed: false }
        }
        Job::ScalingCheck => {
            let rep = scaling_check(i, j, cfg.n0, n, &grid_at(cfg, n)?)?;
            let rows = rep
                .rows
                .iter()
                .map(|r| {
                    let mut v = serde_json::to_value(r).expect("plain struct");
                    v["n"] = json!(n);
                    v["q"] = json!(q);
                    v
                })
                .collect();
            let mut json = serde_json::to_value(&rep)?;
            json["scaled_frobenius_residual"] = json!(rep.frobenius_residual * q as f64);
            Report { json, rows, failed: false }
        }
        Job::AdjoinCheck => {
            let rep = adjoin_variable_check(i, j, cfg.alpha, cfg.beta, n, &grid_at(cfg, n)?)?;
            let rows = rep
                .rows
                .iter()
                .map(|r| {
                    let mut v = serde_json::to_value(r).expect("plain struct");
                    v["n"] = json!(n);
                    v["q"] = json!(q);
                    v
                })
                .collect();
            let mut json = serde_json::to_value(&rep)?;
            json["scaled_residual"] = json!(rep.max_residual * q as f64);
            Report { json, rows, failed: false }
        }
        _ => unreachable!("not a per-level job"),
    })
}

fn is_per_level(job: Job) -> bool {
    !matches!(
        job,
        Job::Multiplicity | Job::Asymptotes | Job::Inequalities | Job::Verify
    )
}

fn ideal_key(id: &Ideal) -> String {
    id.canonical_key()
}

/// Runs a job. Per-level work fans out over rayon and is gathered in
/// level order; cached entries are keyed by ring, ideals, level, order and
/// every job parameter.
pub fn run_job(cfg: &JobConfig, cache: &ResultCache) -> Result<Report> {
    let ring_key = cfg.ring.canonical_key();
    let order = format!("{:?}", cfg.ring.default_order().kind());
    let params = cfg.params_key();
    let (ik, jk) = (ideal_key(&cfg.i), ideal_key(&cfg.j));
    let cached = |n: &str, f: &dyn Fn() -> Result<Report>| -> Result<Report> {
        cache.get_or_compute(&[&ring_key, &ik, &jk, n, &order, &params], f)
    };
    if !is_per_level(cfg.job) {
        return cached("all", &|| global_report(cfg));
    }
    let levels = cfg.levels();
    let parts: Vec<Report> = levels
        .par_iter()
        .map(|&n| cached(&n.to_string(), &|| level_report(cfg, n)))
        .collect::<Result<_>>()?;
    combine(cfg, &levels, parts)
}

fn combine(cfg: &JobConfig, levels: &[u32], parts: Vec<Report>) -> Result<Report> {
    let rows: Vec<Value> = parts.iter().flat_map(|p| p.rows.iter().cloned()).collect();
    let level_values = |key: &str| -> Result<Vec<(u32, u64, Rational)>> {
        let p = cfg.ring.characteristic();
        levels
            .iter()
            .zip(&rows)
            .map(|(&n, r)| {
                let q = checked_power(p, n)?;
                let v = r[key]
                    .as_i64()
                    .ok_or_else(|| HkError::Domain(format!("missing `{key}` in level row")))?;
                Ok((n, q, Rational::new(v as i128, q as i128)))
            })
            .collect()
    };
    let json = match cfg.job {
        Job::Ehk => {
            let pts: Vec<(u32, u64, Rational)> = rows
                .iter()
                .map(|r| {
                    let n = r["n"].as_u64().unwrap_or(0) as u32;
                    let q = r["q"].as_u64().unwrap_or(1);
                    let v = Rational::new(
                        r["normalized_num"].as_i64().unwrap_or(0) as i128,
                        r["normalized_den"].as_i64().unwrap_or(1) as i128,
                    );
                    (n, q, v)
                })
                .collect();
            if pts.len() >= 2 {
                estimate_json(&extrapolate("e_HK", &pts)?)?
            } else {
                Value::Array(rows.clone())
            }
        }
        Job::FThreshold | Job::FLimbus if rows.len() == 1 => rows[0].clone(),
        Job::FThreshold => {
            let est = extrapolate("c", &level_values("value")?)?;
            json!({"levels": rows.clone(), "estimate": estimate_json(&est)?})
        }
        Job::FLimbus => {
            let outside = rows.iter().any(|r| r["outside_radical"] == Value::Bool(true));
            let est = if outside {
                InvariantEstimate::exact("b", Rational::from_integer(0), levels.to_vec())
            } else {
                extrapolate("b", &level_values("value")?)?
            };
            json!({"levels": rows.clone(), "estimate": estimate_json(&est)?})
        }
        Job::HGrid | Job::DensityGrid | Job::GradedDensity | Job::FpGrid | Job::StablePoint => {
            Value::Array(rows.clone())
        }
        _ => Value::Array(parts.iter().map(|p| p.json.clone()).collect()),
    };
    Ok(Report {
        json,
        rows,
        failed: false,
    })
}

fn global_report(cfg: &JobConfig) -> Result<Report> {
    let levels = cfg.levels();
    Ok(match cfg.job {
        Job::Multiplicity => {
            let t_max = cfg.t_max.expect("checked at parse time");
            let est = hilbert_samuel(&cfg.i, t_max)?;
            let rows = hilbert_samuel_lengths(&cfg.i, t_max)?
                .into_iter()
                .enumerate()
                .map(|(t, len)| json!({"t": t, "length": len}))
                .collect();
            Report {
                json: estimate_json(&est)?,
                rows,
                failed: false,
            }
        }
        Job::Asymptotes => {
            let rep = asymptote_check(&cfg.i, &cfg.j, &levels)?;
            let rows = vec![
                json!({"side": "zero", "exponent": rep.near_zero.exponent, "limit": rep.near_zero.limit}),
                json!({"side": "infinity", "exponent": rep.at_infinity.exponent, "limit": rep.at_infinity.limit}),
            ];
            Report {
                json: serde_json::to_value(&rep)?,
                rows,
                failed: false,
            }
        }
        Job::Inequalities => {
            let checks = inequality_report(&cfg.i, &cfg.j, cfg.r.expect("checked at parse time"), &levels)?;
            let rows: Vec<Value> = checks
                .iter()
                .map(|c| serde_json::to_value(c).expect("plain struct"))
                .collect();
            Report::rows_only(rows)
        }
        Job::Verify => {
            let outcomes = run_verify_bank();
            let failed = outcomes.iter().any(|o| !o.passed);
            let rows: Vec<Value> = outcomes
                .iter()
                .map(|o| serde_json::to_value(o).expect("plain struct"))
                .collect();
            Report {
                json: Value::Array(rows.clone()),
                rows,
                failed,
            }
        }
        _ => unreachable!("per-level job"),
    })
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => n.to_string(),
        other => other.to_string(),
    }
}

/// CSV text of flat row objects; the header comes from the first row.
pub fn render_csv(rows: &[Value]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let header: Vec<String> = match rows.first() {
        Some(Value::Object(m)) => m.keys().cloned().collect(),
        Some(_) => vec!["value".into()],
        None => Vec::new(),
    };
    let io = |e: csv::Error| HkError::Io(e.to_string());
    if !header.is_empty() {
        w.write_record(&header).map_err(io)?;
    }
    for r in rows {
        let rec: Vec<String> = match r {
            Value::Object(m) => header.iter().map(|k| m.get(k).map(cell).unwrap_or_default()).collect(),
            other => vec![cell(other)],
        };
        w.write_record(&rec).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| HkError::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| HkError::Io(e.to_string()))
}

pub fn render_json(v: &Value) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}
