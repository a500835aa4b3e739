//! Job configuration files.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use serde::Deserialize;
use serde_json::Value;

use crate::algebra::RingSpec;
use crate::analysis::ComplexPoint;
use crate::error::{HkError, Result};
use crate::ideal::Ideal;
use crate::limits::{parse_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Job {
    HGrid,
    DensityGrid,
    GradedDensity,
    Ehk,
    Multiplicity,
    FThreshold,
    FLimbus,
    StablePoint,
    FpGrid,
    Convexity,
    Boij,
    ScalingCheck,
    AdjoinCheck,
    Asymptotes,
    Inequalities,
    Verify,
}

impl Job {
    pub const ALL: [Job; 16] = [
        Job::HGrid,
        Job::DensityGrid,
        Job::GradedDensity,
        Job::Ehk,
        Job::Multiplicity,
        Job::FThreshold,
        Job::FLimbus,
        Job::StablePoint,
        Job::FpGrid,
        Job::Convexity,
        Job::Boij,
        Job::ScalingCheck,
        Job::AdjoinCheck,
        Job::Asymptotes,
        Job::Inequalities,
        Job::Verify,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Job::HGrid => "h-grid",
            Job::DensityGrid => "density-grid",
            Job::GradedDensity => "graded-density",
            Job::Ehk => "ehk",
            Job::Multiplicity => "multiplicity",
            Job::FThreshold => "fthreshold",
            Job::FLimbus => "flimbus",
            Job::StablePoint => "stable-point",
            Job::FpGrid => "fp-grid",
            Job::Convexity => "convexity",
            Job::Boij => "boij",
            Job::ScalingCheck => "scaling-check",
            Job::AdjoinCheck => "adjoin-check",
            Job::Asymptotes => "asymptotes",
            Job::Inequalities => "inequalities",
            Job::Verify => "verify",
        }
    }

    /// Grid-shaped jobs default to CSV, the rest to JSON.
    pub fn default_format(self) -> Format {
        match self {
            Job::HGrid | Job::DensityGrid | Job::GradedDensity | Job::FpGrid | Job::Convexity | Job::Boij => {
                Format::Csv
            }
            _ => Format::Json,
        }
    }
}

impl fmt::Display for Job {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Job {
    type Err = HkError;

    fn from_str(s: &str) -> Result<Self> {
        Job::ALL
            .iter()
            .copied()
            .find(|j| j.name() == s)
            .ok_or_else(|| HkError::Config(format!("unknown job `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = HkError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(HkError::Config(format!("unknown format `{s}`"))),
        }
    }
}

/// Points `s` at which level values are taken.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GridSpec {
    /// Every `k/q` from 0 up to `stop`, or up to the stable point.
    QGrid { stop: Option<Rational> },
    Range { start: Rational, stop: Rational, step: Rational },
    List(Vec<Rational>),
}

impl GridSpec {
    /// The points at level `q`. `stable` is the plateau start `t/q` when
    /// known; a bare q-grid needs it.
    pub fn points(&self, q: u64, stable: Option<u64>) -> Result<Vec<Rational>> {
        match self {
            GridSpec::QGrid { stop } => {
                let last = match (stop, stable) {
                    (Some(s), _) => crate::limits::estimate::floor_times(s, q)?,
                    (None, Some(t)) => t as i64,
                    (None, None) => {
                        return Err(HkError::Config(
                            "q-grid needs `s_max` when J^[q] has infinite colength".into(),
                        ))
                    }
                };
                Ok((0..=last.max(0)).map(|k| Rational::new(k as i128, q as i128)).collect())
            }
            GridSpec::Range { start, stop, step } => {
                if *step <= Rational::from_integer(0) {
                    return Err(HkError::Config("grid step must be positive".into()));
                }
                let mut out = Vec::new();
                let mut s = *start;
                while s <= *stop {
                    out.push(s);
                    s += *step;
                    if out.len() > 1_000_000 {
                        return Err(HkError::Config("grid has more than 10^6 points".into()));
                    }
                }
                Ok(out)
            }
            GridSpec::List(v) => Ok(v.clone()),
        }
    }

    pub fn needs_stable_point(&self) -> bool {
        matches!(self, GridSpec::QGrid { stop: None })
    }

    fn key(&self) -> String {
        let r = crate::limits::rational_string;
        match self {
            GridSpec::QGrid { stop } => format!("q-grid:{}", stop.as_ref().map(r).unwrap_or_default()),
            GridSpec::Range { start, stop, step } => format!("range:{}:{}:{}", r(start), r(stop), r(step)),
            GridSpec::List(v) => format!("list:{}", v.iter().map(r).collect::<Vec<_>>().join(",")),
        }
    }
}

/// The file format before validation.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    p: u64,
    vars: Vec<String>,
    weights: Option<Vec<u64>>,
    #[serde(default)]
    relations: Vec<String>,
    #[serde(rename = "I", default)]
    i: Option<Vec<String>>,
    #[serde(rename = "J", default)]
    j: Option<Vec<String>>,
    job: Option<String>,
    n: Option<u32>,
    n_min: Option<u32>,
    n_max: Option<u32>,
    s: Option<Value>,
    s_max: Option<Value>,
    y: Option<Vec<Value>>,
    r: Option<u32>,
    alpha: Option<u64>,
    beta: Option<u64>,
    t_max: Option<u64>,
    j_max: Option<u64>,
    s0: Option<Value>,
    n0: Option<u32>,
    out: Option<PathBuf>,
    format: Option<String>,
}

/// A validated job.
#[derive(Debug, Clone)]
pub struct JobConfig {
    pub ring: Arc<RingSpec>,
    pub i: Ideal,
    pub j: Ideal,
    pub job: Job,
    pub n_min: u32,
    pub n_max: u32,
    pub grid: GridSpec,
    pub y: Vec<ComplexPoint>,
    pub r: Option<u32>,
    pub alpha: u64,
    pub beta: u64,
    pub t_max: Option<u64>,
    pub j_max: Option<u64>,
    pub s0: Option<Rational>,
    pub n0: u32,
    pub out: Option<PathBuf>,
    pub format: Format,
}

impl JobConfig {
    pub fn levels(&self) -> Vec<u32> {
        (self.n_min..=self.n_max).collect()
    }

    /// Stable text describing every parameter that affects the output,
    /// used for cache keys.
    pub fn params_key(&self) -> String {
        let y: Vec<String> = self.y.iter().map(|p| format!("{:e}{:+e}", p.re, p.im)).collect();
        format!(
            "job={};grid={};y={};r={:?};alpha={};beta={};t_max={:?};j_max={:?};s0={:?};n0={}",
            self.job,
            self.grid.key(),
            y.join(","),
            self.r,
            self.alpha,
            self.beta,
            self.t_max,
            self.j_max,
            self.s0.as_ref().map(crate::limits::rational_string),
            self.n0
        )
    }
}

fn rational_value(v: &Value, what: &str) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => parse_rational(&n.to_string()),
        _ => Err(HkError::Config(format!("`{what}` must be a rational number"))),
    }
}

fn grid_value(v: Option<&Value>, s_max: Option<Rational>) -> Result<GridSpec> {
    match v {
        None => Ok(GridSpec::QGrid { stop: s_max }),
        Some(Value::String(s)) if s == "q-grid" => Ok(GridSpec::QGrid { stop: s_max }),
        Some(Value::Array(items)) => Ok(GridSpec::List(
            items.iter().map(|x| rational_value(x, "s")).collect::<Result<_>>()?,
        )),
        Some(Value::Object(m)) => {
            let get = |k: &str| {
                m.get(k)
                    .ok_or_else(|| HkError::Config(format!("grid object is missing `{k}`")))
                    .and_then(|x| rational_value(x, k))
            };
            Ok(GridSpec::Range {
                start: get("start")?,
                stop: get("stop")?,
                step: get("step")?,
            })
        }
        Some(other) => Err(HkError::Config(format!("unrecognized grid `{other}`"))),
    }
}

fn complex_value(v: &Value) -> Result<ComplexPoint> {
    let bad = || HkError::Config(format!("y point `{v}` must be a number, [re, im] or {{re, im}}"));
    match v {
        Value::Number(n) => Ok(ComplexPoint::new(n.as_f64().ok_or_else(bad)?, 0.0)),
        Value::Array(a) if a.len() == 2 => Ok(ComplexPoint::new(
            a[0].as_f64().ok_or_else(bad)?,
            a[1].as_f64().ok_or_else(bad)?,
        )),
        Value::Object(_) => serde_json::from_value(v.clone()).map_err(|_| bad()),
        _ => Err(bad()),
    }
}

/// Parses and validates a configuration. `job` overrides the file's `job`.
pub fn parse_job(text: &str, job: Option<Job>) -> Result<JobConfig> {
    let raw: RawConfig = serde_json::from_str(text)?;
    let job = match (job, &raw.job) {
        (Some(j), _) => j,
        (None, Some(name)) => name.parse()?,
        (None, None) => return Err(HkError::Config("no job given".into())),
    };
    let weights = raw.weights.clone().unwrap_or_else(|| vec![1; raw.vars.len()]);
    let vars: Vec<&str> = raw.vars.iter().map(String::as_str).collect();
    let rels: Vec<&str> = raw.relations.iter().map(String::as_str).collect();
    let ring = Arc::new(RingSpec::parse(raw.p, &vars, &weights, &rels)?);
    let ideal = |gens: &Option<Vec<String>>, name: &str| -> Result<Ideal> {
        match gens {
            Some(g) => {
                let g: Vec<&str> = g.iter().map(String::as_str).collect();
                Ideal::parse(ring.clone(), &g)
            }
            None if job == Job::Verify => Ok(Ideal::maximal(ring.clone())),
            None => Err(HkError::Config(format!("missing ideal `{name}`"))),
        }
    };
    let i = ideal(&raw.i, "I")?;
    let j = ideal(&raw.j, "J")?;
    let (n_min, n_max) = match (raw.n, raw.n_min, raw.n_max) {
        (Some(n), None, None) => (n, n),
        (None, lo, Some(hi)) => (lo.unwrap_or(1), hi),
        (None, Some(lo), None) => (lo, lo),
        (None, None, None) => (1, 3),
        _ => return Err(HkError::Config("give either `n` or `n_min`/`n_max`".into())),
    };
    if n_min > n_max {
        return Err(HkError::Config(format!("n_min = {n_min} exceeds n_max = {n_max}")));
    }
    let s_max = raw.s_max.as_ref().map(|v| rational_value(v, "s_max")).transpose()?;
    let grid = grid_value(raw.s.as_ref(), s_max)?;
    let y = raw
        .y
        .as_deref()
        .unwrap_or(&[])
        .iter()
        .map(complex_value)
        .collect::<Result<Vec<_>>>()?;
    let s0 = raw.s0.as_ref().map(|v| rational_value(v, "s0")).transpose()?;
    let format = match &raw.format {
        Some(f) => f.parse()?,
        None => job.default_format(),
    };
    let cfg = JobConfig {
        ring: ring.clone(),
        i,
        j,
        job,
        n_min,
        n_max,
        grid,
        y,
        r: raw.r,
        alpha: raw.alpha.unwrap_or(1),
        beta: raw.beta.unwrap_or(1),
        t_max: raw.t_max,
        j_max: raw.j_max,
        s0,
        n0: raw.n0.unwrap_or(1),
        out: raw.out,
        format,
    };
    check_required(&cfg)?;
    Ok(cfg)
}

fn check_required(cfg: &JobConfig) -> Result<()> {
    let missing = |what: &str| Err(HkError::Config(format!("job {} needs `{what}`", cfg.job)));
    match cfg.job {
        Job::FpGrid if cfg.y.is_empty() => missing("y"),
        Job::Convexity if cfg.s0.is_none() => missing("s0"),
        Job::Inequalities if cfg.r.is_none() => missing("r"),
        Job::Multiplicity if cfg.t_max.is_none() => missing("t_max"),
        Job::Boij if cfg.j_max.is_none() => missing("j_max"),
        Job::Ehk | Job::Asymptotes | Job::Inequalities if cfg.n_min == cfg.n_max => Err(HkError::Config(format!(
            "job {} extrapolates and needs at least two levels",
            cfg.job
        ))),
        _ => Ok(()),
    }
}
