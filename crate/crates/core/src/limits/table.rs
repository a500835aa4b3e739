//! Lengths `ℓ(R/(I^t + J^[q]))` for consecutive `t`, built incrementally.
//!
//! The table keeps the generators `P_t` of `I^t` that survive modulo
//! `J^[q]` (plus relations). `P_{t+1}` is obtained from `P_t · I`, so each
//! power is never formed in full. `P_t` is empty exactly when
//! `I^t ⊆ J^[q]`, and from then on the length is `ℓ(R/J^[q])`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::algebra::{checked_power, Monomial, Polynomial, RingSpec};
use crate::error::{HkError, Result};
use crate::groebner::{Budget, GroebnerBasis};
use crate::ideal::{relations_monomial, Ideal};
use crate::monomial_ideal::{Colength, MonomialIdeal};

/// Largest exponent of `I` the table will build before giving up.
const MAX_POWER: u64 = 1_000_000;

enum Engine {
    Monomial {
        i: MonomialIdeal,
        jq: MonomialIdeal,
        frontier: Vec<Monomial>,
    },
    Groebner {
        i: Vec<Polynomial>,
        jq: Arc<GroebnerBasis>,
        frontier: Vec<Polynomial>,
    },
}

/// Raw lengths at one level `n` for a pair of ideals.
pub struct LengthTable {
    ring: Arc<RingSpec>,
    n: u32,
    q: u64,
    engine: Engine,
    raw: Vec<Colength>,
    stable: Option<u64>,
    jq_colength: Colength,
}

pub type SharedTable = Arc<Mutex<LengthTable>>;

impl LengthTable {
    pub fn new(i: &Ideal, j: &Ideal, n: u32) -> Result<Self> {
        if i.ring() != j.ring() {
            return Err(HkError::Config("ideals live in different rings".into()));
        }
        let ring = i.ring().clone();
        let q = checked_power(ring.characteristic(), n)?;
        let jq_ideal = j.frobenius_power(q)?;
        let rel = relations_monomial(&ring);
        let engine = match (i.as_monomial_ideal(), jq_ideal.as_monomial_ideal(), rel) {
            (Some(mi), Some(mj), Some(r)) => {
                let jq = mj.sum(&r);
                let one = Monomial::one(ring.nvars());
                let frontier = if jq.contains(&one) { vec![] } else { vec![one] };
                Engine::Monomial { i: mi, jq, frontier }
            }
            _ => {
                let jq = jq_ideal.groebner()?;
                let frontier = if jq.is_unit() { vec![] } else { vec![ring.one()] };
                Engine::Groebner {
                    i: i.nonzero_generators().cloned().collect(),
                    jq,
                    frontier,
                }
            }
        };
        let jq_colength = match &engine {
            Engine::Monomial { jq, .. } => jq.staircase_colength()?,
            Engine::Groebner { jq, .. } => jq.colength()?,
        };
        let stable = if engine_frontier_empty(&engine) { Some(0) } else { None };
        Ok(LengthTable {
            ring,
            n,
            q,
            engine,
            raw: vec![Colength::Finite(0)],
            stable,
            jq_colength,
        })
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_monomial(&self) -> bool {
        matches!(self.engine, Engine::Monomial { .. })
    }

    /// `ℓ(R/J^[q])` (plus relations).
    pub fn jq_colength(&self) -> Colength {
        self.jq_colength
    }

    /// Number of powers computed so far.
    pub fn computed(&self) -> u64 {
        self.raw.len() as u64 - 1
    }

    /// `ℓ(R/(I^t + J^[q]))`, possibly infinite. Nonpositive `t` gives 0.
    pub fn colength(&mut self, t: i64) -> Result<Colength> {
        if t <= 0 {
            return Ok(Colength::Finite(0));
        }
        let t = t as u64;
        if let Some(s) = self.stable {
            if t >= s {
                return Ok(self.jq_colength);
            }
        }
        self.extend_to(t)?;
        match self.stable {
            Some(s) if t >= s => Ok(self.jq_colength),
            _ => Ok(self.raw[t as usize]),
        }
    }

    /// Finite length at `t`, or an error naming the infinite quotient.
    pub fn raw(&mut self, t: i64) -> Result<u64> {
        match self.colength(t)? {
            Colength::Finite(v) => Ok(v),
            Colength::Infinite => Err(HkError::InfiniteColength(format!(
                "I^{t} + J^[{}] is not primary to the maximal ideal",
                self.q
            ))),
        }
    }

    /// Smallest `t` with `I^t ⊆ J^[q]`, searching up to `limit`.
    pub fn stable_point(&mut self, limit: u64) -> Result<Option<u64>> {
        while self.stable.is_none() && self.computed() < limit {
            let next = self.computed() + 1;
            self.extend_to(next)?;
        }
        Ok(self.stable)
    }

    /// Whether `I^t ⊆ J^[q]` (plus relations).
    pub fn power_inside(&mut self, t: i64) -> Result<bool> {
        if t <= 0 {
            return Ok(self.stable == Some(0));
        }
        let t = t as u64;
        if let Some(s) = self.stable {
            return Ok(t >= s);
        }
        self.extend_to(t)?;
        Ok(self.stable.is_some_and(|s| t >= s))
    }

    fn extend_to(&mut self, t: u64) -> Result<()> {
        if t > MAX_POWER {
            return Err(HkError::BudgetExceeded(format!(
                "power {t} of I exceeds the table limit {MAX_POWER}"
            )));
        }
        while self.computed() < t && self.stable.is_none() {
            let c = self.step()?;
            self.raw.push(c);
            if engine_frontier_empty(&self.engine) {
                self.stable = Some(self.computed());
            }
        }
        Ok(())
    }

    /// Advances the frontier by one power and returns the new length.
    fn step(&mut self) -> Result<Colength> {
        let budget = Budget::default();
        match &mut self.engine {
            Engine::Monomial { i, jq, frontier } => {
                let mut prods = Vec::with_capacity(frontier.len() * i.len());
                for a in frontier.iter() {
                    for b in i.generators() {
                        prods.push(a.mul(b)?);
                    }
                }
                let next = MonomialIdeal::minimalize(prods, jq.nvars());
                *frontier = next
                    .generators()
                    .iter()
                    .filter(|m| !jq.contains(m))
                    .cloned()
                    .collect();
                if frontier.len() > budget.max_basis * 50 {
                    return Err(HkError::BudgetExceeded(format!(
                        "{} surviving generators of a power of I",
                        frontier.len()
                    )));
                }
                let mut all = frontier.clone();
                all.extend(jq.generators().iter().cloned());
                MonomialIdeal::minimalize(all, jq.nvars()).staircase_colength()
            }
            Engine::Groebner { i, jq, frontier } => {
                let mut next: Vec<Polynomial> = Vec::new();
                for a in frontier.iter() {
                    for b in i.iter() {
                        let r = jq.normal_form(&a.mul(b)?)?;
                        if !r.is_zero() {
                            next.push(r.monic(jq.order())?);
                        }
                    }
                }
                next.sort_by(|a, b| a.terms().cmp(b.terms()));
                next.dedup();
                if next.is_empty() {
                    *frontier = next;
                    return Ok(jq.colength()?);
                }
                let mut gens = next.clone();
                gens.extend(jq.elements().iter().cloned());
                let gb = GroebnerBasis::of_ideal(&self.ring, &gens)?;
                // Only basis elements outside J^[q] need to be carried on.
                let mut carried = Vec::new();
                for g in gb.elements() {
                    let r = jq.normal_form(g)?;
                    if !r.is_zero() {
                        carried.push(r.monic(jq.order())?);
                    }
                }
                carried.sort_by(|a, b| a.terms().cmp(b.terms()));
                carried.dedup();
                if carried.len() > budget.max_basis {
                    return Err(HkError::BudgetExceeded(format!(
                        "{} surviving generators of a power of I",
                        carried.len()
                    )));
                }
                *frontier = carried;
                gb.colength()
            }
        }
    }
}

fn engine_frontier_empty(e: &Engine) -> bool {
    match e {
        Engine::Monomial { frontier, .. } => frontier.is_empty(),
        Engine::Groebner { frontier, .. } => frontier.is_empty(),
    }
}

const TABLE_CACHE_CAP: usize = 512;

fn table_cache() -> &'static Mutex<HashMap<String, SharedTable>> {
    static CACHE: OnceLock<Mutex<HashMap<String, SharedTable>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The shared table for `(I, J, n)`; built once, extended on demand.
pub fn length_table(i: &Ideal, j: &Ideal, n: u32) -> Result<SharedTable> {
    let key = format!(
        "{}#{}#{}#{n}",
        i.ring().canonical_key(),
        i.canonical_key(),
        j.canonical_key()
    );
    if let Some(t) = table_cache().lock().expect("table cache poisoned").get(&key) {
        return Ok(t.clone());
    }
    let table = Arc::new(Mutex::new(LengthTable::new(i, j, n)?));
    let mut map = table_cache().lock().expect("table cache poisoned");
    if map.len() >= TABLE_CACHE_CAP {
        map.clear();
    }
    Ok(map.entry(key).or_insert(table).clone())
}

/// `ℓ(R/(I^t + J^[p^n]))` through the shared table.
pub fn raw_length(i: &Ideal, j: &Ideal, n: u32, t: i64) -> Result<u64> {
    let table = length_table(i, j, n)?;
    let mut guard = table.lock().expect("length table poisoned");
    guard.raw(t)
}

/// Raw lengths for `t` in `from..=to`.
pub fn raw_lengths(i: &Ideal, j: &Ideal, n: u32, from: i64, to: i64) -> Result<Vec<u64>> {
    let table = length_table(i, j, n)?;
    let mut guard = table.lock().expect("length table poisoned");
    (from..=to).map(|t| guard.raw(t)).collect()
}
