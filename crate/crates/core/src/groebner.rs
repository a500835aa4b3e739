//! Buchberger's algorithm over `F_p`, normal forms, and lengths of
//! quotients read off the leading monomial ideal.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::algebra::{Monomial, MonomialOrder, Polynomial, PrimeField, RingSpec};
use crate::error::{HkError, Result};
use crate::monomial_ideal::{Colength, MonomialIdeal};

/// Hard limits for a single basis computation. Exceeding any of them is an
/// error, never a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Budget {
    pub max_pairs: usize,
    pub max_basis: usize,
    pub max_degree: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pairs: 2_000_000,
            max_basis: 20_000,
            max_degree: 1_000_000,
        }
    }
}

/// Reduced Gröbner basis together with its leading monomial ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    field: PrimeField,
    nvars: usize,
    elements: Vec<Polynomial>,
    leading: MonomialIdeal,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading(&self) -> &MonomialIdeal {
        &self.leading
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_unit(&self) -> bool {
        self.leading.is_unit()
    }

    /// Basis of the ideal generated by `gens` together with the relations of
    /// `ring`, in the ring's default order. Results are memoized.
    pub fn of_ideal(ring: &RingSpec, gens: &[Polynomial]) -> Result<Arc<GroebnerBasis>> {
        Self::of_ideal_with(ring, gens, &ring.default_order(), &Budget::default())
    }

    pub fn of_ideal_with(
        ring: &RingSpec,
        gens: &[Polynomial],
        order: &MonomialOrder,
        budget: &Budget,
    ) -> Result<Arc<GroebnerBasis>> {
        let mut all: Vec<Polynomial> = ring.relations().to_vec();
        all.extend(gens.iter().filter(|g| !g.is_zero()).cloned());
        let key = CacheKey::new(ring.field(), ring.nvars(), order, &all);
        let cell = {
            let mut map = basis_cache().lock().expect("basis cache poisoned");
            if map.len() >= BASIS_CACHE_CAP {
                map.clear();
            }
            map.entry(key).or_default().clone()
        };
        cell.get_or_init(|| {
            buchberger(&all, ring.nvars(), ring.field(), order, budget).map(Arc::new)
        })
        .clone()
    }

    /// Remainder of `f` with no term divisible by a leading monomial.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        let sp = SPoly::from_polynomial(f, &self.order);
        let basis: Vec<SPoly> = self
            .elements
            .iter()
            .map(|g| SPoly::from_polynomial(g, &self.order))
            .collect();
        let refs: Vec<&SPoly> = basis.iter().collect();
        let r = reduce_full(sp, &refs, self.field, &self.order)?;
        r.to_polynomial(self.field, self.nvars)
    }

    pub fn reduces_to_zero(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Number of standard monomials.
    pub fn colength(&self) -> Result<Colength> {
        self.leading.staircase_colength()
    }

    /// Standard monomials of weighted degree `deg`. Meaningful when the
    /// ideal is weighted-homogeneous and the order refines those weights.
    pub fn graded_slice_length(&self, deg: i64, weights: &[u64]) -> Result<u64> {
        self.leading.graded_slice_length(deg, weights)
    }

    /// Checks the Buchberger criterion on every pair of elements.
    pub fn satisfies_buchberger_criterion(&self) -> Result<bool> {
        let polys: Vec<SPoly> = self
            .elements
            .iter()
            .map(|g| SPoly::from_polynomial(g, &self.order))
            .collect();
        let refs: Vec<&SPoly> = polys.iter().collect();
        for i in 0..polys.len() {
            for j in i + 1..polys.len() {
                let s = s_polynomial(&polys[i], &polys[j], self.field, &self.order)?;
                if !reduce_full(s, &refs, self.field, &self.order)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Combinatorial Krull dimension of `R/M` for a monomial ideal `M`;
/// `None` when `M` is the unit ideal.
pub fn dimension(m: &MonomialIdeal, nvars: usize) -> Option<usize> {
    debug_assert_eq!(m.nvars(), nvars);
    m.dimension()
}

const BASIS_CACHE_CAP: usize = 2048;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct CacheKey {
    p: u64,
    nvars: usize,
    order: MonomialOrder,
    gens: Vec<Vec<(Vec<u64>, u64)>>,
}

impl CacheKey {
    fn new(field: PrimeField, nvars: usize, order: &MonomialOrder, gens: &[Polynomial]) -> Self {
        let mut g: Vec<Vec<(Vec<u64>, u64)>> = gens
            .iter()
            .map(|p| p.terms().map(|(m, c)| (m.exponents().to_vec(), c)).collect())
            .collect();
        g.sort();
        g.dedup();
        CacheKey {
            p: field.characteristic(),
            nvars,
            order: order.clone(),
            gens: g,
        }
    }
}

type BasisCell = Arc<OnceLock<Result<Arc<GroebnerBasis>>>>;

fn basis_cache() -> &'static Mutex<HashMap<CacheKey, BasisCell>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, BasisCell>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Polynomial with terms sorted strictly decreasing in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct SPoly {
    terms: Vec<(Monomial, u64)>,
}

impl SPoly {
    fn from_polynomial(f: &Polynomial, ord: &MonomialOrder) -> SPoly {
        let mut terms: Vec<(Monomial, u64)> = f.terms().map(|(m, c)| (m.clone(), c)).collect();
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        SPoly { terms }
    }

    fn to_polynomial(&self, field: PrimeField, nvars: usize) -> Result<Polynomial> {
        Polynomial::from_terms(field, nvars, self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn make_monic(&mut self, field: PrimeField) -> Result<()> {
        if let Some(&(_, c)) = self.terms.first() {
            if c != 1 {
                let inv = field.inv(c)?;
                for t in &mut self.terms {
                    t.1 = field.mul(t.1, inv);
                }
            }
        }
        Ok(())
    }
}

/// `a - c * m * b`, merging two sorted term lists.
fn sub_scaled(
    a: &[(Monomial, u64)],
    b: &[(Monomial, u64)],
    c: u64,
    m: &Monomial,
    field: PrimeField,
    ord: &MonomialOrder,
) -> Result<Vec<(Monomial, u64)>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bj = b.iter().map(|(t, d)| t.mul(m).map(|t| (t, field.neg(field.mul(*d, c)))));
    let mut cur_b = bj.next().transpose()?;
    while i < a.len() || cur_b.is_some() {
        match (&a.get(i), &cur_b) {
            (Some(x), Some(y)) => match ord.cmp(&x.0, &y.0) {
                Ordering::Greater => {
                    out.push((*x).clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(cur_b.take().expect("checked"));
                    cur_b = bj.next().transpose()?;
                }
                Ordering::Equal => {
                    let s = field.add(x.1, y.1);
                    if s != 0 {
                        out.push((x.0.clone(), s));
                    }
                    i += 1;
                    cur_b = bj.next().transpose()?;
                }
            },
            (Some(x), None) => {
                out.push((*x).clone());
                i += 1;
            }
            (None, Some(_)) => {
                out.push(cur_b.take().expect("checked"));
                cur_b = bj.next().transpose()?;
            }
            (None, None) => break,
        }
    }
    Ok(out)
}

fn s_polynomial(f: &SPoly, g: &SPoly, field: PrimeField, ord: &MonomialOrder) -> Result<SPoly> {
    let l = f.lm().lcm(g.lm());
    let mf = f.lm().quotient_of(&l).expect("lcm is a multiple");
    let mg = g.lm().quotient_of(&l).expect("lcm is a multiple");
    let cf = field.inv(f.terms[0].1)?;
    let cg = field.inv(g.terms[0].1)?;
    let left: Vec<(Monomial, u64)> = f
        .terms
        .iter()
        .map(|(t, c)| t.mul(&mf).map(|t| (t, field.mul(*c, cf))))
        .collect::<Result<_>>()?;
    let terms = sub_scaled(&left, &g.terms, cg, &mg, field, ord)?;
    Ok(SPoly { terms })
}

/// Full reduction of `f` by `basis`.
fn reduce_full(
    f: SPoly,
    basis: &[&SPoly],
    field: PrimeField,
    ord: &MonomialOrder,
) -> Result<SPoly> {
    let mut rem: Vec<(Monomial, u64)> = Vec::new();
    let mut p = f.terms;
    let mut start = 0;
    while start < p.len() {
        let (m, c) = (&p[start].0, p[start].1);
        let divisor = basis.iter().find(|g| !g.is_zero() && g.lm().divides(m));
        match divisor {
            Some(g) => {
                let q = g.lm().quotient_of(m).expect("divides");
                let coef = field.mul(c, field.inv(g.terms[0].1)?);
                p = sub_scaled(&p[start..], &g.terms, coef, &q, field, ord)?;
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    Ok(SPoly { terms: rem })
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Pairs are processed smallest-lcm first and pruned with the
/// Gebauer–Möller update (product and chain criteria).
pub fn buchberger(
    gens: &[Polynomial],
    nvars: usize,
    field: PrimeField,
    ord: &MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerBasis> {
    if ord.nvars() != nvars {
        return Err(HkError::ArityMismatch {
            expected: nvars,
            got: ord.nvars(),
        });
    }
    for g in gens {
        if g.nvars() != nvars {
            return Err(HkError::ArityMismatch {
                expected: nvars,
                got: g.nvars(),
            });
        }
    }
    let weights = graded_weights(ord, nvars);
    let mut polys: Vec<SPoly> = Vec::new();
    let mut basis: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<SPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| SPoly::from_polynomial(g, ord))
        .collect();
    inputs.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));
    for f in inputs {
        let refs: Vec<&SPoly> = basis.iter().map(|&k| &polys[k]).collect();
        let mut h = reduce_full(f, &refs, field, ord)?;
        if h.is_zero() {
            continue;
        }
        h.make_monic(field)?;
        polys.push(h);
        update(&mut basis, &mut pairs, &polys, polys.len() - 1);
        check_basis_budget(basis.len(), budget)?;
    }

    let mut processed = 0usize;
    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| ord.cmp(&pairs[a].lcm, &pairs[b].lcm))
            .expect("nonempty");
        let pair = pairs.swap_remove(best);
        processed += 1;
        if processed > budget.max_pairs {
            return Err(HkError::BudgetExceeded(format!(
                "more than {} S-pairs (basis size {})",
                budget.max_pairs,
                basis.len()
            )));
        }
        let deg = pair.lcm.weighted_degree(&weights)?;
        if deg > budget.max_degree {
            return Err(HkError::BudgetExceeded(format!(
                "S-pair of weighted degree {deg} exceeds {}",
                budget.max_degree
            )));
        }
        let s = s_polynomial(&polys[pair.i], &polys[pair.j], field, ord)?;
        let refs: Vec<&SPoly> = basis.iter().map(|&k| &polys[k]).collect();
        let mut h = reduce_full(s, &refs, field, ord)?;
        if h.is_zero() {
            continue;
        }
        h.make_monic(field)?;
        polys.push(h);
        update(&mut basis, &mut pairs, &polys, polys.len() - 1);
        check_basis_budget(basis.len(), budget)?;
    }

    interreduce(basis.into_iter().map(|k| polys[k].clone()).collect(), nvars, field, ord)
}

fn check_basis_budget(len: usize, budget: &Budget) -> Result<()> {
    if len > budget.max_basis {
        return Err(HkError::BudgetExceeded(format!(
            "basis grew beyond {} elements",
            budget.max_basis
        )));
    }
    Ok(())
}

fn graded_weights(_ord: &MonomialOrder, nvars: usize) -> Vec<u64> {
    // Degree budgets are measured in total degree for every order kind.
    vec![1; nvars]
}

/// Gebauer–Möller update for a new basis element `h`.
fn update(basis: &mut Vec<usize>, pairs: &mut Vec<Pair>, polys: &[SPoly], h: usize) {
    let lh = polys[h].lm().clone();
    let mut c: Vec<Pair> = basis
        .iter()
        .map(|&g| Pair {
            i: g,
            j: h,
            lcm: polys[g].lm().lcm(&lh),
        })
        .collect();
    let mut d: Vec<Pair> = Vec::new();
    while let Some(p) = c.pop() {
        let coprime = polys[p.i].lm().is_coprime(&lh);
        let dominated = c.iter().chain(d.iter()).any(|o| o.lcm.divides(&p.lcm));
        if coprime || !dominated {
            d.push(p);
        }
    }
    let e: Vec<Pair> = d
        .into_iter()
        .filter(|p| !polys[p.i].lm().is_coprime(&lh))
        .collect();
    pairs.retain(|p| {
        !lh.divides(&p.lcm)
            || polys[p.i].lm().lcm(&lh) == p.lcm
            || polys[p.j].lm().lcm(&lh) == p.lcm
    });
    pairs.extend(e);
    basis.retain(|&g| !lh.divides(polys[g].lm()));
    basis.push(h);
}

fn interreduce(
    mut elems: Vec<SPoly>,
    nvars: usize,
    field: PrimeField,
    ord: &MonomialOrder,
) -> Result<GroebnerBasis> {
    elems.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));
    let mut minimal: Vec<SPoly> = Vec::new();
    for e in elems {
        if !minimal.iter().any(|m| m.lm().divides(e.lm())) {
            minimal.retain(|m| !e.lm().divides(m.lm()));
            minimal.push(e);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&SPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, p)| p)
            .collect();
        let head = minimal[k].terms[0].clone();
        let tail = SPoly {
            terms: minimal[k].terms[1..].to_vec(),
        };
        let mut r = reduce_full(tail, &others, field, ord)?;
        r.terms.insert(0, head);
        r.make_monic(field)?;
        reduced.push(r);
    }
    reduced.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));
    let leading = MonomialIdeal::minimalize(reduced.iter().map(|p| p.lm().clone()).collect(), nvars);
    let elements = reduced
        .iter()
        .map(|p| p.to_polynomial(field, nvars))
        .collect::<Result<Vec<_>>>()?;
    Ok(GroebnerBasis {
        order: ord.clone(),
        field,
        nvars,
        elements,
        leading,
    })
}
