//! Ideals of a presented ring: powers, Frobenius powers, sums, containment
//! and radical membership.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::algebra::{Monomial, MonomialOrder, Polynomial, RingSpec};
use crate::error::{HkError, Result};
use crate::groebner::{buchberger, Budget, GroebnerBasis};
use crate::monomial_ideal::{Colength, MonomialIdeal};

/// An ideal given by generators. The zero ideal is stored as `[0]`.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<RingSpec>,
    gens: Vec<Polynomial>,
    basis: OnceLock<Result<Arc<GroebnerBasis>>>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.display_with(self.ring.variables()))?;
        }
        write!(f, ")")
    }
}

impl PartialEq for Ideal {
    /// Equality of generator lists, not of ideals; see [`Ideal::same_ideal`].
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gens == other.gens
    }
}

impl Eq for Ideal {}

impl Ideal {
    pub fn new(ring: Arc<RingSpec>, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if g.nvars() != ring.nvars() || g.field() != ring.field() {
                return Err(HkError::ArityMismatch {
                    expected: ring.nvars(),
                    got: g.nvars(),
                });
            }
        }
        let mut gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let ord = ring.default_order();
        for g in &mut gens {
            *g = g.monic(&ord)?;
        }
        gens.sort_by(|a, b| {
            a.min_weighted_degree(ring.weights())
                .cmp(&b.min_weighted_degree(ring.weights()))
                .then_with(|| a.terms().cmp(b.terms()))
        });
        gens.dedup();
        if gens.is_empty() {
            gens.push(ring.zero());
        }
        Ok(Ideal {
            ring,
            gens,
            basis: OnceLock::new(),
        })
    }

    pub fn parse(ring: Arc<RingSpec>, gens: &[&str]) -> Result<Self> {
        let g = gens
            .iter()
            .map(|s| ring.parse_polynomial(s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, g)
    }

    pub fn zero(ring: Arc<RingSpec>) -> Self {
        Self::new(ring, Vec::new()).expect("zero ideal")
    }

    pub fn unit(ring: Arc<RingSpec>) -> Self {
        let one = ring.one();
        Self::new(ring, vec![one]).expect("unit ideal")
    }

    /// The homogeneous maximal ideal generated by all variables.
    pub fn maximal(ring: Arc<RingSpec>) -> Self {
        let vars = (0..ring.nvars()).map(|i| ring.var(i)).collect();
        Self::new(ring, vars).expect("maximal ideal")
    }

    pub fn from_monomials(ring: Arc<RingSpec>, gens: &MonomialIdeal) -> Result<Self> {
        let field = ring.field();
        let g = gens
            .generators()
            .iter()
            .map(|m| Polynomial::monomial(field, m.clone()))
            .collect();
        Self::new(ring, g)
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    /// Generators as stored (`[0]` for the zero ideal).
    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn nonzero_generators(&self) -> impl Iterator<Item = &Polynomial> {
        self.gens.iter().filter(|g| !g.is_zero())
    }

    pub fn is_zero_generated(&self) -> bool {
        self.gens.iter().all(Polynomial::is_zero)
    }

    /// The generators as a monomial ideal when each one is a single term.
    pub fn as_monomial_ideal(&self) -> Option<MonomialIdeal> {
        let mut ms = Vec::with_capacity(self.gens.len());
        for g in self.nonzero_generators() {
            ms.push(g.as_monomial()?.clone());
        }
        Some(MonomialIdeal::minimalize(ms, self.ring.nvars()))
    }

    /// `self + relations` as a monomial ideal, when everything is monomial.
    pub fn monomial_with_relations(&self) -> Option<MonomialIdeal> {
        let own = self.as_monomial_ideal()?;
        relations_monomial(&self.ring).map(|r| own.sum(&r))
    }

    pub fn is_weighted_homogeneous(&self) -> Result<bool> {
        for g in &self.gens {
            if !g.is_weighted_homogeneous(self.ring.weights())? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Reduced basis of `self + relations` in the ring's default order.
    pub fn groebner(&self) -> Result<Arc<GroebnerBasis>> {
        self.basis
            .get_or_init(|| GroebnerBasis::of_ideal(&self.ring, &self.gens))
            .clone()
    }

    /// Number of elements in a minimal homogeneous generating set. Assumes
    /// weighted-homogeneous generators.
    pub fn minimal_generator_count(&self) -> Result<usize> {
        if let (Some(own), Some(rel)) = (self.as_monomial_ideal(), relations_monomial(&self.ring)) {
            return Ok(own.generators().iter().filter(|g| !rel.contains(g)).count());
        }
        let mut kept: Vec<Polynomial> = Vec::new();
        for g in self.nonzero_generators() {
            let gb = GroebnerBasis::of_ideal(&self.ring, &kept)?;
            if !gb.reduces_to_zero(g)? {
                kept.push(g.clone());
            }
        }
        Ok(kept.len())
    }

    /// `I^k`; nonpositive powers are the unit ideal.
    pub fn power(&self, k: i64, budget: &Budget) -> Result<Ideal> {
        if k <= 0 {
            return Ok(Ideal::unit(self.ring.clone()));
        }
        if let Some(m) = self.as_monomial_ideal() {
            let p = m.power(k as u64)?;
            if p.len() > budget.max_basis {
                return Err(HkError::BudgetExceeded(format!(
                    "power {k} has {} generators",
                    p.len()
                )));
            }
            return Ideal::from_monomials(self.ring.clone(), &p);
        }
        let mu = self.nonzero_generators().count() as u128;
        if mu == 0 {
            return Ok(self.clone());
        }
        let count = binomial(mu + k as u128 - 1, mu - 1);
        if count.map_or(true, |c| c > budget.max_basis as u128) {
            return Err(HkError::BudgetExceeded(format!(
                "power {k} of an ideal with {mu} generators needs too many products"
            )));
        }
        let gens: Vec<&Polynomial> = self.nonzero_generators().collect();
        // Products indexed by nondecreasing generator sequences.
        let mut layer: Vec<(usize, Polynomial)> =
            gens.iter().enumerate().map(|(i, g)| (i, (*g).clone())).collect();
        for _ in 1..k {
            let mut next = Vec::with_capacity(layer.len() * gens.len());
            for (last, f) in &layer {
                for (i, g) in gens.iter().enumerate().skip(*last) {
                    next.push((i, f.mul(g)?));
                }
            }
            layer = next;
        }
        Ideal::new(self.ring.clone(), layer.into_iter().map(|(_, f)| f).collect())
    }

    /// `I^[q]`, generated by `g^q`.
    pub fn frobenius_power(&self, q: u64) -> Result<Ideal> {
        let g = self
            .gens
            .iter()
            .map(|g| g.frobenius(q))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(self.ring.clone(), g)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        if let (Some(a), Some(b)) = (self.as_monomial_ideal(), other.as_monomial_ideal()) {
            return Ideal::from_monomials(self.ring.clone(), &a.sum(&b));
        }
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ideal::new(self.ring.clone(), g)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        let mut g = Vec::new();
        for a in self.nonzero_generators() {
            for b in other.nonzero_generators() {
                g.push(a.mul(b)?);
            }
        }
        Ideal::new(self.ring.clone(), g)
    }

    fn check_same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring != other.ring {
            return Err(HkError::Config("ideals live in different rings".into()));
        }
        Ok(())
    }

    /// Whether `f` lies in `self` (modulo the relations).
    pub fn contains_element(&self, f: &Polynomial) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        if let Some(m) = self.monomial_with_relations() {
            return Ok(f.terms().all(|(t, _)| m.contains(t)));
        }
        self.groebner()?.reduces_to_zero(f)
    }

    /// The first generator of `other` outside `self`, cheapest first.
    pub fn non_member<'a>(&self, other: &'a Ideal) -> Result<Option<&'a Polynomial>> {
        self.check_same_ring(other)?;
        let mut order: Vec<&Polynomial> = other.nonzero_generators().collect();
        order.sort_by_key(|g| (g.min_weighted_degree(self.ring.weights()), g.len()));
        for g in order {
            if !self.contains_element(g)? {
                return Ok(Some(g));
            }
        }
        Ok(None)
    }

    /// Whether `other ⊆ self`.
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        Ok(self.non_member(other)?.is_none())
    }

    /// Same ideal modulo the relations.
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains(other)? && other.contains(self)?)
    }

    pub fn colength(&self) -> Result<Colength> {
        if let Some(m) = self.monomial_with_relations() {
            return m.staircase_colength();
        }
        self.groebner()?.colength()
    }

    pub fn is_finite_colength(&self) -> Result<bool> {
        Ok(self.colength()?.is_finite())
    }

    /// Whether some power of `f` lies in `self`.
    pub fn radical_contains_element(&self, f: &Polynomial) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        if let Some(m) = self.monomial_with_relations() {
            // The radical of a monomial ideal is generated by the supports.
            let supports: Vec<u64> = m.generators().iter().map(Monomial::support_mask).collect();
            return Ok(f.terms().all(|(t, _)| {
                let s = t.support_mask();
                supports.iter().any(|g| g & !s == 0)
            }));
        }
        // Rabinowitsch: f is in the radical iff 1 ∈ (self, 1 - t f).
        let n = self.ring.nvars();
        let mut gens: Vec<Polynomial> = Vec::new();
        for g in self.ring.relations().iter().chain(self.nonzero_generators()) {
            gens.push(self.ring.lift(g, 1)?);
        }
        let field = self.ring.field();
        let t = Polynomial::monomial(field, Monomial::var(n + 1, n));
        let tf = t.mul(&self.ring.lift(f, 1)?)?;
        gens.push(Polynomial::constant(field, n + 1, 1).sub(&tf)?);
        let ord = MonomialOrder::grevlex(n + 1);
        let gb = buchberger(&gens, n + 1, field, &ord, &Budget::default())?;
        Ok(gb.is_unit())
    }

    /// Whether `other ⊆ √self`.
    pub fn radical_contains(&self, other: &Ideal) -> Result<bool> {
        self.check_same_ring(other)?;
        for g in other.nonzero_generators() {
            if !self.radical_contains_element(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Stable textual identity used in cache keys.
    pub fn canonical_key(&self) -> String {
        let mut parts: Vec<String> = self
            .gens
            .iter()
            .map(|g| {
                g.terms()
                    .map(|(m, c)| format!("{c}:{:?}", m.exponents()))
                    .collect::<Vec<_>>()
                    .join("+")
            })
            .collect();
        parts.sort();
        parts.join("|")
    }
}

/// The ring relations as a monomial ideal, when each is a single term.
pub fn relations_monomial(ring: &RingSpec) -> Option<MonomialIdeal> {
    let mut ms = Vec::new();
    for r in ring.relations() {
        ms.push(r.as_monomial()?.clone());
    }
    Some(MonomialIdeal::minimalize(ms, ring.nvars()))
}

/// Exact binomial coefficient, `None` on overflow.
pub fn binomial(n: u128, k: u128) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step.
        let g = num_integer::gcd(acc, i + 1);
        let a = acc / g;
        let b = (n - i) / ((i + 1) / g);
        acc = a.checked_mul(b)?;
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn plane(p: u64) -> Arc<RingSpec> {
        Arc::new(RingSpec::polynomial_ring(p, &["x", "y"]).unwrap())
    }

    fn ideal(r: &Arc<RingSpec>, g: &[&str]) -> Ideal {
        Ideal::parse(r.clone(), g).unwrap()
    }

    #[test]
    fn powers() {
        let r = plane(2);
        let m = Ideal::maximal(r.clone());
        let b = Budget::default();
        assert_eq!(m.power(2, &b).unwrap(), ideal(&r, &["x^2", "x*y", "y^2"]));
        assert_eq!(m.power(0, &b).unwrap(), Ideal::unit(r.clone()));
        assert_eq!(m.power(-3, &b).unwrap(), Ideal::unit(r.clone()));
        let i = ideal(&r, &["x^2", "y"]);
        assert_eq!(
            i.power(3, &b).unwrap(),
            ideal(&r, &["x^6", "x^4*y", "x^2*y^2", "y^3"])
        );
    }

    #[test]
    fn polynomial_power_matches_product() {
        let r = plane(3);
        let i = ideal(&r, &["x + y", "x*y"]);
        let b = Budget::default();
        let p3 = i.power(3, &b).unwrap();
        let prod = i.product(&i).unwrap().product(&i).unwrap();
        assert!(p3.same_ideal(&prod).unwrap());
        let tiny = Budget {
            max_basis: 3,
            ..Budget::default()
        };
        assert!(matches!(i.power(5, &tiny), Err(HkError::BudgetExceeded(_))));
    }

    #[test]
    fn frobenius_powers() {
        let r = plane(3);
        let i = ideal(&r, &["x + y", "y^2"]);
        assert_eq!(i.frobenius_power(3).unwrap(), ideal(&r, &["x^3 + y^3", "y^6"]));
        assert_eq!(i.frobenius_power(1).unwrap(), i);
        assert!(i.frobenius_power(2).is_err());
        let m = Ideal::maximal(plane(2));
        assert_eq!(m.frobenius_power(2).unwrap(), ideal(m.ring(), &["x^2", "y^2"]));
    }

    #[test]
    fn sums() {
        let r = plane(2);
        assert_eq!(ideal(&r, &["x^2"]).sum(&ideal(&r, &["y^3"])).unwrap(), ideal(&r, &["x^2", "y^3"]));
        let a = ideal(&r, &["x + y"]);
        assert_eq!(a.sum(&Ideal::zero(r.clone())).unwrap(), a);
        assert_eq!(ideal(&r, &["x"]).sum(&ideal(&r, &["x^2"])).unwrap(), ideal(&r, &["x"]));
    }

    #[test]
    fn containment_examples() {
        let r = plane(2);
        let m = Ideal::maximal(r.clone());
        let b = Budget::default();
        let jq = m.power(2, &b).unwrap().frobenius_power(4).unwrap();
        assert!(jq.contains(&m.power(11, &b).unwrap()).unwrap());
        let m10 = m.power(10, &b).unwrap();
        let w = jq.non_member(&m10).unwrap().unwrap();
        let e = w.as_monomial().unwrap().exponents().to_vec();
        assert!(e[0] / 4 + e[1] / 4 < 2);
        assert!(m.contains(&m).unwrap());
    }

    #[test]
    fn finite_colength() {
        let r = plane(2);
        assert!(ideal(&r, &["x^2", "y^3"]).is_finite_colength().unwrap());
        assert!(!ideal(&r, &["x"]).is_finite_colength().unwrap());
        let cusp = Arc::new(RingSpec::parse(2, &["x", "y"], &[3, 2], &["x^2 - y^3"]).unwrap());
        assert!(Ideal::maximal(cusp.clone()).is_finite_colength().unwrap());
        assert_eq!(Ideal::maximal(cusp).colength().unwrap(), Colength::Finite(1));
    }

    #[test]
    fn radicals() {
        let r = plane(3);
        let x = ideal(&r, &["x"]);
        let y = ideal(&r, &["y"]);
        assert!(!y.radical_contains(&x).unwrap());
        assert!(ideal(&r, &["x^3", "y^2"]).radical_contains(&Ideal::maximal(r.clone())).unwrap());
        let j = ideal(&r, &["x^2 + y^2", "x*y"]);
        assert!(j.radical_contains(&Ideal::maximal(r.clone())).unwrap());
        let k = ideal(&r, &["x^2 - y^2"]);
        assert!(k.radical_contains(&ideal(&r, &["x^3 - x*y^2"])).unwrap());
        assert!(!k.radical_contains(&x).unwrap());
    }

    #[test]
    fn minimal_generators() {
        let r = plane(2);
        assert_eq!(ideal(&r, &["x^2", "x^3", "y"]).minimal_generator_count().unwrap(), 2);
        assert_eq!(ideal(&r, &["x + y", "x^2 + x*y", "y^2"]).minimal_generator_count().unwrap(), 2);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), Some(10));
        assert_eq!(binomial(3, 5), Some(0));
        assert_eq!(binomial(60, 30), Some(118264581564861424));
        assert_eq!(binomial(200, 100), None);
    }

    fn monomial_ideal_strategy() -> impl Strategy<Value = Vec<(u64, u64)>> {
        prop::collection::vec((0u64..5, 0u64..5), 1..4)
    }

    fn from_pairs(r: &Arc<RingSpec>, pairs: &[(u64, u64)]) -> Ideal {
        let ms = pairs.iter().map(|&(a, b)| Monomial::new(vec![a, b])).collect();
        Ideal::from_monomials(r.clone(), &MonomialIdeal::minimalize(ms, 2)).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn power_comparison_sandwich(pairs in monomial_ideal_strategy(), k in 1i64..4, e in 0u32..3) {
            let r = plane(2);
            let j = from_pairs(&r, &pairs);
            prop_assume!(!j.as_monomial_ideal().unwrap().is_unit());
            let q = 2u64.pow(e);
            let mu = j.as_monomial_ideal().unwrap().len() as i64;
            let b = Budget::default();
            let jqk = j.frobenius_power(q).unwrap().power(k, &b).unwrap();
            let big = j.power(q as i64 * (mu + k - 1), &b).unwrap();
            prop_assert!(jqk.contains(&big).unwrap());
            prop_assert!(j.power(q as i64 * k, &b).unwrap().contains(&jqk).unwrap());
        }

        #[test]
        fn containment_is_a_partial_order(a in monomial_ideal_strategy(), b in monomial_ideal_strategy(), c in monomial_ideal_strategy()) {
            let r = plane(2);
            let (a, b, c) = (from_pairs(&r, &a), from_pairs(&r, &b), from_pairs(&r, &c));
            prop_assert!(a.contains(&a).unwrap());
            if a.contains(&b).unwrap() && b.contains(&c).unwrap() {
                prop_assert!(a.contains(&c).unwrap());
            }
        }

        #[test]
        fn frobenius_ignores_generating_set(c1 in 0u64..3, c2 in 1u64..3) {
            let r = plane(3);
            let i = ideal(&r, &["x^2 + y^2", "x*y"]);
            // Add a redundant combination of the generators.
            let extra = r.parse_polynomial(&format!("{c1}*x^3 + {c1}*x*y^2 + {c2}*x^2*y")).unwrap();
            let mut g = i.generators().to_vec();
            g.push(extra);
            let i2 = Ideal::new(r.clone(), g).unwrap();
            let a = i.frobenius_power(3).unwrap().groebner().unwrap();
            let b = i2.frobenius_power(3).unwrap().groebner().unwrap();
            prop_assert_eq!(a.elements(), b.elements());
        }
    }
}
