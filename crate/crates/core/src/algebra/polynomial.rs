use std::collections::BTreeMap;
use std::fmt;

use super::field::PrimeField;
use super::monomial::Monomial;
use super::order::MonomialOrder;
use crate::error::{HkError, Result};

/// Sparse polynomial over `F_p`: a map from exponent vectors to nonzero
/// residues. Zero coefficients are never stored, so structural equality is
/// polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: PrimeField,
    nvars: usize,
    terms: BTreeMap<Monomial, u64>,
}

impl Polynomial {
    pub fn zero(field: PrimeField, nvars: usize) -> Self {
        Polynomial {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: PrimeField, nvars: usize, c: u64) -> Self {
        Self::term(field, Monomial::one(nvars), c)
    }

    pub fn term(field: PrimeField, m: Monomial, c: u64) -> Self {
        let nvars = m.nvars();
        let mut p = Self::zero(field, nvars);
        let c = field.reduce(c);
        if c != 0 {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn monomial(field: PrimeField, m: Monomial) -> Self {
        Self::term(field, m, 1)
    }

    pub fn from_terms(
        field: PrimeField,
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, u64)>,
    ) -> Result<Self> {
        let mut p = Self::zero(field, nvars);
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(HkError::ArityMismatch {
                    expected: nvars,
                    got: m.nvars(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u64)> {
        self.terms.iter().map(|(m, c)| (m, *c))
    }

    pub fn coefficient(&self, m: &Monomial) -> u64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// The single monomial of a one-term polynomial.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        if self.terms.len() == 1 {
            self.terms.keys().next()
        } else {
            None
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    fn add_term(&mut self, m: Monomial, c: u64) {
        let c = self.field.reduce(c);
        if c == 0 {
            return;
        }
        let k = self.field;
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = k.add(*o.get(), c);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(HkError::ArityMismatch {
                expected: self.nvars,
                got: other.nvars,
            });
        }
        if self.field != other.field {
            return Err(HkError::Domain("polynomials over different fields".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Polynomial {
        let k = self.field;
        Polynomial {
            field: k,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), k.neg(*c))).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        let c = self.field.reduce(c);
        if c == 0 {
            return Self::zero(self.field, self.nvars);
        }
        let k = self.field;
        Polynomial {
            field: k,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), k.mul(*a, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<Polynomial> {
        let mut terms = BTreeMap::new();
        for (t, c) in &self.terms {
            terms.insert(t.mul(m)?, *c);
        }
        Ok(Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms,
        })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.field, self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(b)?, self.field.mul(*ca, *cb));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: u64) -> Result<Polynomial> {
        let mut acc = Self::constant(self.field, self.nvars, 1);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `f^q` for `q` a power of the characteristic. Coefficients are fixed by
    /// Frobenius on `F_p`, so only exponents change.
    pub fn frobenius(&self, q: u64) -> Result<Polynomial> {
        if !is_power_of(q, self.field.characteristic()) {
            return Err(HkError::Domain(format!(
                "{q} is not a power of the characteristic {}",
                self.field.characteristic()
            )));
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            terms.insert(m.pow(q)?, *c);
        }
        Ok(Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms,
        })
    }

    /// Leading monomial and coefficient under `ord`.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Option<(&Monomial, u64)> {
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(a.0, b.0))
            .map(|(m, c)| (m, *c))
    }

    pub fn monic(&self, ord: &MonomialOrder) -> Result<Polynomial> {
        match self.leading_term(ord) {
            None => Ok(self.clone()),
            Some((_, c)) => Ok(self.scale(self.field.inv(c)?)),
        }
    }

    /// Distinct weighted degrees of the terms, ascending.
    pub fn weighted_degrees(&self, weights: &[u64]) -> Result<Vec<u64>> {
        let mut d = self
            .terms
            .keys()
            .map(|m| m.weighted_degree(weights))
            .collect::<Result<Vec<_>>>()?;
        d.sort_unstable();
        d.dedup();
        Ok(d)
    }

    pub fn is_weighted_homogeneous(&self, weights: &[u64]) -> Result<bool> {
        Ok(self.weighted_degrees(weights)?.len() <= 1)
    }

    /// Smallest weighted degree among the terms (0 for the zero polynomial).
    pub fn min_weighted_degree(&self, weights: &[u64]) -> u64 {
        self.terms
            .keys()
            .filter_map(|m| m.weighted_degree(weights).ok())
            .min()
            .unwrap_or(0)
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> PolynomialDisplay<'a> {
        PolynomialDisplay { p: self, names }
    }
}

pub struct PolynomialDisplay<'a> {
    p: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for PolynomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        // Highest total degree first, ties by reverse exponent order.
        let mut terms: Vec<_> = self.p.terms().collect();
        terms.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then(b.0.cmp(a.0)));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match (c, m.is_one()) {
                (c, true) => write!(f, "{c}")?,
                (1, false) => write!(f, "{}", m.display_with(self.names))?,
                (c, false) => write!(f, "{c}*{}", m.display_with(self.names))?,
            }
        }
        Ok(())
    }
}

pub fn is_power_of(q: u64, p: u64) -> bool {
    if q == 0 || p < 2 {
        return false;
    }
    let mut x = q;
    while x % p == 0 {
        x /= p;
    }
    x == 1
}

/// Integer `p^n`, checked.
pub fn checked_power(p: u64, n: u32) -> Result<u64> {
    p.checked_pow(n)
        .ok_or_else(|| HkError::overflow(format!("{p}^{n}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn k(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn var(p: u64, nvars: usize, i: usize) -> Polynomial {
        Polynomial::monomial(k(p), Monomial::var(nvars, i))
    }

    #[test]
    fn freshmans_dream_square() {
        let s = var(2, 2, 0).add(&var(2, 2, 1)).unwrap();
        let sq = s.mul(&s).unwrap();
        let expected = Polynomial::from_terms(
            k(2),
            2,
            [(Monomial::new(vec![2, 0]), 1), (Monomial::new(vec![0, 2]), 1)],
        )
        .unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn difference_of_squares_mod_5() {
        let (x, y) = (var(5, 2, 0), var(5, 2, 1));
        let prod = x.add(&y).unwrap().mul(&x.sub(&y).unwrap()).unwrap();
        assert_eq!(prod.coefficient(&Monomial::new(vec![2, 0])), 1);
        assert_eq!(prod.coefficient(&Monomial::new(vec![0, 2])), 4);
        assert_eq!(prod.coefficient(&Monomial::new(vec![1, 1])), 0);
        assert_eq!(prod.len(), 2);
        let zero = Polynomial::zero(k(5), 2);
        assert!(zero.mul(&prod).unwrap().is_zero());
    }

    #[test]
    fn frobenius_requires_power_of_p() {
        let x = var(3, 1, 0);
        assert!(x.frobenius(9).is_ok());
        assert!(matches!(x.frobenius(6), Err(HkError::Domain(_))));
        assert!(is_power_of(1, 3));
        assert!(!is_power_of(0, 3));
    }

    fn arb_poly(p: u64, nvars: usize) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(
            (proptest::collection::vec(0u64..4, nvars), 0u64..p),
            0..5,
        )
        .prop_map(move |ts| {
            Polynomial::from_terms(k(p), nvars, ts.into_iter().map(|(e, c)| (Monomial::new(e), c)))
                .unwrap()
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(f in arb_poly(5, 2), g in arb_poly(5, 2), h in arb_poly(5, 2)) {
            prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
            prop_assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
            prop_assert_eq!(
                f.mul(&g.add(&h).unwrap()).unwrap(),
                f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap()
            );
            prop_assert!(f.sub(&f).unwrap().is_zero());
        }

        #[test]
        fn freshmans_dream(p in prop::sample::select(vec![2u64, 3, 5]), seed in 0u64..1000) {
            let mut rng = seed;
            let mut next = || { rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); rng >> 33 };
            let mk = |next: &mut dyn FnMut() -> u64| {
                Polynomial::from_terms(k(p), 2, (0..3).map(|_| (Monomial::new(vec![next() % 3, next() % 3]), next() % p))).unwrap()
            };
            let f = mk(&mut next);
            let g = mk(&mut next);
            let lhs = f.add(&g).unwrap().pow(p).unwrap();
            let rhs = f.pow(p).unwrap().add(&g.pow(p).unwrap()).unwrap();
            prop_assert_eq!(&lhs, &rhs);
            prop_assert_eq!(f.pow(p).unwrap(), f.frobenius(p).unwrap());
        }
    }
}
