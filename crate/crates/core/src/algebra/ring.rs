use std::fmt::Write as _;

use super::field::PrimeField;
use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::parse::parse_polynomial;
use super::polynomial::Polynomial;
use crate::error::{HkError, Result};
use crate::groebner::{self, Budget};

/// A presentation `F_p[x_1..x_n] / (relations)` with positive variable
/// weights. Every relation is weighted-homogeneous, so lengths computed in
/// the graded ring agree with lengths in its localization at the
/// homogeneous maximal ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingSpec {
    field: PrimeField,
    variables: Vec<String>,
    weights: Vec<u64>,
    relations: Vec<Polynomial>,
    dim: usize,
}

impl RingSpec {
    pub fn new(
        p: u64,
        variables: Vec<String>,
        weights: Vec<u64>,
        relations: Vec<Polynomial>,
    ) -> Result<Self> {
        let field = PrimeField::new(p)?;
        if variables.len() != weights.len() {
            return Err(HkError::Config(format!(
                "{} variables but {} weights",
                variables.len(),
                weights.len()
            )));
        }
        if variables.len() > 32 {
            return Err(HkError::Config("at most 32 variables are supported".into()));
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(HkError::Config("weights must be positive".into()));
        }
        for (i, v) in variables.iter().enumerate() {
            if v.is_empty() || variables[..i].contains(v) {
                return Err(HkError::Config(format!("bad or repeated variable name `{v}`")));
            }
        }
        let mut relations: Vec<Polynomial> =
            relations.into_iter().filter(|r| !r.is_zero()).collect();
        for r in &relations {
            if r.nvars() != variables.len() || r.field() != field {
                return Err(HkError::Config("relation lives in a different ring".into()));
            }
            if !r.is_weighted_homogeneous(&weights)? {
                return Err(HkError::Inhomogeneous {
                    generator: r.display_with(&variables).to_string(),
                    degrees: r.weighted_degrees(&weights)?,
                });
            }
        }
        relations.sort_by(|a, b| a.terms().cmp(b.terms()));
        relations.dedup();
        let mut ring = RingSpec {
            field,
            variables,
            weights,
            relations,
            dim: 0,
        };
        let ord = ring.default_order();
        let basis = groebner::buchberger(&ring.relations, ring.nvars(), field, &ord, &Budget::default())?;
        ring.dim = groebner::dimension(&basis.leading().clone(), ring.nvars())
            .ok_or_else(|| HkError::Config("relations generate the unit ideal".into()))?;
        Ok(ring)
    }

    /// Polynomial ring with unit weights.
    pub fn polynomial_ring(p: u64, variables: &[&str]) -> Result<Self> {
        Self::new(
            p,
            variables.iter().map(|s| s.to_string()).collect(),
            vec![1; variables.len()],
            Vec::new(),
        )
    }

    /// Builds a ring from text relations.
    pub fn parse(p: u64, variables: &[&str], weights: &[u64], relations: &[&str]) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let names: Vec<String> = variables.iter().map(|s| s.to_string()).collect();
        let rels = relations
            .iter()
            .map(|r| parse_polynomial(r, &names, field))
            .collect::<Result<Vec<_>>>()?;
        Self::new(p, names, weights.to_vec(), rels)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    /// Krull dimension of the presented ring.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.relations.is_empty()
    }

    /// True when every relation is a single term.
    pub fn has_monomial_relations(&self) -> bool {
        self.relations.iter().all(|r| r.as_monomial().is_some())
    }

    /// Weighted graded reverse lexicographic order, the default everywhere.
    pub fn default_order(&self) -> MonomialOrder {
        MonomialOrder::weighted_grevlex(self.weights.clone())
            .expect("weights validated at construction")
    }

    pub fn parse_polynomial(&self, text: &str) -> Result<Polynomial> {
        parse_polynomial(text, &self.variables, self.field)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::monomial(self.field, Monomial::var(self.nvars(), i))
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::constant(self.field, self.nvars(), 1)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.field, self.nvars())
    }

    /// The same ring with one extra variable appended (relations lifted).
    pub fn adjoin_variable(&self, name: &str, weight: u64) -> Result<RingSpec> {
        let mut vars = self.variables.clone();
        vars.push(name.to_string());
        let mut weights = self.weights.clone();
        weights.push(weight);
        let rels = self
            .relations
            .iter()
            .map(|r| self.lift(r, 1))
            .collect::<Result<Vec<_>>>()?;
        RingSpec::new(self.characteristic(), vars, weights, rels)
    }

    /// Re-embeds a polynomial of this ring into a ring with `extra` more
    /// trailing variables.
    pub fn lift(&self, f: &Polynomial, extra: usize) -> Result<Polynomial> {
        let n = self.nvars() + extra;
        Polynomial::from_terms(
            self.field,
            n,
            f.terms().map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                e.resize(n, 0);
                (Monomial::new(e), c)
            }),
        )
    }

    /// The quotient ring by additional weighted-homogeneous generators.
    pub fn quotient(&self, gens: &[Polynomial]) -> Result<RingSpec> {
        let mut rels = self.relations.clone();
        rels.extend(gens.iter().cloned());
        RingSpec::new(self.characteristic(), self.variables.clone(), self.weights.clone(), rels)
    }

    /// Stable textual identity used for hashing and cache keys.
    pub fn canonical_key(&self) -> String {
        let mut s = format!("p={};vars={};weights=", self.characteristic(), self.variables.join(","));
        for w in &self.weights {
            let _ = write!(s, "{w},");
        }
        s.push_str(";rels=");
        for r in &self.relations {
            for (m, c) in r.terms() {
                let _ = write!(s, "{c}:{:?}", m.exponents());
            }
            s.push('|');
        }
        s
    }
}
