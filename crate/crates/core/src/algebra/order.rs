use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use crate::error::{HkError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderKind {
    Lex,
    GradedReverseLex,
}

/// A monomial order on a fixed number of variables.
///
/// `permutation[0]` is the most significant variable. For the graded order
/// the optional weights decide the first comparison; ties fall back to
/// reverse lexicographic order, where the monomial with the smaller exponent
/// in the least significant variable is the larger one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialOrder {
    kind: OrderKind,
    permutation: Vec<usize>,
    weights: Option<Vec<u64>>,
}

impl MonomialOrder {
    pub fn lex(nvars: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            permutation: (0..nvars).collect(),
            weights: None,
        }
    }

    pub fn grevlex(nvars: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::GradedReverseLex,
            permutation: (0..nvars).collect(),
            weights: None,
        }
    }

    pub fn weighted_grevlex(weights: Vec<u64>) -> Result<Self> {
        if weights.iter().any(|&w| w == 0) {
            return Err(HkError::Config("weights must be positive".into()));
        }
        Ok(MonomialOrder {
            kind: OrderKind::GradedReverseLex,
            permutation: (0..weights.len()).collect(),
            weights: Some(weights),
        })
    }

    pub fn with_permutation(mut self, permutation: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; self.permutation.len()];
        if permutation.len() != seen.len() {
            return Err(HkError::ArityMismatch {
                expected: seen.len(),
                got: permutation.len(),
            });
        }
        for &i in &permutation {
            if i >= seen.len() || std::mem::replace(&mut seen[i], true) {
                return Err(HkError::Config(format!("bad variable permutation {permutation:?}")));
            }
        }
        self.permutation = permutation;
        Ok(self)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.permutation.len()
    }

    fn graded_degree(&self, m: &Monomial) -> u128 {
        match &self.weights {
            Some(w) => m
                .exponents()
                .iter()
                .zip(w)
                .map(|(&e, &w)| e as u128 * w as u128)
                .sum(),
            None => m.exponents().iter().map(|&e| e as u128).sum(),
        }
    }

    /// Total comparison of two monomials of the same arity.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self.kind {
            OrderKind::Lex => {
                for &i in &self.permutation {
                    match ea[i].cmp(&eb[i]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::GradedReverseLex => {
                match self.graded_degree(a).cmp(&self.graded_degree(b)) {
                    Ordering::Equal => {}
                    o => return o,
                }
                for &i in self.permutation.iter().rev() {
                    match ea[i].cmp(&eb[i]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// Checked comparison; errors when the arities disagree with the order.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        for m in [a, b] {
            if m.nvars() != self.nvars() {
                return Err(HkError::ArityMismatch {
                    expected: self.nvars(),
                    got: m.nvars(),
                });
            }
        }
        Ok(self.cmp(a, b))
    }
}
