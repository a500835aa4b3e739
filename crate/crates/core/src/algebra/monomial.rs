use std::fmt;

use crate::error::{HkError, Result};

/// An exponent vector. Arithmetic on exponents is checked and fails with
/// [`HkError::Overflow`] instead of wrapping.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u64>);

impl Monomial {
    pub fn new(exponents: Vec<u64>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// The monomial `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    #[inline]
    pub fn exponents(&self) -> &[u64] {
        &self.0
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn weighted_degree(&self, weights: &[u64]) -> Result<u64> {
        self.0.iter().zip(weights).try_fold(0u64, |acc, (&e, &w)| {
            e.checked_mul(w)
                .and_then(|t| acc.checked_add(t))
                .ok_or_else(|| HkError::overflow("weighted degree"))
        })
    }

    fn check_arity(&self, other: &Monomial) -> Result<()> {
        if self.0.len() != other.0.len() {
            return Err(HkError::ArityMismatch {
                expected: self.0.len(),
                got: other.0.len(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_arity(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
            .ok_or_else(|| HkError::overflow("monomial product"))
    }

    /// `self^k`, i.e. every exponent multiplied by `k`.
    pub fn pow(&self, k: u64) -> Result<Monomial> {
        self.0
            .iter()
            .map(|e| e.checked_mul(k))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
            .ok_or_else(|| HkError::overflow("monomial power"))
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.0.len() != other.0.len() {
            return None;
        }
        other
            .0
            .iter()
            .zip(&self.0)
            .map(|(b, a)| b.checked_sub(*a))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
    }

    pub fn support_mask(&self) -> u64 {
        self.support().fold(0u64, |m, i| m | (1 << i))
    }

    /// Formats using variable names, `1` for the empty monomial.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay { m: self, names }
    }
}

pub struct MonomialDisplay<'a> {
    m: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            let name = self.names.get(i).map(String::as_str).unwrap_or("?");
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}
