//! Prime fields `F_p` with word-sized residues.

use std::fmt;

use crate::error::{HkError, Result};

/// Largest admissible characteristic (exclusive).
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;

/// Descriptor of the prime field `F_p`. Construction validates primality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= MAX_CHARACTERISTIC {
            return Err(HkError::CharacteristicTooLarge(p));
        }
        if !is_prime(p) {
            return Err(HkError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, a: u64) -> u64 {
        a % self.p
    }

    /// Reduces a signed integer into `[0, p)`.
    pub fn from_i64(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        let a = a % self.p;
        if a == 0 {
            return Err(HkError::InverseOfZero(self.p));
        }
        // Fermat: a^(p-2)
        Ok(self.pow(a, self.p - 2))
    }

    pub fn element(&self, value: u64) -> FieldElement {
        FieldElement {
            value: self.reduce(value),
            field: *self,
        }
    }
}

/// A residue together with its field, for standalone arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u64,
    field: PrimeField,
}

/// The four field operations exposed by [`field_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Inv,
}

impl FieldElement {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field != other.field {
            return Err(HkError::Domain(format!(
                "mixing F_{} and F_{}",
                self.field.p, other.field.p
            )));
        }
        Ok(())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Applies `op` to `a` and `b`. For [`FieldOp::Inv`] only `a` is used.
pub fn field_arith(a: FieldElement, b: FieldElement, op: FieldOp) -> Result<FieldElement> {
    a.same_field(&b)?;
    let k = a.field;
    let value = match op {
        FieldOp::Add => k.add(a.value, b.value),
        FieldOp::Sub => k.sub(a.value, b.value),
        FieldOp::Mul => k.mul(a.value, b.value),
        FieldOp::Inv => k.inv(a.value)?,
    };
    Ok(FieldElement { value, field: k })
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}
