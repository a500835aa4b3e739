//! Exact arithmetic foundation: prime fields, exponent vectors, sparse
//! polynomials, monomial orders and ring presentations.

pub mod field;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod polynomial;
pub mod ring;

pub use field::{field_arith, FieldElement, FieldOp, PrimeField};
pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};
pub use parse::parse_polynomial;
pub use polynomial::{checked_power, is_power_of, Polynomial};
pub use ring::RingSpec;
