pub mod algebra;
pub mod analysis;
pub mod error;
pub mod groebner;
pub mod ideal;
pub mod limits;
pub mod monomial_ideal;
pub mod runner;
