// Power and Frobenius-power scaling, and adjoining a variable.

use std::error::Error;
use std::sync::Arc;

use hk_core::algebra::RingSpec;
use hk_core::analysis::{adjoin_variable_check, scaling_check};
use hk_core::ideal::Ideal;
use hk_core::limits::Rational;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let plane = Arc::new(RingSpec::polynomial_ring(2, &["x", "y"])?);
    let m = Ideal::maximal(plane);
    let grid: Vec<Rational> = (1..=10).map(|k| Rational::new(k, 4)).collect();
    for n in 2..=5 {
        let rep = scaling_check(&m, &m, 1, n, &grid)?;
        println!(
            "n = {n}: power residual {}, Frobenius residual {:.5} (q * residual = {:.3})",
            rep.power_residual,
            rep.frobenius_residual,
            rep.frobenius_residual * rep.q as f64
        );
    }

    let line = Arc::new(RingSpec::polynomial_ring(2, &["x"])?);
    let x = Ideal::maximal(line);
    let grid: Vec<Rational> = (0..=12).map(|k| Rational::new(k, 4)).collect();
    for n in [3, 5] {
        let rep = adjoin_variable_check(&x, &x, 1, 1, n, &grid)?;
        println!("adjoin t to F_2[x], n = {n}: sup residual {:.5}", rep.max_residual);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
