// Inequality checks for the maximal ideal of F_2[x, y] against m and m^2.

use std::error::Error;
use std::sync::Arc;

use hk_core::algebra::RingSpec;
use hk_core::analysis::inequality_report;
use hk_core::ideal::Ideal;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let ring = Arc::new(RingSpec::polynomial_ring(2, &["x", "y"])?);
    let m = Ideal::maximal(ring.clone());
    let m2 = Ideal::parse(ring, &["x^2", "x*y", "y^2"])?;
    for j in [&m, &m2] {
        println!("J = {j}");
        for c in inequality_report(&m, j, 2, &[2, 3, 4])? {
            println!(
                "  {:<24} level {} lhs {:.4} rhs {:.4} holds {} {}",
                c.check,
                c.level,
                c.lhs,
                c.rhs,
                c.holds,
                c.witness.unwrap_or_default()
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
