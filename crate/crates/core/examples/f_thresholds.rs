// F-threshold and F-limbus levels with their limits.

use std::error::Error;
use std::sync::Arc;

use hk_core::algebra::RingSpec;
use hk_core::ideal::Ideal;
use hk_core::limits::{f_limbus_estimate, f_limbus_level, f_threshold_estimate, f_threshold_level};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let plane = Arc::new(RingSpec::polynomial_ring(2, &["x", "y"])?);
    let m = Ideal::maximal(plane.clone());
    let m2 = Ideal::parse(plane, &["x^2", "x*y", "y^2"])?;
    for n in 1..=4 {
        println!("c_{n}(m, m^2) = {}", f_threshold_level(&m, &m2, n)?);
    }
    let c = f_threshold_estimate(&m, &m2, &[2, 3, 4, 5])?;
    println!("c ≈ {:.4} ± {:.4}", c.to_f64(), c.error_bound);

    let line = Arc::new(RingSpec::polynomial_ring(3, &["x"])?);
    let i = Ideal::parse(line.clone(), &["x^2"])?;
    let j = Ideal::parse(line, &["x^3"])?;
    println!("b_1((x^2), (x^3)) = {}", f_limbus_level(&i, &j, 1)?.value);
    let b = f_limbus_estimate(&i, &j, &[1, 2, 3])?;
    println!("b ≈ {:.4}", b.to_f64());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
