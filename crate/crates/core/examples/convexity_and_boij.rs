// Boij ratios of the associated graded slices and the functional ℋ_n.

use std::error::Error;
use std::sync::Arc;

use hk_core::algebra::RingSpec;
use hk_core::analysis::{boij_ratios, convex_functional};
use hk_core::ideal::Ideal;
use hk_core::limits::{rational_string, Rational};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let ring = Arc::new(RingSpec::polynomial_ring(2, &["x", "y", "z"])?);
    let i = Ideal::parse(ring.clone(), &["x*y", "y^2", "z^3"])?;
    let j = Ideal::parse(ring, &["x^2", "y^2", "z^2"])?;
    let rep = boij_ratios(&i, &j, 2, 12)?;
    let ratios: Vec<String> = rep.rows.iter().map(|r| rational_string(&r.ratio)).collect();
    println!("mu = {}, ratios: {}", rep.mu, ratios.join(" "));
    println!("non-increasing: {}", rep.is_non_increasing());

    let grid: Vec<Rational> = (1..=12).map(|k| Rational::new(k, 4)).collect();
    let h = convex_functional(&i, &j, 2, Rational::new(1, 4), &grid)?;
    for p in &h.points {
        println!("ℋ_2({}) = {}", rational_string(&p.s), p.value);
    }
    println!("slopes non-increasing: {}", h.slopes_non_increasing());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
