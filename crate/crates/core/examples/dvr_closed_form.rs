// h_n for I = (x^2), J = (x^3) in F_3[x], where raw(t) = min{2t, 3q}.

use std::error::Error;
use std::sync::Arc;

use hk_core::algebra::RingSpec;
use hk_core::ideal::Ideal;
use hk_core::limits::{h_estimate, h_levels, rational_string, Rational};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let ring = Arc::new(RingSpec::polynomial_ring(3, &["x"])?);
    let i = Ideal::parse(ring.clone(), &["x^2"])?;
    let j = Ideal::parse(ring, &["x^3"])?;
    for n in 1..=3 {
        let q = 3i128.pow(n);
        let grid: Vec<Rational> = (0..=2 * q).map(|k| Rational::new(k, q)).collect();
        for x in h_levels(&i, &j, n, &grid)? {
            assert_eq!(x.raw, (2 * x.ceil_sq as u64).min(3 * x.q));
        }
        println!("n = {n}: raw = min(2t, {}) on all {} grid points", 3 * q, grid.len());
    }
    let e = h_estimate(&i, &j, Rational::from_integer(1), &[1, 2, 3, 4])?;
    println!("h(1) ≈ {} ({})", e.value.exact().map(|r| rational_string(&r)).unwrap_or_default(), e.model);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
