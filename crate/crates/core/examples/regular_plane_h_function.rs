// The h-function of the maximal ideal of F_2[x, y] against the lattice
// count s^2/2, 1 - (2-s)^2/2, 1.

use std::error::Error;
use std::sync::Arc;

use hk_core::algebra::RingSpec;
use hk_core::ideal::Ideal;
use hk_core::limits::{h_estimate, stable_point_level, Rational};

fn lattice(s: f64) -> f64 {
    if s <= 1.0 {
        s * s / 2.0
    } else if s <= 2.0 {
        1.0 - (2.0 - s) * (2.0 - s) / 2.0
    } else {
        1.0
    }
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let ring = Arc::new(RingSpec::polynomial_ring(2, &["x", "y"])?);
    let m = Ideal::maximal(ring);
    let levels = [3, 4, 5, 6];
    for k in [1i128, 3, 4, 5, 7, 8, 10] {
        let s = Rational::new(k, 4);
        let e = h_estimate(&m, &m, s, &levels)?;
        let want = lattice(k as f64 / 4.0);
        println!("h({k}/4) ≈ {:.6} ± {:.1e}, limit {want:.6}", e.to_f64(), e.error_bound);
    }
    for n in 1..=4 {
        let sp = stable_point_level(&m, &m, n)?;
        println!("q = {}: stable point t = {} = 2q - 1", sp.q, sp.t);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
