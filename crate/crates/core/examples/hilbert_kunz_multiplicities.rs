// e_HK of powers of the maximal ideal, the cusp, and e(I) from the
// Hilbert–Samuel function.

use std::error::Error;
use std::sync::Arc;

use hk_core::algebra::RingSpec;
use hk_core::groebner::Budget;
use hk_core::ideal::Ideal;
use hk_core::limits::{hilbert_kunz, hilbert_samuel};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for vars in [&["x", "y"][..], &["x", "y", "z"][..]] {
        let ring = Arc::new(RingSpec::polynomial_ring(2, vars)?);
        let m = Ideal::maximal(ring);
        for t in 1..=3 {
            let mt = m.power(t, &Budget::default())?;
            let e = hilbert_kunz(&mt, &[1, 2, 3])?;
            println!("d = {}, e_HK(m^{t}) = {} ({})", vars.len(), e.to_f64(), e.model);
        }
    }
    let cusp = Arc::new(RingSpec::parse(5, &["x", "y"], &[3, 2], &["x^2 - y^3"])?);
    let m = Ideal::maximal(cusp);
    let e = hilbert_kunz(&m, &[1, 2, 3])?;
    println!("cusp: e_HK(m) ≈ {:.4}, model {}", e.to_f64(), e.model);
    let hs = hilbert_samuel(&m, 10)?;
    println!("cusp: e(m) = {}", hs.to_f64());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
