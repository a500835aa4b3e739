// Gröbner bases, normal forms and colengths on the cusp x^2 = y^3.

use std::error::Error;
use std::sync::Arc;

use hk_core::algebra::RingSpec;
use hk_core::ideal::Ideal;
use hk_core::limits::hilbert_kunz_level;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let ring = Arc::new(RingSpec::parse(3, &["x", "y"], &[3, 2], &["x^2 - y^3"])?);
    let j = Ideal::parse(ring.clone(), &["x^4", "y^4"])?;
    let gb = j.groebner()?;
    for g in gb.elements() {
        println!("basis element: {}", g.display_with(ring.variables()));
    }
    println!("colength: {:?}", gb.colength()?);
    let f = ring.parse_polynomial("x^3 + y^5")?;
    println!("normal form of x^3 + y^5: {}", gb.normal_form(&f)?.display_with(ring.variables()));
    let m = Ideal::maximal(ring);
    for n in 1..=3 {
        println!("l(R/m^[3^{n}]) = {}", hilbert_kunz_level(&m, n)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
