// Density levels, graded slices and Frobenius–Poincaré values.

use std::error::Error;
use std::sync::Arc;

use hk_core::algebra::RingSpec;
use hk_core::analysis::{dvr_limit, frobenius_poincare_integral, frobenius_poincare_level, ComplexPoint};
use hk_core::ideal::Ideal;
use hk_core::limits::{density_level, graded_density_level, h_level, rational_to_f64, Rational};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let line = Arc::new(RingSpec::polynomial_ring(2, &["x"])?);
    let x = Ideal::maximal(line);
    let n = 4;
    let q = 16i128;
    let f: Vec<String> = (-2..=18)
        .map(|k| density_level(&x, &x, n, Rational::new(k, q)).map(|v| v.to_string()))
        .collect::<Result<_, _>>()?;
    println!("f_4 on k/16, k = -2..18: {}", f.join(" "));

    let plane = Arc::new(RingSpec::polynomial_ring(2, &["x", "y"])?);
    let m = Ideal::maximal(plane);
    let g: Vec<String> = (0..=8)
        .map(|k| graded_density_level(&m, 3, Rational::new(k, 4)).map(|v| v.to_string()))
        .collect::<Result<_, _>>()?;
    println!("graded density of m at k/4: {}", g.join(" "));

    let n = 8;
    let q = 256i128;
    let samples: Vec<(f64, f64)> = (0..=q)
        .map(|k| {
            let s = Rational::new(k, q);
            h_level(&x, &x, n, s).map(|h| (rational_to_f64(&s), rational_to_f64(&h.normalized)))
        })
        .collect::<Result<_, _>>()?;
    for y in [ComplexPoint::new(0.0, 0.0), ComplexPoint::new(2.0, -1.0), ComplexPoint::new(-4.0, 0.0)] {
        let sum = frobenius_poincare_level(&x, &x, n, y)?;
        let quad = frobenius_poincare_integral(&samples, 1.0, y)?;
        println!("y = {:+}{:+}i: F_8 = {sum:.5}, quadrature = {quad:.5}, limit = {:.5}", y.re, y.im, dvr_limit(y));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
