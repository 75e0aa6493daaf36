//! The exact-numerics toolbox: certified real-root isolation, factorization
//! over the integers, unit-disc root counts and the certified maximum root
//! modulus.
//!
//! ```bash
//! cargo run -p torus-dynamics --example real_roots
//! ```

use num_rational::BigRational;
use torus_dynamics::num::discs::unit_disc_counts;
use torus_dynamics::num::factor::factor_over_integers;
use torus_dynamics::num::maxmod::max_modulus_root;
use torus_dynamics::num::sturm::{isolate_real_roots, refine_step};
use torus_dynamics::parse::parse_polynomial;

fn main() -> torus_dynamics::Result<()> {
    let phi = parse_polynomial("x^3-3*x+1")?;

    println!("p = {}", phi.coeff_string());
    let iso = isolate_real_roots(&phi)?;
    let width = BigRational::new(1.into(), 1_000_000i64.into());
    for (iv, m) in iso.intervals.iter().zip(&iso.multiplicities) {
        let r = refine_step(&phi, iv, &width);
        println!("  root in ({}, {}) multiplicity {m}", r.0, r.1);
    }

    let factors = factor_over_integers(&phi.mul(&phi))?;
    println!("factorization of p^2:");
    for (f, m) in &factors {
        println!("  {} ^ {m}", f.coeff_string());
    }

    let lehmer = parse_polynomial("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1")?;
    let counts = unit_disc_counts(&lehmer)?;
    println!(
        "unit-circle layout of the degree-10 palindrome: inside {}, on {}, outside {}",
        counts.inside, counts.on_circle, counts.outside
    );

    let tol = BigRational::new(1.into(), 1_000_000_000_000i64.into());
    let (enclosure, handle) = max_modulus_root(&phi, &tol)?;
    println!(
        "max root modulus of p: [{:.13}, {:.13}], attained by a real root: {}",
        enclosure.lo,
        enclosure.hi,
        handle.is_some()
    );
    Ok(())
}
