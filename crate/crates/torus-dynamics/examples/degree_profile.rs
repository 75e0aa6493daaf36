//! Compute the full dynamical-degree profile and entropy of a torus
//! automorphism, with exact algebraic handles for each degree.
//!
//! ```bash
//! cargo run -p torus-dynamics --example degree_profile
//! ```

use num_rational::BigRational;
use torus_dynamics::degrees::{degree_profile, entropy_of};
use torus_dynamics::parse::parse_matrix;
use torus_dynamics::torus::ring::RingTag;

fn main() -> torus_dynamics::Result<()> {
    // the companion matrix of x^3 - 3x + 1 acting on a triple product torus
    let matrix = parse_matrix("[[0,1,0],[0,0,1],[-1,3,0]]", RingTag::Integer)?;
    let tol = BigRational::new(1.into(), 10_000_000_000i64.into());

    let profile = degree_profile(&matrix, &tol)?;
    println!("automorphism: {}", matrix.to_text());
    for (p, lambda) in profile.lambdas.iter().enumerate() {
        match &lambda.exact {
            Some(handle) => println!(
                "  lambda_{p} = {:.10}   minimal polynomial {}",
                lambda.value(),
                handle.minpoly().coeff_string()
            ),
            None => println!("  lambda_{p} = {:.10}", lambda.value()),
        }
    }
    println!("  entropy  = {:.10}", entropy_of(&profile));

    // a finite-order automorphism has a flat profile and zero entropy
    let twist = parse_matrix("[[-1*w,0,0],[0,-1*w,0],[0,0,-1*w]]", RingTag::Eisenstein)?;
    let flat = degree_profile(&twist, &tol)?;
    println!("\nfinite-order twist: {}", twist.to_text());
    println!(
        "  degrees {:?}, entropy {}",
        flat.lambdas.iter().map(|l| l.value()).collect::<Vec<_>>(),
        flat.entropy
    );
    println!("  order = {:?}", twist.finite_order(120)?);
    Ok(())
}
