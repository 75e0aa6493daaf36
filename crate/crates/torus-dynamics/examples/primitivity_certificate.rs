//! Produce a primitivity certificate with the replayed fibration case
//! analysis, and the necessary-condition report.
//!
//! ```bash
//! cargo run -p torus-dynamics --example primitivity_certificate
//! ```

use num_rational::BigRational;
use torus_dynamics::degrees::{degree_profile, DegreeProfile};
use torus_dynamics::parse::parse_matrix;
use torus_dynamics::primitivity::{analyze_fibration_cases, certify, imprimitivity_necessary_bound, MapKind};
use torus_dynamics::torus::ring::RingTag;

fn main() -> torus_dynamics::Result<()> {
    let matrix = parse_matrix("[[0,1,0],[0,0,1],[-1,3,0]]", RingTag::Integer)?;
    let tol = BigRational::new(1.into(), 10_000_000_000i64.into());
    let profile = degree_profile(&matrix, &tol)?;

    let cert = certify(&profile, MapKind::Automorphism, 3)?;
    println!(
        "verdict {:?} via {:?} (lambda1 {:.6}, lambda2 {:.6})",
        cert.verdict, cert.rule, cert.lambda1, cert.lambda2
    );
    for trace in analyze_fibration_cases(&profile)? {
        println!("\nbase dimension {}:", trace.dim_b);
        for step in &trace.steps {
            println!("  {step}");
        }
        println!("  => {:?}", trace.conclusion);
    }

    let bound = imprimitivity_necessary_bound(&profile)?;
    println!(
        "\nnecessary bound lambda2 >= lambda1: holds = {:?}, imprimitivity excluded = {}",
        bound.bound_holds, bound.imprimitivity_excluded
    );

    // a synthetic profile where the first criterion applies directly
    let synthetic = DegreeProfile::from_values(&[1.0, 9.0, 3.0, 1.0])?;
    let cert = certify(&synthetic, MapKind::DominantMeromorphic, 3)?;
    println!(
        "\nsynthetic (1, 9, 3, 1): verdict {:?} via {:?}",
        cert.verdict, cert.rule
    );
    Ok(())
}
