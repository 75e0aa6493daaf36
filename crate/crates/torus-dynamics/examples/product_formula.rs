//! Verify the max-product formula for dynamical degrees on a block-diagonal
//! product map: `lambda_p(g x h) = max_j lambda_j(g) * lambda_{p-j}(h)`.
//!
//! ```bash
//! cargo run -p torus-dynamics --example product_formula
//! ```

use num_rational::BigRational;
use torus_dynamics::degrees::verify_product_formula;
use torus_dynamics::parse::parse_matrix;
use torus_dynamics::torus::ring::RingTag;

fn main() -> torus_dynamics::Result<()> {
    let g = parse_matrix("[[2,1],[1,1]]", RingTag::Integer)?;
    let h = parse_matrix("[[0,1,0],[0,0,1],[-1,3,0]]", RingTag::Integer)?;
    let tol = BigRational::new(1.into(), 1_000_000_000i64.into());

    let report = verify_product_formula(&g, &h, &tol)?;
    println!("blocks: g = {}, h = {}", g.to_text(), h.to_text());
    println!("p   lambda_p(g x h)   max_j lambda_j(g) lambda_(p-j)(h)   agree");
    for row in &report.rows {
        println!(
            "{:<3} {:<17.10} {:<33.10} {}",
            row.p, row.lhs, row.rhs, row.agree
        );
    }
    println!("all agree: {}", report.all_agree());
    Ok(())
}
