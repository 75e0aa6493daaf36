//! Classify real algebraic integers as Salem, Pisot or neither from their
//! minimal polynomials, with exact root counts relative to the unit circle.
//!
//! ```bash
//! cargo run -p torus-dynamics --example classify_numbers
//! ```

use torus_dynamics::parse::parse_polynomial;
use torus_dynamics::salem::classify;

fn main() -> torus_dynamics::Result<()> {
    let inputs = [
        // Lehmer's degree-10 polynomial
        "x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1",
        // golden ratio
        "x^2-x-1",
        // squared roots of x^3 - 3x + 1
        "x^3-6*x^2+9*x-1",
        // degree-2 reciprocal: Salem only under the vacuous reading
        "x^2-3*x+1",
    ];
    for text in inputs {
        let p = parse_polynomial(text)?;
        let ev = classify(&p)?;
        println!("{text}");
        println!(
            "  verdict {:?}{}  largest root {:.10}",
            ev.verdict,
            if ev.degree_two_convention {
                " (degree-2 convention)"
            } else {
                ""
            },
            ev.largest_root.to_f64()
        );
        println!(
            "  reciprocal {}  inside {}  on circle {}  real outside {}",
            ev.reciprocal, ev.roots_inside, ev.roots_on_circle, ev.real_roots_outside
        );
    }
    Ok(())
}
