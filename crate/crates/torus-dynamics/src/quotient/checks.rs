//! The verification suite over the quotient ring: invariance of the 13 ring
//! generators, the field-generator identities after clearing denominators,
//! and the two-way dimension count certifying the generator list up to a
//! degree bound.

use crate::error::{Error, Result};
use crate::quotient::element::{Monomial, QuotientElement};
use serde::Serialize;
use std::collections::BTreeMap;

/// Hard cap for the membership check.
pub const MEMBERSHIP_DEGREE_BOUND: u32 = 12;

/// The 13 generators: six quadratic y-monomials and seven cubic x-monomials
/// with per-variable exponents at most 2.
pub fn generators() -> Vec<(String, QuotientElement)> {
    let mut out = Vec::new();
    let y = |k: usize| QuotientElement::y(k);
    let x = |k: usize| QuotientElement::x(k);
    for k in 0..3 {
        out.push((format!("y{}^2", k + 1), y(k).pow(2)));
    }
    out.push(("y1*y2".to_string(), y(0).mul(&y(1))));
    out.push(("y2*y3".to_string(), y(1).mul(&y(2))));
    out.push(("y3*y1".to_string(), y(2).mul(&y(0))));
    for i in 0..=2u32 {
        for j in 0..=2u32 {
            for k in 0..=2u32 {
                if i + j + k == 3 {
                    let name = format!("x1^{i}*x2^{j}*x3^{k}");
                    let e = x(0).pow(i).mul(&x(1).pow(j)).mul(&x(2).pow(k));
                    out.push((name, e));
                }
            }
        }
    }
    debug_assert_eq!(out.len(), 13);
    out
}

/// Test hook: the same list with one generator replaced by a non-invariant
/// element.
pub fn corrupted_generators() -> Vec<(String, QuotientElement)> {
    let mut gens = generators();
    gens[3] = ("y1 (corrupted)".to_string(), QuotientElement::y(0));
    gens
}

#[derive(Debug, Clone, Serialize)]
pub struct InvarianceRow {
    pub generator: String,
    pub invariant: bool,
}

/// Checks `act(g, 1) = g` for every generator in the list.
pub fn verify_generator_invariance(
    gens: &[(String, QuotientElement)],
) -> Vec<InvarianceRow> {
    gens.iter()
        .map(|(name, e)| InvarianceRow {
            generator: name.clone(),
            invariant: e.act(1) == *e,
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityRow {
    pub name: String,
    pub residual: String,
    pub zero: bool,
}

/// The field-generator identities, each cleared of denominators inside the
/// quotient ring so that verification is an exact zero test.
///
/// The displayed form of equation (5) in the source derivation contains a
/// spurious factor (`w^3 - t*s^2` instead of `w^3 - s^2`); the corrected
/// identity implied by the surrounding equations is the one verified here,
/// under the name `eq5-corrected`.
pub fn verify_field_identities() -> Vec<IdentityRow> {
    let x = |k: usize| QuotientElement::x(k);
    let y = |k: usize| QuotientElement::y(k);
    let one = QuotientElement::one();
    let x1c = x(0).pow(3);
    let x2c = x(1).pow(3);
    let x3c = x(2).pow(3);
    let y1s = y(0).pow(2);
    let y2s = y(1).pow(2);
    let y3s = y(2).pow(2);

    let mut rows = Vec::new();
    let mut push = |name: &str, residual: QuotientElement| {
        rows.push(IdentityRow {
            name: name.to_string(),
            zero: residual.is_zero(),
            residual: residual.to_string(),
        });
    };

    // z^3 = (t^2 u + 1)/(u + 1)  cleared:  x2^3 (y1^2 + 1) - x1^3 (y2^2 + 1)
    push(
        "eq3-z",
        x2c.mul(&y1s.add(&one)).sub(&x1c.mul(&y2s.add(&one))),
    );
    // w^3 = (s^2 u + 1)/(u + 1)  cleared:  x3^3 (y1^2 + 1) - x1^3 (y3^2 + 1)
    push(
        "eq3-w",
        x3c.mul(&y1s.add(&one)).sub(&x1c.mul(&y3s.add(&one))),
    );
    // -1/u = (z^3 - t^2)/(z^3 - 1)  cleared:  y1^2 x2^3 - y2^2 x1^3 + x2^3 - x1^3
    push(
        "eq4",
        y1s.mul(&x2c)
            .sub(&y2s.mul(&x1c))
            .add(&x2c)
            .sub(&x1c),
    );
    // corrected -1/u = (w^3 - s^2)/(w^3 - 1):
    // y1^2 x3^3 - y3^2 x1^3 + x3^3 - x1^3
    push(
        "eq5-corrected",
        y1s.mul(&x3c)
            .sub(&y3s.mul(&x1c))
            .add(&x3c)
            .sub(&x1c),
    );
    // (w^3-1)(t^2-1) = (z^3-1)(s^2-1)  cleared:
    // (x3^3 - x1^3)(y2^2 - y1^2) - (x2^3 - x1^3)(y3^2 - y1^2)
    push(
        "eq6",
        x3c.sub(&x1c)
            .mul(&y2s.sub(&y1s))
            .sub(&x2c.sub(&x1c).mul(&y3s.sub(&y1s))),
    );
    // degenerate sanity: y2 = y1, x2 = x1 collapses both sides of eq6
    push(
        "eq6-specialized",
        x3c.sub(&x1c)
            .mul(&y1s.sub(&y1s))
            .sub(&x1c.sub(&x1c).mul(&y3s.sub(&y1s))),
    );
    rows
}

#[derive(Debug, Clone, Serialize)]
pub struct MembershipReport {
    pub degree: u32,
    pub invariant_monomials: usize,
    pub span_dimension: usize,
    pub all_products_invariant: bool,
    pub agree: bool,
}

/// Compares the dimension of the degree-`<= d` invariant subspace computed
/// from the monomial characterization (x-degree divisible by 3, y-degree
/// even) against the span of all generator products of total degree `<= d`.
pub fn bounded_membership_check(
    d: u32,
    gens: &[(String, QuotientElement)],
) -> Result<MembershipReport> {
    if d > MEMBERSHIP_DEGREE_BOUND {
        return Err(Error::capability(format!(
            "membership degree {d} exceeds the bound {MEMBERSHIP_DEGREE_BOUND}"
        )));
    }
    let invariant_monomials = count_invariant_monomials(d);
    let mut echelon = Echelon::default();
    let mut all_products_invariant = true;
    let gen_elems: Vec<&QuotientElement> = gens.iter().map(|(_, e)| e).collect();
    let mut stack: Vec<(usize, QuotientElement)> = vec![(0, QuotientElement::one())];
    while let Some((start, acc)) = stack.pop() {
        if acc.act(1) != acc {
            all_products_invariant = false;
        }
        echelon.insert(acc.clone());
        for (i, g) in gen_elems.iter().enumerate().skip(start) {
            let next = acc.mul(g);
            if next.max_total_degree() <= d && !next.is_zero() {
                stack.push((i, next));
            }
        }
    }
    let span_dimension = echelon.rank();
    Ok(MembershipReport {
        degree: d,
        invariant_monomials,
        span_dimension,
        all_products_invariant,
        agree: all_products_invariant && span_dimension == invariant_monomials,
    })
}

/// Monomials `x^I y^J` with `|I|` divisible by 3 (each exponent <= 2), `|J|`
/// even, total degree at most `d`.
fn count_invariant_monomials(d: u32) -> usize {
    let mut count = 0usize;
    for i1 in 0..=2u32 {
        for i2 in 0..=2u32 {
            for i3 in 0..=2u32 {
                let xi = i1 + i2 + i3;
                if xi % 3 != 0 || xi > d {
                    continue;
                }
                let rest = d - xi;
                // number of J >= 0 triples with |J| even and |J| <= rest
                let mut j = 0u32;
                while j <= rest {
                    count += ((j + 1) * (j + 2) / 2) as usize;
                    j += 2;
                }
            }
        }
    }
    count
}

/// Sparse row echelon over the quotient ring's monomial basis.
#[derive(Default)]
struct Echelon {
    pivots: BTreeMap<Monomial, QuotientElement>,
}

impl Echelon {
    fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces a row against the pivots and installs it when independent.
    fn insert(&mut self, mut row: QuotientElement) -> bool {
        loop {
            let (lead, coeff) = match row.leading_term() {
                Some(t) => t,
                None => return false,
            };
            match self.pivots.get(&lead) {
                Some(pivot) => {
                    row = row.sub(&pivot.scale(&coeff));
                }
                None => {
                    self.pivots.insert(lead, row.scale(&coeff.inv()));
                    return true;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_thirteen_generators_are_invariant() {
        let rows = verify_generator_invariance(&generators());
        assert_eq!(rows.len(), 13);
        assert!(rows.iter().all(|r| r.invariant), "{rows:?}");
    }

    #[test]
    fn corrupted_list_fails_invariance() {
        let rows = verify_generator_invariance(&corrupted_generators());
        let bad: Vec<&InvarianceRow> = rows.iter().filter(|r| !r.invariant).collect();
        assert_eq!(bad.len(), 1);
        assert!(bad[0].generator.contains("corrupted"));
    }

    #[test]
    fn field_identities_reduce_to_zero() {
        let rows = verify_field_identities();
        assert_eq!(rows.len(), 6);
        for row in &rows {
            assert!(row.zero, "{} left residual {}", row.name, row.residual);
        }
    }

    #[test]
    fn membership_small_degrees() {
        let gens = generators();
        // d = 2: constants plus the six quadratic y-generators
        let rep = bounded_membership_check(2, &gens).unwrap();
        assert_eq!(rep.invariant_monomials, 7);
        assert_eq!(rep.span_dimension, 7);
        assert!(rep.agree);
        // d = 3 adds the seven cubic x-monomials
        let rep = bounded_membership_check(3, &gens).unwrap();
        assert_eq!(rep.invariant_monomials, 14);
        assert!(rep.agree);
        // d = 6 per the derived oracle
        let rep = bounded_membership_check(6, &gens).unwrap();
        assert!(rep.agree, "{rep:?}");
    }

    #[test]
    fn membership_bound_enforced() {
        assert!(matches!(
            bounded_membership_check(13, &generators()),
            Err(Error::Capability(_))
        ));
    }

    #[test]
    fn invariant_monomial_counts_by_hand() {
        // degree 0: just 1
        assert_eq!(count_invariant_monomials(0), 1);
        // degree 2: 1 + six y-quadratics
        assert_eq!(count_invariant_monomials(2), 7);
        // degree 3: plus seven cubic x-monomials
        assert_eq!(count_invariant_monomials(3), 14);
        // degree 4: plus the fifteen quartic y-monomials
        assert_eq!(count_invariant_monomials(4), 29);
    }

    #[test]
    fn y1_is_not_invariant() {
        let y1 = QuotientElement::y(0);
        assert_ne!(y1.act(3), y1);
        assert_ne!(y1.act(1), y1);
    }
}
