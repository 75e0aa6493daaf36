//! The one-parameter entropy family: companion matrices of
//! `x^3 - 3a^2 x + 1` acting on the triple product torus. Each scan row
//! re-derives the characteristic polynomial, checks the sign table and
//! irreducibility exactly, orders the degrees, and classifies the first
//! degree's minimal polynomial.

use crate::degrees::{compare_lambdas, degree_profile, LambdaOrder};
use crate::error::{Error, Result};
use crate::num::factor::is_irreducible;
use crate::num::poly::IntPolynomial;
use crate::primitivity::{certify, MapKind, Rule, Verdict};
use crate::report::{LambdaJson, ScanReport, ScanRowJson, Sig10, SignTableJson};
use crate::salem::{classify, SalemVerdict};
use crate::torus::matrix::TorusMatrix;
use crate::torus::ring::{RingElement, RingTag};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use std::cmp::Ordering;

pub const FAMILY_NAME: &str = "pa";
pub const MAX_FAMILY_PARAMETER: i64 = 10_000;

/// The companion matrix of `x^3 - 3a^2 x + 1` over the rational integers.
pub fn family_matrix(a: i64) -> TorusMatrix {
    let z = |v: i64| RingElement::from_int(v, RingTag::Integer);
    TorusMatrix::new(vec![
        vec![z(0), z(1), z(0)],
        vec![z(0), z(0), z(1)],
        vec![z(-1), z(3 * a * a), z(0)],
    ])
    .expect("fixed shape")
}

/// `x^3 - 3a^2 x + 1`.
pub fn family_polynomial(a: i64) -> IntPolynomial {
    IntPolynomial::new(vec![
        BigInt::one(),
        BigInt::from(-3 * a * a),
        BigInt::zero(),
        BigInt::one(),
    ])
}

/// Scans `a_min..=a_max`, one row per parameter, computed in parallel and
/// reported in ascending order.
pub fn scan_family(a_min: i64, a_max: i64, tol: &BigRational) -> Result<ScanReport> {
    if a_min < 1 || a_min > a_max || a_max > MAX_FAMILY_PARAMETER {
        return Err(Error::invalid(format!(
            "family range must satisfy 1 <= min <= max <= {MAX_FAMILY_PARAMETER}"
        )));
    }
    let rows: Vec<Result<ScanRowJson>> = (a_min..=a_max)
        .into_par_iter()
        .map(|a| scan_row(a, tol))
        .collect();
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        out.push(row?);
    }
    let all_ok = out.iter().all(|r| r.row_ok);
    Ok(ScanReport {
        family: FAMILY_NAME,
        rows: out,
        all_ok,
    })
}

fn scan_row(a: i64, tol: &BigRational) -> Result<ScanRowJson> {
    let matrix = family_matrix(a);
    // re-derive the characteristic polynomial from the matrix: the lattice
    // action has char poly Phi^2, whose square-free part is Phi itself
    let phi = matrix.realify().char_poly().square_free_part();
    debug_assert_eq!(phi, family_polynomial(a));

    // exact sign table, plus the corrected closed forms
    let big_a = BigInt::from(a);
    let v_minus_a = phi.eval_int(&(-big_a.clone()));
    let v_zero = phi.eval_int(&BigInt::zero());
    let v_one = phi.eval_int(&BigInt::one());
    let v_a = phi.eval_int(&big_a);
    let signs_ok = v_minus_a.is_positive()
        && v_zero.is_positive()
        && v_one.is_negative()
        && v_a.is_negative();
    let two_a_cubed = BigInt::from(2) * &big_a * &big_a * &big_a;
    let closed_forms_ok = v_minus_a == &two_a_cubed + 1
        && v_zero == BigInt::one()
        && v_one == BigInt::from(2 - 3 * a * a)
        && v_a == -&two_a_cubed + 1;

    let irreducible = is_irreducible(&phi)?;

    let profile = degree_profile(&matrix, tol)?;
    let l1 = profile.lambda(1);
    let l2 = profile.lambda(2);
    let one = BigRational::one();
    let degrees_strictly_ordered = compare_lambdas(l2, l1) == LambdaOrder::Greater
        && l1
            .exact
            .as_ref()
            .map_or(false, |r| r.cmp_rational(&one) == Ordering::Greater);

    let cert = certify(&profile, MapKind::Automorphism, 3)?;

    let salem_verdict = match &l1.exact {
        Some(handle) => classify(handle.minpoly())?.verdict,
        None => {
            return Err(Error::Internal(format!(
                "family row a={a}: no exact handle for lambda_1"
            )))
        }
    };

    let row_ok = signs_ok
        && closed_forms_ok
        && irreducible
        && degrees_strictly_ordered
        && cert.verdict == Verdict::Primitive
        && cert.rule == Rule::Criterion2
        && salem_verdict == SalemVerdict::Neither;

    Ok(ScanRowJson {
        a,
        phi: phi.coeff_string(),
        irreducible,
        sign_table: SignTableJson {
            at_minus_a: v_minus_a.to_string(),
            at_zero: v_zero.to_string(),
            at_one: v_one.to_string(),
            at_a: v_a.to_string(),
            signs_ok,
            closed_forms_ok,
        },
        lambda1: LambdaJson::from_lambda(l1, true),
        lambda2: LambdaJson::from_lambda(l2, true),
        entropy: Sig10(profile.entropy),
        degrees_strictly_ordered,
        primitive: cert.verdict,
        rule: cert.rule,
        salem: salem_verdict,
        row_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> BigRational {
        BigRational::new(1.into(), 10_000_000_000i64.into())
    }

    #[test]
    fn row_a1_matches_the_anchor() {
        let report = scan_family(1, 1, &tol()).unwrap();
        assert!(report.all_ok);
        let row = &report.rows[0];
        assert_eq!(row.phi, "[1,-3,0,1]");
        assert!(row.irreducible);
        assert_eq!(row.sign_table.at_minus_a, "3");
        assert_eq!(row.sign_table.at_one, "-1");
        assert_eq!(row.sign_table.at_a, "-1");
        assert_eq!(row.salem, SalemVerdict::Neither);
        assert_eq!(row.primitive, Verdict::Primitive);
        assert_eq!(row.rule, Rule::Criterion2);
        assert_eq!(row.lambda1.minpoly.as_deref(), Some("[-1,9,-6,1]"));
    }

    #[test]
    fn row_a2_sign_table_values() {
        let report = scan_family(2, 2, &tol()).unwrap();
        let row = &report.rows[0];
        assert_eq!(row.phi, "[1,-12,0,1]");
        // true evaluations: Phi(-2) = 17, Phi(1) = -10, Phi(2) = -15
        assert_eq!(row.sign_table.at_minus_a, "17");
        assert_eq!(row.sign_table.at_one, "-10");
        assert_eq!(row.sign_table.at_a, "-15");
        assert!(row.sign_table.signs_ok);
        assert!(row.sign_table.closed_forms_ok);
        assert!(row.row_ok);
    }

    #[test]
    fn invalid_ranges_rejected() {
        assert!(scan_family(3, 2, &tol()).is_err());
        assert!(scan_family(0, 2, &tol()).is_err());
        assert!(scan_family(1, MAX_FAMILY_PARAMETER + 1, &tol()).is_err());
    }
}
