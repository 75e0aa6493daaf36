//! Primitivity certificates from degree profiles.
//!
//! Two one-directional criteria: `lambda_1 > lambda_2` rules out any
//! equivariant fibration in every dimension, and in dimension 3 a
//! bimeromorphic map with `lambda_1 != lambda_2` cannot fiber either, by the
//! closed-form case analysis over the base dimension. Certificates carry the
//! replayed derivation for both base dimensions.

use crate::degrees::{compare_lambdas, DegreeProfile, LambdaOrder};
use crate::error::{Error, Result};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapKind {
    Automorphism,
    Bimeromorphic,
    DominantMeromorphic,
}

impl MapKind {
    pub fn parse(s: &str) -> Result<MapKind> {
        match s {
            "automorphism" => Ok(MapKind::Automorphism),
            "bimeromorphic" => Ok(MapKind::Bimeromorphic),
            "dominant-meromorphic" => Ok(MapKind::DominantMeromorphic),
            other => Err(Error::invalid(format!("unknown map kind {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Primitive,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Rule {
    #[serde(rename = "criterion-1")]
    Criterion1,
    #[serde(rename = "criterion-2")]
    Criterion2,
    #[serde(rename = "none")]
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Feasibility {
    Feasible,
    Infeasible,
}

#[derive(Debug, Clone, Serialize)]
pub struct FibrationTrace {
    #[serde(rename = "dimB")]
    pub dim_b: usize,
    pub steps: Vec<String>,
    pub conclusion: Feasibility,
}

#[derive(Debug, Clone, Serialize)]
pub struct PrimitivityCertificate {
    pub verdict: Verdict,
    pub rule: Rule,
    pub map_kind: MapKind,
    pub dim: usize,
    pub lambda1: f64,
    pub lambda2: f64,
    pub traces: Vec<FibrationTrace>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

/// Applies the degree criteria to a profile.
pub fn certify(
    profile: &DegreeProfile,
    map_kind: MapKind,
    dim: usize,
) -> Result<PrimitivityCertificate> {
    if profile.n != dim {
        return Err(Error::invalid(format!(
            "profile has dimension {}, certificate requested for {dim}",
            profile.n
        )));
    }
    if dim < 2 {
        return Ok(PrimitivityCertificate {
            verdict: Verdict::Inconclusive,
            rule: Rule::None,
            map_kind,
            dim,
            lambda1: f64::NAN,
            lambda2: f64::NAN,
            traces: Vec::new(),
            diagnostic: Some("no intermediate dimensions below 2".into()),
        });
    }
    let l1 = profile.lambda(1);
    let l2 = profile.lambda(2);
    let order = compare_lambdas(l1, l2);
    let lambda3_is_one = dim == 3 && profile.lambda(3).is_exactly_one();
    let criterion2_applicable = lambda3_is_one
        && matches!(map_kind, MapKind::Automorphism | MapKind::Bimeromorphic);
    let traces = if lambda3_is_one {
        analyze_fibration_cases(profile)?
    } else {
        Vec::new()
    };
    let (verdict, rule, diagnostic) = match order {
        LambdaOrder::Greater => (Verdict::Primitive, Rule::Criterion1, None),
        LambdaOrder::Less if criterion2_applicable => {
            (Verdict::Primitive, Rule::Criterion2, None)
        }
        LambdaOrder::Less => (
            Verdict::Inconclusive,
            Rule::None,
            Some(
                "lambda_1 < lambda_2 certifies primitivity only for \
                 bimeromorphic maps in dimension 3"
                    .into(),
            ),
        ),
        LambdaOrder::Equal => (
            Verdict::Inconclusive,
            Rule::None,
            Some("lambda_1 = lambda_2: the criteria are one-directional".into()),
        ),
        LambdaOrder::Undecided => (
            Verdict::Inconclusive,
            Rule::None,
            Some(
                "lambda_1 and lambda_2 could not be separated at the working \
                 tolerance; recompute with a finer tolerance"
                    .into(),
            ),
        ),
    };
    Ok(PrimitivityCertificate {
        verdict,
        rule,
        map_kind,
        dim,
        lambda1: l1.value(),
        lambda2: l2.value(),
        traces,
        diagnostic,
    })
}

/// Replays the base-dimension case analysis for a 3-dimensional profile with
/// `lambda_3 = 1`, recording each derivation step.
pub fn analyze_fibration_cases(profile: &DegreeProfile) -> Result<Vec<FibrationTrace>> {
    if profile.n != 3 {
        return Err(Error::capability(
            "fibration case analysis is implemented for dimension 3 only; \
             criterion-1 covers higher dimensions",
        ));
    }
    if !profile.lambda(3).is_exactly_one() {
        return Err(Error::invalid(
            "fibration case analysis requires lambda_3 = 1 (bimeromorphic map)",
        ));
    }
    let order = compare_lambdas(profile.lambda(1), profile.lambda(2));
    let l1 = profile.lambda(1).value();
    let l2 = profile.lambda(2).value();
    let mut traces = Vec::new();
    for dim_b in [1usize, 2] {
        let mut steps = Vec::new();
        match dim_b {
            1 => {
                steps.push("1 = lambda_3(f) = lambda_1(g) * lambda_2(f|pi)".to_string());
                steps.push(
                    "lambda_1(g) >= 1 and lambda_2(f|pi) >= 1 (relative log-concavity)"
                        .to_string(),
                );
                steps.push("lambda_1(g) = lambda_2(f|pi) = 1".to_string());
                steps.push(
                    "lambda_1(f) = max{lambda_1(g), lambda_1(f|pi)} = max{lambda_1(f|pi), 1}"
                        .to_string(),
                );
                steps.push(
                    "lambda_2(f) = max{lambda_2(f|pi), lambda_1(g)*lambda_1(f|pi), lambda_2(g)} \
                     = max{lambda_1(f|pi), 1}"
                        .to_string(),
                );
            }
            _ => {
                steps.push("1 = lambda_3(f) = lambda_2(g) * lambda_1(f|pi)".to_string());
                steps.push(
                    "lambda_2(g) >= 1 and lambda_1(f|pi) >= 1 (relative log-concavity)"
                        .to_string(),
                );
                steps.push("lambda_2(g) = lambda_1(f|pi) = 1".to_string());
                steps.push(
                    "lambda_1(f) = max{lambda_1(g), lambda_1(f|pi)} = max{lambda_1(g), 1}"
                        .to_string(),
                );
                steps.push(
                    "lambda_2(f) = max{lambda_1(g)*lambda_1(f|pi), lambda_2(g)} \
                     = max{lambda_1(g), 1}"
                        .to_string(),
                );
            }
        }
        steps.push("lambda_1(f) = lambda_2(f)".to_string());
        let conclusion = match order {
            LambdaOrder::Less | LambdaOrder::Greater => {
                steps.push(format!(
                    "profile has lambda_1 = {l1:.10} != lambda_2 = {l2:.10}: contradiction"
                ));
                Feasibility::Infeasible
            }
            LambdaOrder::Equal => {
                steps.push("profile has lambda_1 = lambda_2: no contradiction".to_string());
                Feasibility::Feasible
            }
            LambdaOrder::Undecided => {
                steps.push(
                    "lambda_1 and lambda_2 not separable at this tolerance: no conclusion"
                        .to_string(),
                );
                Feasibility::Feasible
            }
        };
        traces.push(FibrationTrace {
            dim_b,
            steps,
            conclusion,
        });
    }
    Ok(traces)
}

#[derive(Debug, Clone, Serialize)]
pub struct ImprimitivityBoundReport {
    pub lambda1: f64,
    pub lambda2: f64,
    /// `Some(true)` when `lambda_2 >= lambda_1` holds, `Some(false)` when it
    /// fails, `None` when the comparison is not separable.
    pub bound_holds: Option<bool>,
    pub holds_with_equality: bool,
    pub imprimitivity_excluded: bool,
}

/// The necessary condition `lambda_2 >= lambda_1` for imprimitive maps; its
/// failure excludes every equivariant fibration.
pub fn imprimitivity_necessary_bound(profile: &DegreeProfile) -> Result<ImprimitivityBoundReport> {
    if profile.n < 2 {
        return Err(Error::invalid("bound needs dimension >= 2"));
    }
    let l1 = profile.lambda(1);
    let l2 = profile.lambda(2);
    let order = compare_lambdas(l2, l1);
    let (bound_holds, equality) = match order {
        LambdaOrder::Greater => (Some(true), false),
        LambdaOrder::Equal => (Some(true), true),
        LambdaOrder::Less => (Some(false), false),
        LambdaOrder::Undecided => (None, false),
    };
    Ok(ImprimitivityBoundReport {
        lambda1: l1.value(),
        lambda2: l2.value(),
        bound_holds,
        holds_with_equality: equality,
        imprimitivity_excluded: bound_holds == Some(false),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degrees::degree_profile;
    use crate::torus::matrix::TorusMatrix;
    use crate::torus::ring::{RingElement, RingTag};
    use num_rational::BigRational;

    fn family_profile(a: i64) -> DegreeProfile {
        let z = |v| RingElement::from_int(v, RingTag::Integer);
        let m = TorusMatrix::new(vec![
            vec![z(0), z(1), z(0)],
            vec![z(0), z(0), z(1)],
            vec![z(-1), z(3 * a * a), z(0)],
        ])
        .unwrap();
        degree_profile(&m, &BigRational::new(1.into(), 10_000_000_000i64.into())).unwrap()
    }

    #[test]
    fn family_is_primitive_via_criterion_2() {
        let profile = family_profile(1);
        let cert = certify(&profile, MapKind::Automorphism, 3).unwrap();
        assert_eq!(cert.verdict, Verdict::Primitive);
        assert_eq!(cert.rule, Rule::Criterion2);
        assert_eq!(cert.traces.len(), 2);
        for trace in &cert.traces {
            assert_eq!(trace.conclusion, Feasibility::Infeasible);
            assert!(trace
                .steps
                .iter()
                .any(|s| s.contains("lambda_1(f) = lambda_2(f)")));
        }
        // the same profile under a dominant-meromorphic map kind stays
        // inconclusive: criterion-2 needs bimeromorphic
        let cert = certify(&profile, MapKind::DominantMeromorphic, 3).unwrap();
        assert_eq!(cert.verdict, Verdict::Inconclusive);
        assert_eq!(cert.rule, Rule::None);
    }

    #[test]
    fn synthetic_criterion_1() {
        let profile = DegreeProfile::from_values(&[1.0, 9.0, 3.0, 1.0]).unwrap();
        let cert = certify(&profile, MapKind::DominantMeromorphic, 3).unwrap();
        assert_eq!(cert.verdict, Verdict::Primitive);
        assert_eq!(cert.rule, Rule::Criterion1);
    }

    #[test]
    fn all_ones_is_inconclusive() {
        let profile = DegreeProfile::from_values(&[1.0, 1.0, 1.0, 1.0]).unwrap();
        let cert = certify(&profile, MapKind::Automorphism, 3).unwrap();
        assert_eq!(cert.verdict, Verdict::Inconclusive);
        assert_eq!(cert.rule, Rule::None);
        for trace in &cert.traces {
            assert_eq!(trace.conclusion, Feasibility::Feasible);
        }
    }

    #[test]
    fn fibration_traces_carry_forced_equalities() {
        let traces = analyze_fibration_cases(&family_profile(1)).unwrap();
        assert_eq!(traces.len(), 2);
        assert_eq!(traces[0].dim_b, 1);
        assert!(traces[0]
            .steps
            .contains(&"lambda_1(g) = lambda_2(f|pi) = 1".to_string()));
        assert_eq!(traces[1].dim_b, 2);
        assert!(traces[1]
            .steps
            .contains(&"lambda_2(g) = lambda_1(f|pi) = 1".to_string()));
        // dimension mismatch
        let p2 = DegreeProfile::from_values(&[1.0, 2.0, 1.0]).unwrap();
        assert!(matches!(
            analyze_fibration_cases(&p2),
            Err(Error::Capability(_))
        ));
        // lambda_3 != 1
        let p3 = DegreeProfile::from_values(&[1.0, 2.0, 2.0, 3.0]).unwrap();
        assert!(matches!(
            analyze_fibration_cases(&p3),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn necessary_bound_reports() {
        let rep = imprimitivity_necessary_bound(&family_profile(1)).unwrap();
        assert_eq!(rep.bound_holds, Some(true));
        assert!(!rep.imprimitivity_excluded);
        let rep = imprimitivity_necessary_bound(
            &DegreeProfile::from_values(&[1.0, 9.0, 3.0, 1.0]).unwrap(),
        )
        .unwrap();
        assert_eq!(rep.bound_holds, Some(false));
        assert!(rep.imprimitivity_excluded);
        let rep = imprimitivity_necessary_bound(
            &DegreeProfile::from_values(&[1.0, 1.0, 1.0, 1.0]).unwrap(),
        )
        .unwrap();
        assert_eq!(rep.bound_holds, Some(true));
        assert!(rep.holds_with_equality);
    }

    #[test]
    fn certificate_never_primitive_on_equal_degrees() {
        let profile = DegreeProfile::from_values(&[1.0, 4.0, 4.0, 1.0]).unwrap();
        // equal floats without exact handles: enclosures are points, compare
        // equal, verdict stays inconclusive
        let cert = certify(&profile, MapKind::Automorphism, 3).unwrap();
        assert_eq!(cert.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn dim_mismatch_rejected() {
        let profile = DegreeProfile::from_values(&[1.0, 2.0, 2.0, 1.0]).unwrap();
        assert!(certify(&profile, MapKind::Automorphism, 2).is_err());
    }
}
