//! JSON-facing record types. All floats are rounded half-to-even at 10
//! significant digits before serialization so identical invocations produce
//! byte-identical output.

use crate::degrees::{ConcavityCheck, DegreeProfile, Lambda, OrderReport, ProductCheckReport};
use crate::num::real_algebraic::RealAlgebraic;
use crate::primitivity::{FibrationTrace, MapKind, PrimitivityCertificate, Rule, Verdict};
use crate::salem::{ClassificationEvidence, SalemVerdict};
use serde::Serialize;

/// A float rendered at 10 significant digits (round half to even).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sig10(pub f64);

pub fn round_sig10(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.9e}").parse().unwrap_or(x)
}

impl Serialize for Sig10 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(round_sig10(self.0))
    }
}

/// Note attached to every profile: degrees transfer unchanged through
/// quotients by finite groups and their equivariant resolutions.
pub const TRANSFER_NOTE: &str = "profile applies verbatim to the automorphisms induced on \
     finite quotients and their resolutions: dynamical degrees and entropy \
     are invariant under generically finite maps";

#[derive(Debug, Clone, Serialize)]
pub struct LambdaJson {
    pub float: Sig10,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minpoly: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interval: Option<[String; 2]>,
}

impl LambdaJson {
    pub fn from_lambda(l: &Lambda, emit_exact: bool) -> Self {
        let (minpoly, interval) = match (&l.exact, emit_exact) {
            (Some(r), true) => {
                let refined = r.refined(&display_width());
                let (lo, hi) = refined.interval().clone();
                (
                    Some(r.minpoly().coeff_string()),
                    Some([lo.to_string(), hi.to_string()]),
                )
            }
            _ => (None, None),
        };
        LambdaJson {
            float: Sig10(l.value()),
            minpoly,
            interval,
        }
    }
}

/// Fixed interval width for serialized handles; independent of the working
/// tolerance so output stays byte-reproducible.
fn display_width() -> num_rational::BigRational {
    num_rational::BigRational::new(1.into(), num_bigint::BigInt::from(10u64.pow(12)))
}

#[derive(Debug, Clone, Serialize)]
pub struct ProfileJson {
    pub n: usize,
    pub lambda: Vec<LambdaJson>,
    pub entropy: Sig10,
    pub transfer_note: &'static str,
}

impl ProfileJson {
    pub fn from_profile(p: &DegreeProfile, emit_exact: bool) -> Self {
        ProfileJson {
            n: p.n,
            lambda: p
                .lambdas
                .iter()
                .map(|l| LambdaJson::from_lambda(l, emit_exact))
                .collect(),
            entropy: Sig10(p.entropy),
            transfer_note: TRANSFER_NOTE,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateJson {
    pub verdict: Verdict,
    pub rule: Rule,
    pub map_kind: MapKind,
    pub dim: usize,
    pub lambda1: Sig10,
    pub lambda2: Sig10,
    pub traces: Vec<FibrationTrace>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

impl CertificateJson {
    pub fn from_certificate(c: &PrimitivityCertificate, emit_traces: bool) -> Self {
        CertificateJson {
            verdict: c.verdict,
            rule: c.rule,
            map_kind: c.map_kind,
            dim: c.dim,
            lambda1: Sig10(c.lambda1),
            lambda2: Sig10(c.lambda2),
            traces: if emit_traces {
                c.traces.clone()
            } else {
                Vec::new()
            },
            diagnostic: c.diagnostic.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AlgebraicJson {
    pub minpoly: String,
    pub interval: [String; 2],
    pub float: Sig10,
}

impl AlgebraicJson {
    pub fn from_handle(r: &RealAlgebraic) -> Self {
        let refined = r.refined(&display_width());
        let (lo, hi) = refined.interval().clone();
        AlgebraicJson {
            minpoly: r.minpoly().coeff_string(),
            interval: [lo.to_string(), hi.to_string()],
            float: Sig10(r.to_f64()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationJson {
    pub verdict: SalemVerdict,
    pub reciprocal: bool,
    pub roots_inside: usize,
    pub roots_on_circle: usize,
    pub real_roots_outside: usize,
    pub largest_root: AlgebraicJson,
    pub degree_two_convention: bool,
}

impl ClassificationJson {
    pub fn from_evidence(e: &ClassificationEvidence) -> Self {
        ClassificationJson {
            verdict: e.verdict,
            reciprocal: e.reciprocal,
            roots_inside: e.roots_inside,
            roots_on_circle: e.roots_on_circle,
            real_roots_outside: e.real_roots_outside,
            largest_root: AlgebraicJson::from_handle(&e.largest_root),
            degree_two_convention: e.degree_two_convention,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OrderJson {
    pub order: Option<usize>,
    pub bound: usize,
    pub infinite_certified: bool,
}

impl OrderJson {
    pub fn from_report(r: &OrderReport) -> Self {
        OrderJson {
            order: r.order,
            bound: r.bound,
            infinite_certified: r.infinite_certified,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeBundle {
    pub matrix: String,
    pub ring: &'static str,
    pub profile: ProfileJson,
    pub entropy: Sig10,
    pub primitivity: CertificateJson,
    /// Classification of lambda_1's minimal polynomial; absent when
    /// lambda_1 has no exact handle or is not > 1.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub salem: Option<ClassificationJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub salem_note: Option<String>,
    pub finite_order: OrderJson,
    pub log_concavity: Vec<ConcavityCheck>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SignTableJson {
    pub at_minus_a: String,
    pub at_zero: String,
    pub at_one: String,
    pub at_a: String,
    pub signs_ok: bool,
    pub closed_forms_ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanRowJson {
    pub a: i64,
    pub phi: String,
    pub irreducible: bool,
    pub sign_table: SignTableJson,
    pub lambda1: LambdaJson,
    pub lambda2: LambdaJson,
    pub entropy: Sig10,
    pub degrees_strictly_ordered: bool,
    pub primitive: Verdict,
    pub rule: Rule,
    pub salem: SalemVerdict,
    pub row_ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub family: &'static str,
    pub rows: Vec<ScanRowJson>,
    pub all_ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SymbolicCheckJson {
    pub name: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SymbolicReport {
    pub checks: Vec<SymbolicCheckJson>,
    pub all_passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProductCheckJson {
    pub rows: Vec<ProductRowJson>,
    pub all_agree: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProductRowJson {
    pub p: usize,
    pub lhs: Sig10,
    pub rhs: Sig10,
    pub agree: bool,
}

impl ProductCheckJson {
    pub fn from_report(r: &ProductCheckReport) -> Self {
        ProductCheckJson {
            all_agree: r.all_agree(),
            rows: r
                .rows
                .iter()
                .map(|row| ProductRowJson {
                    p: row.p,
                    lhs: Sig10(row.lhs),
                    rhs: Sig10(row.rhs),
                    agree: row.agree,
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig10_rounding() {
        assert_eq!(round_sig10(3.532088886237956), 3.532088886);
        assert_eq!(round_sig10(8.290859369381591), 8.290859369);
        assert_eq!(round_sig10(0.0), 0.0);
        assert_eq!(round_sig10(-2.1151536271498714), -2.115153627);
        // already short values unchanged
        assert_eq!(round_sig10(1.0), 1.0);
        assert_eq!(round_sig10(0.5), 0.5);
    }

    #[test]
    fn sig10_serialization_is_deterministic() {
        let v = serde_json::to_string(&Sig10(3.532088886237956)).unwrap();
        assert_eq!(v, "3.532088886");
        let v = serde_json::to_string(&Sig10(1.0)).unwrap();
        assert_eq!(v, "1.0");
    }
}
