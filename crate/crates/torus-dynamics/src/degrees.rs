//! Dynamical-degree profiles: for an automorphism of `E^n` given by a torus
//! matrix, the degree `lambda_p` is the spectral radius of the induced action
//! on degree-`2p` cohomology, i.e. the maximum root modulus of the
//! characteristic polynomial of the `2p`-th exterior power of the realified
//! matrix. Small exterior powers are handled exactly; past the dimension
//! bound the same values are obtained as products of the largest eigenvalue
//! moduli.

use crate::error::{Error, Result};
use crate::num::maxmod::{all_roots_numeric, max_modulus_root, Enclosure};
use crate::num::real_algebraic::RealAlgebraic;
use crate::torus::matrix::{IntegerMatrix, TorusMatrix};
use num_rational::BigRational;
use std::cmp::Ordering;

/// Largest exterior-power dimension handled through exact characteristic
/// polynomials; larger profiles switch to certified eigenvalue-modulus
/// products.
pub const EXACT_DIM_BOUND: usize = 70;

/// One dynamical degree: a certified enclosure plus an exact handle whenever
/// the attaining root is real.
#[derive(Debug, Clone)]
pub struct Lambda {
    pub enclosure: Enclosure,
    pub exact: Option<RealAlgebraic>,
}

impl Lambda {
    pub fn exact_one() -> Self {
        Lambda {
            enclosure: Enclosure::point(1.0),
            exact: Some(RealAlgebraic::from_integer(1)),
        }
    }

    pub fn from_float(v: f64) -> Self {
        Lambda {
            enclosure: Enclosure::point(v),
            exact: None,
        }
    }

    /// Representative float value.
    pub fn value(&self) -> f64 {
        match &self.exact {
            Some(r) => r.to_f64(),
            None => self.enclosure.mid(),
        }
    }

    pub fn is_exactly_one(&self) -> bool {
        match &self.exact {
            Some(r) => r.cmp_rational(&BigRational::from_integer(1.into())) == Ordering::Equal,
            None => self.enclosure.lo == 1.0 && self.enclosure.hi == 1.0,
        }
    }
}

/// Ordering of two degrees, decided by disjoint enclosures first and exact
/// handles second; `Undecided` is reported rather than guessed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LambdaOrder {
    Less,
    Equal,
    Greater,
    Undecided,
}

pub fn compare_lambdas(a: &Lambda, b: &Lambda) -> LambdaOrder {
    if let (Some(x), Some(y)) = (&a.exact, &b.exact) {
        return match x.compare(y) {
            Ordering::Less => LambdaOrder::Less,
            Ordering::Equal => LambdaOrder::Equal,
            Ordering::Greater => LambdaOrder::Greater,
        };
    }
    if a.enclosure.lt(&b.enclosure) {
        return LambdaOrder::Less;
    }
    if b.enclosure.lt(&a.enclosure) {
        return LambdaOrder::Greater;
    }
    if a.enclosure.width() == 0.0
        && b.enclosure.width() == 0.0
        && a.enclosure.lo == b.enclosure.lo
    {
        return LambdaOrder::Equal;
    }
    LambdaOrder::Undecided
}

/// The full profile `lambda_0..lambda_n` with the entropy.
#[derive(Debug, Clone)]
pub struct DegreeProfile {
    pub n: usize,
    pub lambdas: Vec<Lambda>,
    pub entropy: f64,
}

impl DegreeProfile {
    /// Builds a synthetic profile from plain float values (used by negative
    /// controls and rule-level checks; no exact handles attached except for
    /// exact ones).
    pub fn from_values(values: &[f64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::invalid("profile needs at least lambda_0"));
        }
        let lambdas: Vec<Lambda> = values
            .iter()
            .map(|&v| {
                if v == 1.0 {
                    Lambda::exact_one()
                } else {
                    Lambda::from_float(v)
                }
            })
            .collect();
        let entropy = entropy_of_lambdas(&lambdas);
        Ok(DegreeProfile {
            n: values.len() - 1,
            lambdas,
            entropy,
        })
    }

    pub fn lambda(&self, p: usize) -> &Lambda {
        &self.lambdas[p]
    }

    pub fn max_lambda_value(&self) -> f64 {
        self.lambdas
            .iter()
            .map(|l| l.value())
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Natural log of the maximal degree; exactly zero when every degree is 1.
pub fn entropy_of(profile: &DegreeProfile) -> f64 {
    entropy_of_lambdas(&profile.lambdas)
}

fn entropy_of_lambdas(lambdas: &[Lambda]) -> f64 {
    if lambdas.iter().all(|l| l.is_exactly_one()) {
        return 0.0;
    }
    let max = lambdas
        .iter()
        .map(|l| l.value())
        .fold(f64::NEG_INFINITY, f64::max);
    max.ln().max(0.0)
}

/// Computes the degree profile of a torus automorphism.
pub fn degree_profile(m: &TorusMatrix, tol: &BigRational) -> Result<DegreeProfile> {
    if !m.is_automorphism() {
        return Err(Error::invalid(
            "matrix is not an automorphism (determinant is not a unit); \
             finite topological degree > 1 is out of scope",
        ));
    }
    if tol <= &BigRational::from_integer(0.into()) {
        return Err(Error::invalid("tolerance must be positive"));
    }
    let n = m.dim();
    let real = m.realify();
    let mut moduli_cache: Option<Vec<(f64, f64)>> = None;
    let mut lambdas = Vec::with_capacity(n + 1);
    for p in 0..=n {
        let k = 2 * p;
        let dim = binomial(2 * n, k);
        if p == 0 || p == n {
            // unit topological degree at both ends for automorphisms
            lambdas.push(Lambda::exact_one());
        } else if dim <= EXACT_DIM_BOUND {
            let wedge = real.exterior_power(k)?;
            let cp = wedge.char_poly();
            let (enclosure, handle) = max_modulus_root(&cp, tol)?;
            let exact = match handle {
                Some(h) => Some(h.with_irreducible_minpoly()),
                None => None,
            };
            lambdas.push(Lambda { enclosure, exact });
        } else {
            let moduli =
                moduli_cache.get_or_insert_with(|| eigen_moduli_with_multiplicity(&real));
            lambdas.push(lambda_from_moduli(moduli, k));
        }
    }
    let entropy = entropy_of_lambdas(&lambdas);
    Ok(DegreeProfile {
        n,
        lambdas,
        entropy,
    })
}

/// Eigenvalue moduli of an integer matrix with multiplicity, as
/// `(modulus, error radius)` pairs.
fn eigen_moduli_with_multiplicity(m: &IntegerMatrix) -> Vec<(f64, f64)> {
    let cp = m.char_poly();
    let mut out = Vec::with_capacity(m.dim());
    for (factor, mult) in cp.square_free_decomposition() {
        let (core, zeros) = factor.strip_zero_roots();
        for _ in 0..zeros * mult {
            out.push((0.0, 0.0));
        }
        if core.degree().map_or(true, |d| d == 0) {
            continue;
        }
        for (z, radius) in all_roots_numeric(&core) {
            for _ in 0..mult {
                out.push((z.norm(), radius));
            }
        }
    }
    out
}

/// `lambda` as the product of the top `k` eigenvalue moduli.
fn lambda_from_moduli(moduli: &[(f64, f64)], k: usize) -> Lambda {
    let mut lows: Vec<f64> = moduli.iter().map(|(m, r)| (m - r).max(0.0)).collect();
    let mut highs: Vec<f64> = moduli.iter().map(|(m, r)| m + r).collect();
    lows.sort_by(|a, b| b.partial_cmp(a).unwrap());
    highs.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let lo: f64 = lows.iter().take(k).product();
    let hi: f64 = highs.iter().take(k).product();
    Lambda {
        enclosure: Enclosure { lo, hi },
        exact: None,
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

// ---------------------------------------------------------------------------
// log-concavity
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConcavityVerdict {
    Holds,
    Violated,
    Undecided,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct ConcavityCheck {
    pub p: usize,
    pub verdict: ConcavityVerdict,
}

/// Checks `lambda_{p-1} * lambda_{p+1} <= lambda_p^2` at every interior `p`,
/// using exact handles when available and enclosure arithmetic otherwise.
pub fn check_log_concavity(profile: &DegreeProfile) -> Vec<ConcavityCheck> {
    let mut out = Vec::new();
    for p in 1..profile.n {
        let left = &profile.lambdas[p - 1];
        let mid = &profile.lambdas[p];
        let right = &profile.lambdas[p + 1];
        let lhs_enc = left.enclosure.mul(&right.enclosure);
        let rhs_enc = mid.enclosure.mul(&mid.enclosure);
        let verdict = if lhs_enc.hi <= rhs_enc.lo {
            ConcavityVerdict::Holds
        } else if lhs_enc.lo > rhs_enc.hi {
            ConcavityVerdict::Violated
        } else if let (Some(a), Some(b), Some(c)) = (&left.exact, &mid.exact, &right.exact) {
            let lhs = a.mul(c);
            let rhs = b.square();
            match lhs.compare(&rhs) {
                Ordering::Greater => ConcavityVerdict::Violated,
                _ => ConcavityVerdict::Holds,
            }
        } else if lhs_enc.lo == lhs_enc.hi
            && rhs_enc.lo == rhs_enc.hi
            && lhs_enc.lo == rhs_enc.lo
        {
            ConcavityVerdict::Holds
        } else {
            ConcavityVerdict::Undecided
        };
        out.push(ConcavityCheck { p, verdict });
    }
    out
}

// ---------------------------------------------------------------------------
// product formula
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, serde::Serialize)]
pub struct ProductCheckRow {
    pub p: usize,
    pub lhs: f64,
    pub rhs: f64,
    pub agree: bool,
    pub tolerance: f64,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct ProductCheckReport {
    pub rows: Vec<ProductCheckRow>,
}

impl ProductCheckReport {
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(|r| r.agree)
    }
}

/// Verifies `lambda_p(g x h) = max_j lambda_j(g) * lambda_{p-j}(h)` for the
/// block-diagonal product map.
pub fn verify_product_formula(
    g: &TorusMatrix,
    h: &TorusMatrix,
    tol: &BigRational,
) -> Result<ProductCheckReport> {
    if g.tag() != h.tag() {
        return Err(Error::invalid("product blocks must share a ring"));
    }
    if !g.is_automorphism() || !h.is_automorphism() {
        return Err(Error::invalid("product blocks must be automorphisms"));
    }
    let f = block_diag(g, h);
    let pf = degree_profile(&f, tol)?;
    let pg = degree_profile(g, tol)?;
    let ph = degree_profile(h, tol)?;
    let (ng, nh) = (g.dim(), h.dim());
    let tol_f = rational_to_f64(tol).max(1e-9);
    let mut rows = Vec::new();
    for p in 0..=pf.n {
        let lhs = pf.lambda(p).value();
        let j_min = p.saturating_sub(nh);
        let j_max = p.min(ng);
        let mut rhs = f64::NEG_INFINITY;
        let mut exact_match = false;
        for j in j_min..=j_max {
            let prod = pg.lambda(j).value() * ph.lambda(p - j).value();
            if prod > rhs {
                rhs = prod;
            }
            if let (Some(a), Some(b), Some(c)) =
                (&pf.lambda(p).exact, &pg.lambda(j).exact, &ph.lambda(p - j).exact)
            {
                if a.compare(&b.mul(c)) == Ordering::Equal {
                    exact_match = true;
                }
            }
        }
        let agree = exact_match || (lhs - rhs).abs() <= tol_f;
        rows.push(ProductCheckRow {
            p,
            lhs,
            rhs,
            agree,
            tolerance: tol_f,
        });
    }
    Ok(ProductCheckReport { rows })
}

/// Block-diagonal join of two torus matrices over the same ring.
pub fn block_diag(g: &TorusMatrix, h: &TorusMatrix) -> TorusMatrix {
    assert_eq!(g.tag(), h.tag());
    let n = g.dim() + h.dim();
    let mut rows = Vec::with_capacity(n);
    for i in 0..g.dim() {
        let mut row = Vec::with_capacity(n);
        for j in 0..g.dim() {
            row.push(g.get(i, j).clone());
        }
        for _ in 0..h.dim() {
            row.push(crate::torus::ring::RingElement::zero(g.tag()));
        }
        rows.push(row);
    }
    for i in 0..h.dim() {
        let mut row = Vec::with_capacity(n);
        for _ in 0..g.dim() {
            row.push(crate::torus::ring::RingElement::zero(g.tag()));
        }
        for j in 0..h.dim() {
            row.push(h.get(i, j).clone());
        }
        rows.push(row);
    }
    TorusMatrix::new(rows).expect("blocks share a ring")
}

/// Certified-infinite order report: the order search combined with the
/// degree test (`lambda_1 > 1` forces infinite order).
#[derive(Debug, Clone, serde::Serialize)]
pub struct OrderReport {
    pub order: Option<usize>,
    pub bound: usize,
    pub infinite_certified: bool,
}

pub fn finite_order_certified(
    m: &TorusMatrix,
    bound: usize,
    profile: &DegreeProfile,
) -> Result<OrderReport> {
    let order = m.finite_order(bound)?;
    let infinite_certified = order.is_none()
        && profile.lambdas.iter().any(|l| match &l.exact {
            Some(r) => r.cmp_rational(&BigRational::from_integer(1.into())) == Ordering::Greater,
            None => l.enclosure.lo > 1.0,
        });
    Ok(OrderReport {
        order,
        bound,
        infinite_certified,
    })
}

fn rational_to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::poly::IntPolynomial;
    use crate::torus::ring::{RingElement, RingTag};

    fn companion_a(a: i64) -> TorusMatrix {
        let z = |v| RingElement::from_int(v, RingTag::Integer);
        TorusMatrix::new(vec![
            vec![z(0), z(1), z(0)],
            vec![z(0), z(0), z(1)],
            vec![z(-1), z(3 * a * a), z(0)],
        ])
        .unwrap()
    }

    fn default_tol() -> BigRational {
        BigRational::new(1.into(), 10_000_000_000i64.into())
    }

    #[test]
    fn entropy_family_profile_anchor() {
        let profile = degree_profile(&companion_a(1), &default_tol()).unwrap();
        assert_eq!(profile.n, 3);
        assert!(profile.lambdas[0].is_exactly_one());
        assert!(profile.lambdas[3].is_exactly_one());
        let l1 = profile.lambda(1);
        let l2 = profile.lambda(2);
        assert!((l1.value() - 3.5320888862379560).abs() < 1e-9);
        assert!((l2.value() - 8.2908593693815914).abs() < 1e-9);
        // exact handles with the expected minimal polynomials
        let h1 = l1.exact.as_ref().unwrap();
        assert_eq!(h1.minpoly(), &IntPolynomial::from_i64(&[-1, 9, -6, 1]));
        let h2 = l2.exact.as_ref().unwrap();
        assert_eq!(h2.minpoly(), &IntPolynomial::from_i64(&[-1, 6, -9, 1]));
        // lambda_2 > lambda_1 > 1 decided exactly
        assert_eq!(compare_lambdas(l2, l1), LambdaOrder::Greater);
        assert_eq!(
            h1.cmp_rational(&BigRational::from_integer(1.into())),
            Ordering::Greater
        );
        assert!((profile.entropy - 8.2908593693815914f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn identity_profile_is_flat() {
        let id = TorusMatrix::identity(3, RingTag::Eisenstein);
        let profile = degree_profile(&id, &default_tol()).unwrap();
        assert!(profile.lambdas.iter().all(|l| l.is_exactly_one()));
        assert_eq!(profile.entropy, 0.0);
        assert_eq!(entropy_of(&profile), 0.0);
    }

    #[test]
    fn finite_order_profile_is_flat() {
        let mw = RingElement::from_parts(0, -1, RingTag::Eisenstein).unwrap();
        let m = TorusMatrix::diagonal(&[mw.clone(), mw.clone(), mw]).unwrap();
        let profile = degree_profile(&m, &default_tol()).unwrap();
        for l in &profile.lambdas {
            assert!(l.is_exactly_one(), "{l:?}");
        }
        assert_eq!(profile.entropy, 0.0);
        let report = finite_order_certified(&m, 120, &profile).unwrap();
        assert_eq!(report.order, Some(6));
        let report = finite_order_certified(&companion_a(1), 120, &degree_profile(&companion_a(1), &default_tol()).unwrap()).unwrap();
        assert_eq!(report.order, None);
        assert!(report.infinite_certified);
    }

    #[test]
    fn non_automorphism_rejected() {
        let z = |v| RingElement::from_int(v, RingTag::Integer);
        let m = TorusMatrix::diagonal(&[z(2), z(1), z(1)]).unwrap();
        assert!(degree_profile(&m, &default_tol()).is_err());
    }

    #[test]
    fn log_concavity_on_family_and_synthetic() {
        let profile = degree_profile(&companion_a(1), &default_tol()).unwrap();
        let checks = check_log_concavity(&profile);
        assert_eq!(checks.len(), 2);
        assert!(checks.iter().all(|c| c.verdict == ConcavityVerdict::Holds));
        // synthetic violation at p = 1: 1 * 5 > 2^2
        let bad = DegreeProfile::from_values(&[1.0, 2.0, 5.0, 1.0]).unwrap();
        let checks = check_log_concavity(&bad);
        assert_eq!(checks[0].verdict, ConcavityVerdict::Violated);
        // all-ones holds everywhere
        let flat = DegreeProfile::from_values(&[1.0, 1.0, 1.0, 1.0]).unwrap();
        assert!(check_log_concavity(&flat)
            .iter()
            .all(|c| c.verdict == ConcavityVerdict::Holds));
    }

    #[test]
    fn product_formula_identity_and_family() {
        let tol = default_tol();
        let id2 = TorusMatrix::identity(2, RingTag::Integer);
        let id3 = TorusMatrix::identity(3, RingTag::Integer);
        let rep = verify_product_formula(&id2, &id3, &tol).unwrap();
        assert!(rep.all_agree());
        for row in &rep.rows {
            assert!((row.lhs - 1.0).abs() < 1e-9);
            assert!((row.rhs - 1.0).abs() < 1e-9);
        }
        // G = [[2,1],[1,1]], H = the a=1 family matrix
        let z = |v| RingElement::from_int(v, RingTag::Integer);
        let g = TorusMatrix::new(vec![vec![z(2), z(1)], vec![z(1), z(1)]]).unwrap();
        let rep = verify_product_formula(&g, &companion_a(1), &tol).unwrap();
        assert!(rep.all_agree());
        // lambda_1(f) = max(lambda_1(G), lambda_1(H)) = ((3+sqrt5)/2)^2
        let expected = ((3.0 + 5f64.sqrt()) / 2.0).powi(2);
        assert!((rep.rows[1].lhs - expected).abs() < 1e-6, "{}", rep.rows[1].lhs);
        // G = H = family: lambda_2(f) = lambda_1^2 = 12.4757
        let rep = verify_product_formula(&companion_a(1), &companion_a(1), &tol).unwrap();
        assert!(rep.all_agree());
        let l1 = 3.5320888862379560f64;
        assert!((rep.rows[2].lhs - l1 * l1).abs() < 1e-6);
        // mismatched rings rejected
        let idw = TorusMatrix::identity(2, RingTag::Eisenstein);
        assert!(verify_product_formula(&idw, &id2, &tol).is_err());
    }

    #[test]
    fn inverse_reverses_profile() {
        let tol = default_tol();
        let m = companion_a(2);
        let pm = degree_profile(&m, &tol).unwrap();
        let pinv = degree_profile(&m.inverse().unwrap(), &tol).unwrap();
        for p in 0..=3 {
            match (&pinv.lambda(p).exact, &pm.lambda(3 - p).exact) {
                (Some(a), Some(b)) => assert_eq!(a.compare(b), Ordering::Equal),
                _ => {
                    let d = (pinv.lambda(p).value() - pm.lambda(3 - p).value()).abs();
                    assert!(d < 1e-8);
                }
            }
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(6, 2), 15);
        assert_eq!(binomial(12, 6), 924);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(4, 5), 0);
    }
}
