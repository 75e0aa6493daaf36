//! Classification of real algebraic integers given by their minimal
//! polynomial: Salem (conjugates `a`, `1/a` and the rest on the unit
//! circle), Pisot (all other conjugates strictly inside), or neither.

use crate::error::{Error, Result};
use crate::num::discs::unit_disc_counts;
use crate::num::factor::is_irreducible;
use crate::num::poly::{palindromic_trace, IntPolynomial};
use crate::num::real_algebraic::RealAlgebraic;
use crate::num::sturm::{isolate_square_free, SturmChain};
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;
use std::cmp::Ordering;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SalemVerdict {
    Salem,
    Pisot,
    Neither,
}

#[derive(Debug, Clone)]
pub struct ClassificationEvidence {
    pub reciprocal: bool,
    pub real_roots_outside: usize,
    pub roots_on_circle: usize,
    pub roots_inside: usize,
    pub largest_root: RealAlgebraic,
    pub verdict: SalemVerdict,
    /// Set when a degree-2 reciprocal polynomial is classified Salem: the
    /// definition's "all other conjugates" clause is vacuous there, and the
    /// mainstream convention requires degree >= 4.
    pub degree_two_convention: bool,
}

/// True iff the coefficient sequence is palindromic (`x^d p(1/x) = p(x)`).
pub fn is_reciprocal(p: &IntPolynomial) -> Result<bool> {
    if p.is_zero() || !p.is_monic() {
        return Err(Error::invalid("reciprocity test expects a monic polynomial"));
    }
    Ok(p.is_palindromic())
}

/// For monic reciprocal `p` of even degree `2d`, the polynomial `q` of
/// degree `d` with `p(x) = x^d q(x + 1/x)`; unit-circle roots of `p`
/// correspond two-to-one to roots of `q` in `(-2, 2)`.
pub fn trace_polynomial(p: &IntPolynomial) -> Result<IntPolynomial> {
    match p.degree() {
        None => Err(Error::invalid("zero polynomial has no trace transform")),
        Some(d) if d % 2 == 1 => Err(Error::invalid(
            "trace transform needs even degree (odd-degree reciprocal polynomials vanish at -1)",
        )),
        Some(_) => palindromic_trace(p)
            .ok_or_else(|| Error::invalid("trace transform needs a reciprocal polynomial")),
    }
}

/// Classifies the dominant real root of a monic irreducible polynomial.
pub fn classify(p: &IntPolynomial) -> Result<ClassificationEvidence> {
    let d = p
        .degree()
        .ok_or_else(|| Error::invalid("cannot classify the zero polynomial"))?;
    if d == 0 {
        return Err(Error::invalid("cannot classify a constant polynomial"));
    }
    if !p.is_monic() {
        return Err(Error::invalid("classification expects a monic polynomial"));
    }
    if !is_irreducible(p)? {
        return Err(Error::invalid(
            "polynomial is reducible; factor it first and classify an irreducible factor",
        ));
    }
    let one = BigRational::one();
    let largest_root = isolate_square_free(p)
        .into_iter()
        .map(|iv| RealAlgebraic::new(p.clone(), iv.0, iv.1).expect("isolated root"))
        .max_by(|a, b| a.compare(b))
        .ok_or_else(|| Error::invalid("polynomial has no real root"))?;
    if largest_root.cmp_rational(&one) != Ordering::Greater {
        return Err(Error::invalid(
            "classification needs a real root greater than 1",
        ));
    }
    let counts = unit_disc_counts(p)?;
    let reciprocal = p.is_palindromic();
    let real_roots_outside = real_roots_outside_unit_interval(p);
    let is_salem = reciprocal
        && counts.inside == 1
        && counts.outside == 1
        && counts.on_circle == d.saturating_sub(2);
    let is_pisot = counts.inside == d - 1;
    let verdict = if is_salem {
        SalemVerdict::Salem
    } else if is_pisot {
        SalemVerdict::Pisot
    } else {
        SalemVerdict::Neither
    };
    Ok(ClassificationEvidence {
        reciprocal,
        real_roots_outside,
        roots_on_circle: counts.on_circle,
        roots_inside: counts.inside,
        largest_root,
        verdict,
        degree_two_convention: verdict == SalemVerdict::Salem && d == 2,
    })
}

/// Number of real roots with `|x| > 1` (irreducible inputs of degree >= 2
/// never vanish at +-1).
fn real_roots_outside_unit_interval(p: &IntPolynomial) -> usize {
    let chain = SturmChain::new(p);
    let one = BigRational::one();
    let right = chain
        .variations_at(&one)
        .saturating_sub(chain.variations_pos_inf());
    let left = chain
        .variations_neg_inf()
        .saturating_sub(chain.variations_at(&(-one.clone())));
    left + right
}
