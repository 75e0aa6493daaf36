//! Certified maximum root modulus.
//!
//! The real candidate is isolated and refined exactly; a single disc count
//! at the refined radius decides whether any complex root reaches further.
//! When one does, the modulus is bracketed by exact bisection on the radius.
//! A floating-point Aberth solver is kept alongside for the large-dimension
//! paths where exact exterior powers are out of reach.

use crate::error::{Error, Result};
use crate::num::discs::disc_counts_radius;
use crate::num::poly::IntPolynomial;
use crate::num::real_algebraic::RealAlgebraic;
use crate::num::sturm::isolate_square_free;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// A floating enclosure of a nonnegative real quantity, rounded outward.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Enclosure {
    pub lo: f64,
    pub hi: f64,
}

impl Enclosure {
    pub fn from_rationals(lo: &BigRational, hi: &BigRational) -> Self {
        let lo_f = lo.to_f64().unwrap_or(0.0);
        let hi_f = hi.to_f64().unwrap_or(f64::INFINITY);
        Enclosure {
            lo: step_down(lo_f).max(0.0),
            hi: step_up(hi_f),
        }
    }

    pub fn point(v: f64) -> Self {
        Enclosure { lo: v, hi: v }
    }

    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn mul(&self, other: &Enclosure) -> Enclosure {
        // nonnegative quantities
        Enclosure {
            lo: step_down(self.lo * other.lo).max(0.0),
            hi: step_up(self.hi * other.hi),
        }
    }

    /// Definitely-less-than: the whole enclosure sits below the other.
    pub fn lt(&self, other: &Enclosure) -> bool {
        self.hi < other.lo
    }
}

fn step_up(x: f64) -> f64 {
    if x.is_finite() {
        f64::from_bits(if x >= 0.0 { x.to_bits() + 4 } else { x.to_bits() - 4 })
    } else {
        x
    }
}

fn step_down(x: f64) -> f64 {
    if x.is_finite() && x != 0.0 {
        f64::from_bits(if x > 0.0 { x.to_bits() - 4 } else { x.to_bits() + 4 })
    } else {
        x
    }
}

/// Certified enclosure of the maximum root modulus of `p`, with the exact
/// handle of the root attaining it whenever that root is real.
pub fn max_modulus_root(
    p: &IntPolynomial,
    tol: &BigRational,
) -> Result<(Enclosure, Option<RealAlgebraic>)> {
    if p.degree().map_or(true, |d| d == 0) {
        return Err(Error::invalid(
            "max modulus root needs a nonconstant polynomial",
        ));
    }
    if tol <= &BigRational::zero() {
        return Err(Error::invalid("tolerance must be positive"));
    }
    let sf = p.square_free_part();
    let (core, zeros) = sf.strip_zero_roots();
    if core.degree().map_or(true, |d| d == 0) {
        // all roots are zero
        debug_assert!(zeros > 0);
        let zero = RealAlgebraic::from_rational(BigRational::zero());
        return Ok((Enclosure::point(0.0), Some(zero)));
    }
    let core = core.primitive_part();

    // exact real candidate with the largest modulus
    let real_intervals = isolate_square_free(&core);
    let real_max = real_intervals
        .iter()
        .map(|iv| {
            RealAlgebraic::new(core.clone(), iv.0.clone(), iv.1.clone())
                .expect("isolation produces valid handles")
        })
        .map(|r| {
            let a = r.abs();
            (a, r)
        })
        .max_by(|(a, _), (b, _)| a.compare(b));

    let quarter_tol = tol / BigRational::from_integer(4.into());
    if let Some((abs_val, root)) = real_max {
        if let Some(q) = abs_val.as_rational() {
            // rational modulus: one exact disc count settles everything
            let counts = disc_counts_radius(&core, &q)?;
            if counts.outside == 0 {
                return Ok((Enclosure::from_rationals(&q, &q), Some(root)));
            }
            let enc = bisect_radius(&core, q, tol)?;
            return Ok(finish_complex(&core, enc));
        }
        let mut refined_abs = abs_val.refined(&quarter_tol);
        // up to a few refinement rounds to certify that no complex root
        // reaches past the real candidate
        for _round in 0..8 {
            if let Some(q) = refined_abs.as_rational() {
                // refinement pinned the modulus to a rational point
                let counts = disc_counts_radius(&core, &q)?;
                if counts.outside == 0 {
                    return Ok((Enclosure::from_rationals(&q, &q), Some(root)));
                }
                let enc = bisect_radius(&core, q, tol)?;
                return Ok(finish_complex(&core, enc));
            }
            let (a, b) = refined_abs.interval().clone();
            let counts_b = disc_counts_radius(&core, &b)?;
            if counts_b.outside + counts_b.on_circle > 0 {
                // something reaches at least b > |real max|: complex argmax
                let enc = bisect_radius(&core, b, tol)?;
                return Ok(finish_complex(&core, enc));
            }
            // max modulus lies in (a, b); decide whether a complex root
            // also lands there: exact count of real roots with |x| > a
            // versus all roots with modulus >= a
            if core.sign_at(&a) != 0 && core.sign_at(&(-a.clone())) != 0 {
                let big_real = count_real_roots_beyond(&core, &a);
                let counts_a = disc_counts_radius(&core, &a)?;
                if counts_a.outside + counts_a.on_circle == big_real {
                    // every root at modulus >= a is real, so the maximum is
                    // attained by the isolated real root
                    return Ok((Enclosure::from_rationals(&a, &b), Some(root)));
                }
            }
            let w = (&b - &a) / BigRational::from_integer(4.into());
            refined_abs = refined_abs.refined(&w);
        }
        // ambiguous within the refinement budget; the enclosure stays valid,
        // exactness is just not claimed
        let (a, b) = refined_abs.interval().clone();
        let counts_b = disc_counts_radius(&core, &b)?;
        if counts_b.outside + counts_b.on_circle > 0 {
            let enc = bisect_radius(&core, b, tol)?;
            return Ok(finish_complex(&core, enc));
        }
        return Ok((Enclosure::from_rationals(&a, &b), None));
    }

    // no real roots at all
    let enc = bisect_radius(&core, BigRational::zero(), tol)?;
    Ok(finish_complex(&core, enc))
}

/// Exact number of real roots of `p` with `|x| > a`; requires `p(+-a) != 0`.
fn count_real_roots_beyond(p: &IntPolynomial, a: &BigRational) -> usize {
    use crate::num::sturm::SturmChain;
    let chain = SturmChain::new(p);
    let right = chain
        .variations_at(a)
        .saturating_sub(chain.variations_pos_inf());
    let left = chain
        .variations_neg_inf()
        .saturating_sub(chain.variations_at(&(-a.clone())));
    left + right
}

fn finish_complex(
    core: &IntPolynomial,
    enc: (BigRational, BigRational),
) -> (Enclosure, Option<RealAlgebraic>) {
    let (lo, hi) = enc;
    if lo == hi {
        // the modulus is exactly this rational; attach a handle if the
        // attaining root is real
        for cand in [lo.clone(), -lo.clone()] {
            if core.sign_at(&cand) == 0 {
                let handle = RealAlgebraic::from_rational(cand);
                return (Enclosure::from_rationals(&lo, &hi), Some(handle));
            }
        }
    }
    (Enclosure::from_rationals(&lo, &hi), None)
}

/// Brackets the maximum modulus in `[lo, hi]` by exact disc counts; `lo` is
/// a known lower bound (some root modulus >= lo).
fn bisect_radius(
    p: &IntPolynomial,
    mut lo: BigRational,
    tol: &BigRational,
) -> Result<(BigRational, BigRational)> {
    let mut hi = p.cauchy_bound().ceil();
    let two = BigRational::from_integer(2.into());
    debug_assert!(lo < hi);
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / &two;
        let counts = disc_counts_radius(p, &mid)?;
        if counts.outside == 0 && counts.on_circle == 0 {
            hi = mid;
        } else if counts.outside == 0 && counts.on_circle > 0 {
            // the maximum modulus equals mid exactly
            return Ok((mid.clone(), mid));
        } else {
            lo = mid;
        }
    }
    Ok((lo, hi))
}

/// All roots of `p` by Aberth-Ehrlich iteration in double precision, with a
/// conservative a-posteriori error radius per root. Intended for square-free
/// inputs of desk-scale degree.
pub fn all_roots_numeric(p: &IntPolynomial) -> Vec<(Complex64, f64)> {
    let d = match p.degree() {
        None | Some(0) => return Vec::new(),
        Some(d) => d,
    };
    let coeffs: Vec<f64> = p.coeffs().iter().map(|c| big_f64(c)).collect();
    let scale = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let coeffs: Vec<f64> = coeffs.iter().map(|c| c / scale).collect();
    let lead = coeffs[d];
    let bound = 1.0
        + coeffs[..d]
            .iter()
            .fold(0.0f64, |m, c| m.max((c / lead).abs()));
    // initial guesses spread on a circle, slightly irrational angle step
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * (k as f64) / (d as f64) + 0.41;
            Complex64::from_polar(0.7 * bound, angle)
        })
        .collect();
    let eval = |x: Complex64| -> (Complex64, Complex64) {
        let mut v = Complex64::new(0.0, 0.0);
        let mut dv = Complex64::new(0.0, 0.0);
        for c in coeffs.iter().rev() {
            dv = dv * x + v;
            v = v * x + c;
        }
        (v, dv)
    };
    for _ in 0..200 {
        let mut moved = 0.0f64;
        for i in 0..d {
            let (v, dv) = eval(z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let newton = if dv.norm() > 0.0 { v / dv } else { v };
            let mut repel = Complex64::new(0.0, 0.0);
            for j in 0..d {
                if j != i {
                    let diff = z[i] - z[j];
                    if diff.norm() > 1e-300 {
                        repel += Complex64::new(1.0, 0.0) / diff;
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repel;
            let step = if denom.norm() > 1e-300 {
                newton / denom
            } else {
                newton
            };
            z[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-15 * bound.max(1.0) {
            break;
        }
    }
    // a posteriori radius: d * |p(z_i)| / |lc * prod_{j != i} (z_i - z_j)|,
    // padded for evaluation rounding
    let mut out = Vec::with_capacity(d);
    for i in 0..d {
        let (v, _) = eval(z[i]);
        let mut prod = lead.abs();
        for j in 0..d {
            if j != i {
                prod *= (z[i] - z[j]).norm();
            }
        }
        let eval_err = eval_error_bound(&coeffs, z[i].norm());
        let radius = if prod > 0.0 {
            (d as f64) * (v.norm() + eval_err) / prod
        } else {
            f64::INFINITY
        };
        out.push((z[i], radius));
    }
    out
}

/// Upper bound on the rounding error of Horner evaluation at modulus `r`.
fn eval_error_bound(coeffs: &[f64], r: f64) -> f64 {
    let mut acc = 0.0f64;
    for c in coeffs.iter().rev() {
        acc = acc * r + c.abs();
    }
    2.0 * (coeffs.len() as f64) * f64::EPSILON * acc
}

fn big_f64(c: &num_bigint::BigInt) -> f64 {
    c.to_f64().unwrap_or(if c.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    fn tol(num: i64, den: i64) -> BigRational {
        BigRational::new(num.into(), den.into())
    }

    #[test]
    fn cubic_family_max_modulus() {
        // x^3 - 3x + 1: max modulus |alpha| ~ 1.879385241571817
        let phi = p(&[1, -3, 0, 1]);
        let t = tol(1, 1_000_000_000_000);
        let (enc, handle) = max_modulus_root(&phi, &t).unwrap();
        assert!(enc.width() <= 1.1e-12);
        assert!(enc.contains(1.8793852415718167));
        let h = handle.expect("real argmax");
        assert!(h.to_f64() < 0.0, "attaining root is negative");
        // squared multiplicity does not change the value
        let (enc2, handle2) = max_modulus_root(&phi.mul(&phi), &t).unwrap();
        assert!(handle2.is_some());
        assert!((enc2.mid() - enc.mid()).abs() < 1e-11);
    }

    #[test]
    fn all_zero_roots() {
        let (enc, handle) = max_modulus_root(&p(&[0, 0, 0, 1]), &tol(1, 100)).unwrap();
        assert_eq!(enc.lo, 0.0);
        assert_eq!(enc.hi, 0.0);
        assert_eq!(handle.unwrap().as_rational(), Some(BigRational::zero()));
    }

    #[test]
    fn constant_rejected() {
        assert!(max_modulus_root(&p(&[5]), &tol(1, 10)).is_err());
        assert!(max_modulus_root(&IntPolynomial::zero(), &tol(1, 10)).is_err());
    }

    #[test]
    fn complex_dominant_pair() {
        // (x^2 + 4)(x - 1): max modulus 2 from the complex pair
        let g = p(&[4, 0, 1]).mul(&p(&[-1, 1]));
        let (enc, handle) = max_modulus_root(&g, &tol(1, 1_000_000)).unwrap();
        assert!(enc.contains(2.0));
        assert!(enc.width() <= 1.1e-6 || enc.width() == 0.0);
        // modulus exactly 2 is hit by the bisection's on-circle check or the
        // interval brackets it; either way no real root attains it
        if let Some(h) = handle {
            // only acceptable if the handle is the rational 2 or -2
            assert!(h.as_rational().map_or(false, |q| q.abs() == BigRational::from_integer(2.into())));
        }
    }

    #[test]
    fn complex_dominant_generic() {
        // x^2 - 2x + 5: roots 1 +- 2i, modulus sqrt(5)
        let f = p(&[5, -2, 1]);
        let (enc, handle) = max_modulus_root(&f, &tol(1, 10_000_000)).unwrap();
        assert!(handle.is_none());
        assert!(enc.contains(5f64.sqrt()));
        assert!(enc.width() < 1e-6);
    }

    #[test]
    fn mixed_real_and_complex() {
        // (x - 3)(x^2 + 1): real root dominates
        let f = p(&[-3, 1]).mul(&p(&[1, 0, 1]));
        let (enc, handle) = max_modulus_root(&f, &tol(1, 1_000_000)).unwrap();
        assert!(enc.contains(3.0));
        let h = handle.unwrap();
        use std::cmp::Ordering;
        assert_eq!(
            h.cmp_rational(&BigRational::from_integer(3.into())),
            Ordering::Equal
        );
    }

    #[test]
    fn aberth_finds_all_roots() {
        let f = p(&[1, -3, 0, 1]);
        let roots = all_roots_numeric(&f);
        assert_eq!(roots.len(), 3);
        let mut vals: Vec<f64> = roots.iter().map(|(z, _)| z.re).collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let expected = [-1.8793852415718, 0.3472963553338, 1.5320888862379];
        for (v, e) in vals.iter().zip(expected.iter()) {
            assert!((v - e).abs() < 1e-9, "{v} vs {e}");
        }
        for (_, r) in &roots {
            assert!(*r < 1e-9);
        }
    }

    #[test]
    fn aberth_radii_cover_true_roots() {
        let lehmer = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let roots = all_roots_numeric(&lehmer);
        assert_eq!(roots.len(), 10);
        let max_mod = roots
            .iter()
            .map(|(z, r)| z.norm() + r)
            .fold(0.0f64, f64::max);
        assert!((max_mod - 1.17628081825992).abs() < 1e-8);
    }
}
