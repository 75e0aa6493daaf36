//! Exact root counting relative to circles: how many roots of an integer
//! polynomial lie inside, on, and outside the unit circle (or any circle of
//! rational radius).
//!
//! The scheme is rational arithmetic end to end. Roots on the circle are
//! found through the self-inversive part `gcd(p, reverse(p))` and the
//! substitution `y = x + 1/x`; the remaining factor has no circle roots and
//! is counted through the Cayley transform `z = (u-1)/(u+1)` followed by a
//! right-half-plane count with Cauchy indices (Routh-Hurwitz).

use crate::error::{Error, Result};
use crate::num::poly::{palindromic_trace, IntPolynomial};
use crate::num::sturm::{count_roots_open, signed_remainder_chain, variations_of};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiscCounts {
    pub inside: usize,
    pub on_circle: usize,
    pub outside: usize,
}

/// Number of roots of a square-free `p` in the open unit disc.
///
/// Zero roots are stripped first and counted as inside.
pub fn count_roots_in_open_unit_disc(p: &IntPolynomial) -> Result<usize> {
    Ok(unit_disc_counts(p)?.inside)
}

/// Inside / on-circle / outside counts for a square-free polynomial.
pub fn unit_disc_counts(p: &IntPolynomial) -> Result<DiscCounts> {
    if p.is_zero() {
        return Err(Error::invalid("zero polynomial has no root counts"));
    }
    if !p.is_square_free() {
        return Err(Error::invalid(
            "polynomial must be square-free; reduce by gcd(p, p') first",
        ));
    }
    let (mut q, zeros) = p.strip_zero_roots();
    q = q.primitive_part();
    let mut counts = DiscCounts {
        inside: zeros,
        on_circle: 0,
        outside: 0,
    };
    // roots at +-1 sit on the circle
    for root in [BigInt::one(), -BigInt::one()] {
        let r = BigRational::from_integer(root.clone());
        if q.sign_at(&r) == 0 {
            let lin = IntPolynomial::new(vec![-root, BigInt::one()]);
            q = q.div_exact(&lin).expect("linear factor divides");
            counts.on_circle += 1;
        }
    }
    if q.degree().map_or(true, |d| d == 0) {
        return Ok(counts);
    }
    // self-inversive part: roots z with 1/z also a root
    let g = q.gcd(&q.reverse());
    if let Some(dg) = g.degree().filter(|&d| d > 0) {
        let trace = palindromic_trace(&g).ok_or_else(|| {
            Error::Internal("self-inversive part is not an even palindrome".into())
        })?;
        let two = BigRational::from_integer(2.into());
        let circle_pairs = count_roots_open(&trace, &(-two.clone()), &two);
        counts.on_circle += 2 * circle_pairs;
        // remaining g-roots split evenly between inside and outside
        counts.inside += dg / 2 - circle_pairs;
        counts.outside += dg / 2 - circle_pairs;
    }
    let h = match g.degree() {
        Some(d) if d > 0 => q
            .primitive_part()
            .div_exact(&g)
            .expect("gcd divides")
            .primitive_part(),
        _ => q.primitive_part(),
    };
    if let Some(dh) = h.degree().filter(|&d| d > 0) {
        // h has no circle roots and no reciprocal root pairs
        let cayley = cayley_transform(&h);
        debug_assert_eq!(cayley.degree(), Some(dh));
        let inside_h = right_half_plane_roots(&cayley)?;
        counts.inside += inside_h;
        counts.outside += dh - inside_h;
    }
    Ok(counts)
}

/// Counts relative to the circle of rational radius `r > 0`.
pub fn disc_counts_radius(p: &IntPolynomial, r: &BigRational) -> Result<DiscCounts> {
    if r <= &BigRational::zero() {
        return Err(Error::invalid("radius must be positive"));
    }
    // roots of p(r*x) are roots of p divided by r
    let scaled = p.scale_arg(r.numer(), r.denom()).primitive_part();
    unit_disc_counts(&scaled)
}

/// `(u+1)^d * h((u-1)/(u+1))`: real polynomial whose right-half-plane roots
/// correspond to the roots of `h` in the open unit disc. Requires `h(1) != 0`
/// so the degree is preserved.
fn cayley_transform(h: &IntPolynomial) -> IntPolynomial {
    let d = h.degree().expect("nonzero");
    let up = IntPolynomial::from_i64(&[-1, 1]); // u - 1
    let down = IntPolynomial::from_i64(&[1, 1]); // u + 1
    let mut acc = IntPolynomial::zero();
    for (k, c) in h.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = up.pow(k).mul(&down.pow(d - k)).scale(c);
        acc = acc.add(&term);
    }
    acc
}

/// Number of roots of a real polynomial in the open right half-plane,
/// assuming no roots on the imaginary axis. Exact, via the Cauchy index of
/// the even/odd split of `H(i*w)` computed with a signed remainder chain.
pub fn right_half_plane_roots(h: &IntPolynomial) -> Result<usize> {
    let n = h
        .degree()
        .ok_or_else(|| Error::invalid("zero polynomial"))?;
    if n == 0 {
        return Ok(0);
    }
    // H(i*w) = P(w) + i*Q(w)
    let mut p_coeffs = vec![BigInt::zero(); n + 1];
    let mut q_coeffs = vec![BigInt::zero(); n + 1];
    for (k, c) in h.coeffs().iter().enumerate() {
        match k % 4 {
            0 => p_coeffs[k] = c.clone(),
            1 => q_coeffs[k] = c.clone(),
            2 => p_coeffs[k] = -c,
            3 => q_coeffs[k] = -c,
            _ => unreachable!(),
        }
    }
    let p = IntPolynomial::new(p_coeffs);
    let q = IntPolynomial::new(q_coeffs);
    if p.is_zero() || q.is_zero() {
        return Err(Error::invalid(
            "even/odd split degenerates; roots come in +- pairs or lie on the axis",
        ));
    }
    // left - right = Ind(P/Q) for odd degree, -Ind(Q/P) for even degree
    let diff = if n % 2 == 1 {
        cauchy_index(&p, &q)
    } else {
        -cauchy_index(&q, &p)
    };
    let left_minus_right = diff;
    let n = n as isize;
    if (n - left_minus_right) % 2 != 0 {
        return Err(Error::Internal(
            "half-plane parity mismatch; is a root on the imaginary axis?".into(),
        ));
    }
    let r = (n - left_minus_right) / 2;
    if r < 0 || r > n {
        return Err(Error::Internal("half-plane count out of range".into()));
    }
    Ok(r as usize)
}

/// Cauchy index of `num/den` over the whole real line.
fn cauchy_index(num: &IntPolynomial, den: &IntPolynomial) -> isize {
    let chain = signed_remainder_chain(den, num);
    let v_neg = variations_of(chain.iter().map(|p| p.sign_at_neg_inf()));
    let v_pos = variations_of(chain.iter().map(|p| p.sign_at_pos_inf()));
    v_neg as isize - v_pos as isize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn cauchy_index_matches_sturm_anchor() {
        // Ind(p'/p) = number of distinct real roots
        let f = p(&[1, -3, 0, 1]); // three real roots
        assert_eq!(cauchy_index(&f.derivative(), &f), 3);
        let g = p(&[1, 0, 1]); // none
        assert_eq!(cauchy_index(&g.derivative(), &g), 0);
    }

    #[test]
    fn right_half_plane_small_cases() {
        // u + 1: root -1 -> 0 right
        assert_eq!(right_half_plane_roots(&p(&[1, 1])).unwrap(), 0);
        // u - 1: root 1 -> 1 right
        assert_eq!(right_half_plane_roots(&p(&[-1, 1])).unwrap(), 1);
        // u^2 + u + 1: both left
        assert_eq!(right_half_plane_roots(&p(&[1, 1, 1])).unwrap(), 0);
        // (u-1)(u-2): both right
        assert_eq!(right_half_plane_roots(&p(&[2, -3, 1])).unwrap(), 2);
        // (u+1)(u^2+u+1): all left
        assert_eq!(right_half_plane_roots(&p(&[1, 2, 2, 1])).unwrap(), 0);
        // (u-1)(u^2+u+1): one right
        assert_eq!(right_half_plane_roots(&p(&[-1, 0, 0, 1])).unwrap(), 1);
        // 5u^2 - 6u + 5: roots (3 +- 4i)/5, both right
        assert_eq!(right_half_plane_roots(&p(&[5, -6, 5])).unwrap(), 2);
    }

    #[test]
    fn unit_disc_spec_examples() {
        // x^2 - x - 1: golden ratio outside, conjugate inside
        assert_eq!(count_roots_in_open_unit_disc(&p(&[-1, -1, 1])).unwrap(), 1);
        // x - 2: root outside
        assert_eq!(count_roots_in_open_unit_disc(&p(&[-2, 1])).unwrap(), 0);
        // Lehmer's polynomial: exactly one root inside
        let lehmer = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let counts = unit_disc_counts(&lehmer).unwrap();
        assert_eq!(counts.inside, 1);
        assert_eq!(counts.on_circle, 8);
        assert_eq!(counts.outside, 1);
    }

    #[test]
    fn counts_sum_to_degree() {
        let polys = [
            p(&[-1, -1, 1]),
            p(&[1, -3, 0, 1]),
            p(&[-1, 9, -6, 1]),
            p(&[2, 0, 0, 1]),
            p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]),
            p(&[0, -1, 0, 2]), // zero root included
            p(&[-6, 11, -6, 1]), // roots 1, 2, 3
        ];
        for q in &polys {
            let sf = q.square_free_part();
            let c = unit_disc_counts(&sf).unwrap();
            assert_eq!(
                c.inside + c.on_circle + c.outside,
                sf.degree().unwrap(),
                "counts for {sf}"
            );
        }
    }

    #[test]
    fn circle_roots_detected() {
        // (x^2+1)(x-2): two circle roots, one outside
        let f = p(&[1, 0, 1]).mul(&p(&[-2, 1]));
        let c = unit_disc_counts(&f).unwrap();
        assert_eq!(c, DiscCounts { inside: 0, on_circle: 2, outside: 1 });
        // (x-1)(x+1)(2x-1): +-1 on circle, 1/2 inside
        let f = p(&[-1, 0, 1]).mul(&p(&[-1, 2]));
        let c = unit_disc_counts(&f).unwrap();
        assert_eq!(c, DiscCounts { inside: 1, on_circle: 2, outside: 0 });
    }

    #[test]
    fn non_square_free_rejected() {
        assert!(count_roots_in_open_unit_disc(&p(&[1, -2, 1])).is_err());
        assert!(count_roots_in_open_unit_disc(&IntPolynomial::zero()).is_err());
    }

    #[test]
    fn radius_counts() {
        // roots 1, 2, 3 relative to circle of radius 5/2
        let f = p(&[-6, 11, -6, 1]);
        let c = disc_counts_radius(&f, &BigRational::new(5.into(), 2.into())).unwrap();
        assert_eq!(c, DiscCounts { inside: 2, on_circle: 0, outside: 1 });
        // radius exactly 2: root on the circle
        let c = disc_counts_radius(&f, &BigRational::from_integer(2.into())).unwrap();
        assert_eq!(c, DiscCounts { inside: 1, on_circle: 1, outside: 1 });
    }

    #[test]
    fn reciprocal_pairs_without_circle_roots() {
        // (x-2)(x-1/2) -> 2x^2 - 5x + 2: reciprocal pair off the circle
        let f = p(&[2, -5, 2]);
        let c = unit_disc_counts(&f).unwrap();
        assert_eq!(c, DiscCounts { inside: 1, on_circle: 0, outside: 1 });
        // mixed with a circle pair: (2x^2-5x+2)(x^2+1)
        let f = p(&[2, -5, 2]).mul(&p(&[1, 0, 1]));
        let c = unit_disc_counts(&f).unwrap();
        assert_eq!(c, DiscCounts { inside: 1, on_circle: 2, outside: 1 });
    }
}
