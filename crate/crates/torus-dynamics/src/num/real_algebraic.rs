//! Real algebraic numbers as (square-free integer polynomial, isolating
//! rational interval). All values are immutable; refinement returns new
//! handles.

use crate::error::{Error, Result};
use crate::num::poly::IntPolynomial;
use crate::num::sturm::{count_roots_open, refine_step, Interval};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct RealAlgebraic {
    minpoly: IntPolynomial,
    interval: Interval,
}

impl fmt::Debug for RealAlgebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RealAlgebraic({} in ({}, {}))",
            self.minpoly.coeff_string(),
            self.interval.0,
            self.interval.1
        )
    }
}

impl RealAlgebraic {
    /// Builds a handle after checking the isolation invariant: `minpoly` is
    /// square-free with exactly one root in the open interval, and the
    /// endpoints are not roots (unless the interval is a single rational
    /// point that is a root).
    pub fn new(minpoly: IntPolynomial, lo: BigRational, hi: BigRational) -> Result<Self> {
        if minpoly.degree().map_or(true, |d| d == 0) {
            return Err(Error::invalid("minimal polynomial must be nonconstant"));
        }
        if !minpoly.is_square_free() {
            return Err(Error::invalid("minimal polynomial must be square-free"));
        }
        let minpoly = minpoly.primitive_part();
        if lo == hi {
            if minpoly.sign_at(&lo) != 0 {
                return Err(Error::invalid("point interval must sit on a root"));
            }
            return Ok(RealAlgebraic {
                minpoly,
                interval: (lo, hi),
            });
        }
        if lo > hi {
            return Err(Error::invalid("interval endpoints out of order"));
        }
        if minpoly.sign_at(&lo) == 0 || minpoly.sign_at(&hi) == 0 {
            return Err(Error::invalid("interval endpoints must not be roots"));
        }
        if count_roots_open(&minpoly, &lo, &hi) != 1 {
            return Err(Error::invalid("interval does not isolate exactly one root"));
        }
        Ok(RealAlgebraic {
            minpoly,
            interval: (lo, hi),
        })
    }

    pub fn from_rational(q: BigRational) -> Self {
        let minpoly = IntPolynomial::new(vec![-q.numer().clone(), q.denom().clone()]);
        RealAlgebraic {
            minpoly,
            interval: (q.clone(), q),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn minpoly(&self) -> &IntPolynomial {
        &self.minpoly
    }

    pub fn interval(&self) -> &Interval {
        &self.interval
    }

    pub fn is_point(&self) -> bool {
        self.interval.0 == self.interval.1
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_point() {
            Some(self.interval.0.clone())
        } else {
            None
        }
    }

    /// A handle with the interval narrowed below `width`.
    pub fn refined(&self, width: &BigRational) -> Self {
        if self.is_point() {
            return self.clone();
        }
        let iv = refine_step(&self.minpoly, &self.interval, width);
        RealAlgebraic {
            minpoly: self.minpoly.clone(),
            interval: iv,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let width = BigRational::new(BigInt::one(), BigInt::one() << 80);
        let r = self.refined(&width);
        let mid = (&r.interval.0 + &r.interval.1) / BigRational::from_integer(2.into());
        mid.to_f64().unwrap_or(f64::NAN)
    }

    /// Sign of the value, decided exactly.
    pub fn sign(&self) -> i32 {
        if let Some(q) = self.as_rational() {
            return if q.is_zero() {
                0
            } else if q.is_positive() {
                1
            } else {
                -1
            };
        }
        let zero = BigRational::zero();
        // if 0 is a root of minpoly and lies in the isolating interval, the
        // unique isolated root is 0 itself
        if self.minpoly.coeff(0).is_zero() && self.interval.0 < zero && zero < self.interval.1 {
            return 0;
        }
        let mut cur = self.clone();
        loop {
            if cur.interval.0 >= zero {
                return 1;
            }
            if cur.interval.1 <= zero {
                return -1;
            }
            let w = (&cur.interval.1 - &cur.interval.0) / BigRational::from_integer(4.into());
            cur = cur.refined(&w);
        }
    }

    /// The negated value.
    pub fn neg(&self) -> Self {
        let coeffs: Vec<BigInt> = self
            .minpoly
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        RealAlgebraic {
            minpoly: IntPolynomial::new(coeffs).primitive_part(),
            interval: (-self.interval.1.clone(), -self.interval.0.clone()),
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() >= 0 {
            self.clone()
        } else {
            self.neg()
        }
    }

    /// The square of the value, with a certified isolating interval.
    pub fn square(&self) -> Self {
        if let Some(q) = self.as_rational() {
            return Self::from_rational(&q * &q);
        }
        if self.sign() == 0 {
            return Self::from_rational(BigRational::zero());
        }
        let target = self.minpoly.roots_squared().square_free_part();
        if let Some(q) = rational_if_linear(&target) {
            return Self::from_rational(q);
        }
        let pos = self.abs();
        let mut width = (&pos.interval.1 - &pos.interval.0) / BigRational::from_integer(2.into());
        loop {
            let r = pos.refined(&width);
            if let Some(q) = r.as_rational() {
                return Self::from_rational(&q * &q);
            }
            // |alpha| in (lo, hi) with 0 <= lo, so alpha^2 in (lo^2, hi^2)
            let lo2 = &r.interval.0 * &r.interval.0;
            let hi2 = &r.interval.1 * &r.interval.1;
            if r.interval.0.is_positive()
                && target.sign_at(&lo2) != 0
                && target.sign_at(&hi2) != 0
                && count_roots_open(&target, &lo2, &hi2) == 1
            {
                return RealAlgebraic {
                    minpoly: target,
                    interval: (lo2, hi2),
                };
            }
            width /= BigRational::from_integer(2.into());
        }
    }

    /// The product of two values (exact; uses the resultant composition for
    /// the minimal polynomial of the product).
    pub fn mul(&self, other: &Self) -> Self {
        if let Some(q) = self.as_rational() {
            return other.scale_by_rational(&q);
        }
        if let Some(q) = other.as_rational() {
            return self.scale_by_rational(&q);
        }
        let target = product_poly(&self.minpoly, &other.minpoly).square_free_part();
        if let Some(q) = rational_if_linear(&target) {
            return Self::from_rational(q);
        }
        let mut width_a =
            (&self.interval.1 - &self.interval.0) / BigRational::from_integer(2.into());
        let mut width_b =
            (&other.interval.1 - &other.interval.0) / BigRational::from_integer(2.into());
        loop {
            let a = self.refined(&width_a);
            let b = other.refined(&width_b);
            if let (Some(qa), Some(qb)) = (a.as_rational(), b.as_rational()) {
                return Self::from_rational(qa * qb);
            }
            let (lo, hi) = interval_product(&a.interval, &b.interval);
            if lo < hi
                && target.sign_at(&lo) != 0
                && target.sign_at(&hi) != 0
                && count_roots_open(&target, &lo, &hi) == 1
            {
                return RealAlgebraic {
                    minpoly: target,
                    interval: (lo, hi),
                };
            }
            width_a /= BigRational::from_integer(2.into());
            width_b /= BigRational::from_integer(2.into());
        }
    }

    fn scale_by_rational(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::from_rational(BigRational::zero());
        }
        if let Some(v) = self.as_rational() {
            return Self::from_rational(v * q);
        }
        // roots scale by q: substitute x/q and clear denominators
        let scaled = self.minpoly.scale_arg(q.denom(), q.numer()).primitive_part();
        let (a, b) = (&self.interval.0 * q, &self.interval.1 * q);
        let (lo, hi) = if q.is_positive() { (a, b) } else { (b, a) };
        RealAlgebraic {
            minpoly: scaled,
            interval: (lo, hi),
        }
    }

    /// Replaces the minimal polynomial by its irreducible factor vanishing at
    /// the root, when factorization succeeds within the degree cap (the
    /// square-free polynomial is kept otherwise).
    pub fn with_irreducible_minpoly(&self) -> Self {
        if self.is_point() || self.minpoly.degree() == Some(1) {
            return self.clone();
        }
        match crate::num::factor::factor_over_integers(&self.minpoly) {
            Ok(factors) => {
                for (f, _) in &factors {
                    if f.degree().map_or(false, |d| d >= 1)
                        && count_roots_open(f, &self.interval.0, &self.interval.1) == 1
                    {
                        return RealAlgebraic {
                            minpoly: f.clone(),
                            interval: self.interval.clone(),
                        };
                    }
                }
                self.clone()
            }
            Err(_) => self.clone(),
        }
    }

    /// Exact comparison against a rational number.
    pub fn cmp_rational(&self, x: &BigRational) -> Ordering {
        if let Some(q) = self.as_rational() {
            return q.cmp(x);
        }
        if self.minpoly.sign_at(x) == 0 && &self.interval.0 < x && x < &self.interval.1 {
            return Ordering::Equal;
        }
        let mut cur = self.clone();
        loop {
            if &cur.interval.1 <= x {
                return Ordering::Less;
            }
            if x <= &cur.interval.0 {
                return Ordering::Greater;
            }
            let w = (&cur.interval.1 - &cur.interval.0) / BigRational::from_integer(4.into());
            cur = cur.refined(&w);
        }
    }

    /// Exact comparison of two real algebraic numbers.
    pub fn compare(&self, other: &Self) -> Ordering {
        if let Some(q) = other.as_rational() {
            return self.cmp_rational(&q);
        }
        if let Some(q) = self.as_rational() {
            return other.cmp_rational(&q).reverse();
        }
        let g = self.minpoly.gcd(&other.minpoly);
        let common_possible = g.degree().map_or(false, |d| d >= 1);
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            if a.interval.1 <= b.interval.0 {
                return Ordering::Less;
            }
            if b.interval.1 <= a.interval.0 {
                return Ordering::Greater;
            }
            if common_possible {
                let in_a = count_roots_open(&g, &a.interval.0, &a.interval.1);
                let in_b = count_roots_open(&g, &b.interval.0, &b.interval.1);
                if in_a == 1 && in_b == 1 {
                    let hull_lo = a.interval.0.clone().min(b.interval.0.clone());
                    let hull_hi = a.interval.1.clone().max(b.interval.1.clone());
                    if count_roots_open(&g, &hull_lo, &hull_hi) == 1 {
                        return Ordering::Equal;
                    }
                } else if in_a == 0 || in_b == 0 {
                    // at least one of the two is not a root of the gcd, so
                    // the values differ; keep refining until they separate
                }
            } else {
                // no common root possible; refinement must separate them
            }
            let wa = (&a.interval.1 - &a.interval.0) / BigRational::from_integer(4.into());
            let wb = (&b.interval.1 - &b.interval.0) / BigRational::from_integer(4.into());
            a = a.refined(&wa);
            b = b.refined(&wb);
        }
    }
}

fn rational_if_linear(p: &IntPolynomial) -> Option<BigRational> {
    if p.degree() == Some(1) {
        Some(BigRational::new(-p.coeff(0), p.coeff(1)))
    } else {
        None
    }
}

fn interval_product(a: &Interval, b: &Interval) -> Interval {
    let products = [
        &a.0 * &b.0,
        &a.0 * &b.1,
        &a.1 * &b.0,
        &a.1 * &b.1,
    ];
    let lo = products.iter().min().unwrap().clone();
    let hi = products.iter().max().unwrap().clone();
    (lo, hi)
}

/// Polynomial with root set `{a*b : A(a) = 0, B(b) = 0}`, computed as the
/// Sylvester resultant of `A(y)` and `y^deg(B) * B(x/y)` over `Z[x]` by
/// fraction-free elimination.
pub fn product_poly(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let da = a.degree().expect("nonzero");
    let db = b.degree().expect("nonzero");
    // rows of the Sylvester matrix in y; entries are polynomials in x.
    // A contributes db rows of integer constants; B~ contributes da rows
    // with y^k coefficient b_k * x^(...)
    // B~(y) = sum_k b_k x^k y^(db-k)  (coefficient of y^j is b_{db-j} x^{db-j})
    let size = da + db;
    let mut m: Vec<Vec<IntPolynomial>> = vec![vec![IntPolynomial::zero(); size]; size];
    for i in 0..db {
        for (k, c) in a.coeffs().iter().enumerate() {
            // A in descending powers of y: coefficient of y^(da-k) is a-coeff of y^... store descending
            m[i][i + (da - k)] = IntPolynomial::constant(c.clone());
        }
    }
    for i in 0..da {
        for j in 0..=db {
            // coefficient of y^(db-j) in B~ is b_{db-j} * x^(db-j)... careful:
            // B~(y) = sum_{k=0}^{db} b_k x^k y^{db-k}; descending in y means
            // position j holds the y^{db-j} coefficient: b_j x^j
            let c = b.coeff(j);
            if !c.is_zero() {
                m[db + i][i + j] = IntPolynomial::monomial(c, j);
            }
        }
    }
    bareiss_det_poly(m)
}

/// Fraction-free (Bareiss) determinant over `Z[x]`.
fn bareiss_det_poly(mut m: Vec<Vec<IntPolynomial>>) -> IntPolynomial {
    let n = m.len();
    if n == 0 {
        return IntPolynomial::one();
    }
    let mut sign = 1i32;
    let mut prev = IntPolynomial::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !m[r][k].is_zero());
            match swap {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return IntPolynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t
                    .div_exact(&prev)
                    .expect("Bareiss division is exact");
            }
            m[i][k] = IntPolynomial::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det.neg()
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn alg(c: &[i64], lo: (i64, i64), hi: (i64, i64)) -> RealAlgebraic {
        RealAlgebraic::new(p(c), rat(lo.0, lo.1), rat(hi.0, hi.1)).unwrap()
    }

    #[test]
    fn sqrt2_basics() {
        let s = alg(&[-2, 0, 1], (1, 1), (2, 1));
        assert_eq!(s.sign(), 1);
        assert!((s.to_f64() - 1.4142135623730951).abs() < 1e-12);
        assert_eq!(s.cmp_rational(&rat(3, 2)), Ordering::Less);
        assert_eq!(s.cmp_rational(&rat(7, 5)), Ordering::Greater);
        let sq = s.square();
        assert_eq!(sq.as_rational(), Some(rat(2, 1)));
    }

    #[test]
    fn compare_distinct_roots_of_same_polynomial() {
        // golden ratio vs its conjugate
        let phi = alg(&[-1, -1, 1], (1, 1), (2, 1));
        let conj = alg(&[-1, -1, 1], (-1, 1), (0, 1));
        assert_eq!(phi.compare(&conj), Ordering::Greater);
        assert_eq!(phi.compare(&phi), Ordering::Equal);
        assert_eq!(conj.sign(), -1);
        assert_eq!(conj.abs().sign(), 1);
    }

    #[test]
    fn equality_through_different_presentations() {
        // sqrt(2) as a root of x^2-2 and of (x^2-2)(x-5)'s square-free gcd-mate
        let a = alg(&[-2, 0, 1], (1, 1), (2, 1));
        let b = RealAlgebraic::new(
            p(&[-2, 0, 1]).mul(&p(&[-5, 1])),
            rat(4, 3),
            rat(3, 2),
        )
        .unwrap();
        assert_eq!(a.compare(&b), Ordering::Equal);
    }

    #[test]
    fn squared_cubic_roots_compare_like_the_paper_family() {
        // alpha, gamma: outer roots of x^3-3x+1; alpha^2 > gamma^2 > 1
        let phi = p(&[1, -3, 0, 1]);
        let alpha = RealAlgebraic::new(phi.clone(), rat(-2, 1), rat(-1, 1)).unwrap();
        let gamma = RealAlgebraic::new(phi, rat(1, 1), rat(2, 1)).unwrap();
        let a2 = alpha.square();
        let g2 = gamma.square();
        assert_eq!(a2.minpoly(), &p(&[-1, 9, -6, 1]));
        assert_eq!(a2.compare(&g2), Ordering::Greater);
        assert_eq!(g2.cmp_rational(&rat(1, 1)), Ordering::Greater);
        assert!((a2.to_f64() - 3.5320888862379560).abs() < 1e-10);
    }

    #[test]
    fn product_poly_golden_times_sqrt2() {
        // roots of x^2-x-1 times roots of x^2-2: products are roots of
        // resultant-composed polynomial; check numerically
        let a = p(&[-1, -1, 1]);
        let b = p(&[-2, 0, 1]);
        let c = product_poly(&a, &b);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        for r in [
            phi * 2f64.sqrt(),
            -phi * 2f64.sqrt(),
            (1.0 - 5f64.sqrt()) / 2.0 * 2f64.sqrt(),
        ] {
            assert!(c.eval_f64(r).abs() < 1e-6, "root {r} not matched");
        }
        // product of handles
        let x = alg(&[-1, -1, 1], (1, 1), (2, 1));
        let y = alg(&[-2, 0, 1], (1, 1), (2, 1));
        let xy = x.mul(&y);
        assert!((xy.to_f64() - phi * 2f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn rational_points_and_scaling() {
        let half = RealAlgebraic::from_rational(rat(1, 2));
        assert_eq!(half.cmp_rational(&rat(1, 2)), Ordering::Equal);
        let two = RealAlgebraic::from_integer(2);
        let one = half.mul(&two);
        assert_eq!(one.as_rational(), Some(rat(1, 1)));
        let s = alg(&[-2, 0, 1], (1, 1), (2, 1));
        let scaled = s.mul(&RealAlgebraic::from_rational(rat(-3, 1)));
        assert!((scaled.to_f64() + 3.0 * 2f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn invariant_violations_rejected() {
        // two roots inside
        assert!(RealAlgebraic::new(p(&[-1, -1, 1]), rat(-2, 1), rat(2, 1)).is_err());
        // endpoint is a root
        assert!(RealAlgebraic::new(p(&[-1, 0, 1]), rat(1, 1), rat(2, 1)).is_err());
        // not square-free
        assert!(RealAlgebraic::new(p(&[1, -2, 1]), rat(0, 1), rat(2, 1)).is_err());
        // constant
        assert!(RealAlgebraic::new(p(&[3]), rat(0, 1), rat(1, 1)).is_err());
    }
}
