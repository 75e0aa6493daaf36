//! Sturm chains, exact real-root counting and certified isolation.
//!
//! Chains are kept as integer polynomials; each remainder is divided by its
//! positive content only, so every sign evaluation matches the rational
//! Sturm chain exactly.

use crate::error::{Error, Result};
use crate::num::poly::IntPolynomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Interval = (BigRational, BigRational);

pub struct SturmChain {
    chain: Vec<IntPolynomial>,
}

/// Signed remainder sequence `(s0, s1, -rem(s0, s1), ...)`, each entry a
/// positive-constant multiple of the exact rational remainder chain, so
/// sign evaluations agree with the classical definition.
pub(crate) fn signed_remainder_chain(s0: &IntPolynomial, s1: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut chain = vec![s0.div_content_keep_sign()];
    if s1.is_zero() {
        return chain;
    }
    chain.push(s1.div_content_keep_sign());
    loop {
        let n = chain.len();
        let (f, g) = (&chain[n - 2], &chain[n - 1]);
        if f.degree() < g.degree() {
            // remainder of f by higher-degree g is f itself; the chain would
            // loop, so swap-free handling: -rem(f, g) = -f
            let r = f.neg();
            chain.push(r.div_content_keep_sign());
            continue;
        }
        let (r, t) = f.pseudo_rem_steps(g);
        if r.is_zero() {
            break;
        }
        // pseudo_rem scaled f by lc(g)^t; flip so the result is a positive
        // multiple of -(true remainder).
        let lc_neg = g.leading_coeff().is_negative();
        let flip = !(t % 2 == 1 && lc_neg);
        let r = if flip { r.neg() } else { r };
        chain.push(r.div_content_keep_sign());
    }
    chain
}

pub(crate) fn variations_of(signs: impl Iterator<Item = i32>) -> usize {
    let mut count = 0;
    let mut last = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

impl SturmChain {
    /// Builds the Sturm chain of a square-free polynomial.
    pub fn new(p: &IntPolynomial) -> Self {
        debug_assert!(!p.is_zero());
        let dp = p.derivative();
        let chain = if dp.is_zero() {
            vec![p.div_content_keep_sign()]
        } else {
            signed_remainder_chain(p, &dp)
        };
        SturmChain { chain }
    }

    fn variations(signs: impl Iterator<Item = i32>) -> usize {
        let mut count = 0;
        let mut last = 0;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_neg_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at_neg_inf()))
    }

    pub fn variations_pos_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at_pos_inf()))
    }

    /// Number of real roots in `(a, b]`; requires `p(a) != 0`.
    pub fn count_half_open(&self, a: &BigRational, b: &BigRational) -> usize {
        let va = self.variations_at(a);
        let vb = self.variations_at(b);
        va.saturating_sub(vb)
    }

    /// Total number of real roots.
    pub fn count_all(&self) -> usize {
        self.variations_neg_inf()
            .saturating_sub(self.variations_pos_inf())
    }
}

/// Number of roots of a square-free `p` in the open interval `(a, b)`;
/// endpoints may be roots.
pub fn count_roots_open(p: &IntPolynomial, a: &BigRational, b: &BigRational) -> usize {
    debug_assert!(a < b);
    let mut q = p.div_content_keep_sign();
    for endpoint in [a, b] {
        while q.sign_at(endpoint) == 0 {
            // divide out the rational root (den*x - num)
            let lin = IntPolynomial::new(vec![-endpoint.numer().clone(), endpoint.denom().clone()]);
            q = q.div_exact(&lin).expect("rational root divides");
        }
    }
    if q.degree().map_or(true, |d| d == 0) {
        return 0;
    }
    let chain = SturmChain::new(&q);
    let n = chain.count_half_open(a, b);
    // roots at b were divided out, so (a, b] matches (a, b)
    n
}

/// Exact count of real roots of a square-free `p` over the whole line.
pub fn count_real_roots(p: &IntPolynomial) -> usize {
    if p.degree().map_or(true, |d| d == 0) {
        return 0;
    }
    SturmChain::new(p).count_all()
}

/// Disjoint isolating intervals with multiplicities, ordered left to right.
/// Point intervals (`lo == hi`) mark exact rational roots; otherwise the
/// endpoints are never roots and the open interval holds exactly one root.
#[derive(Debug, Clone)]
pub struct RootIsolation {
    pub intervals: Vec<Interval>,
    pub multiplicities: Vec<usize>,
}

impl RootIsolation {
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

/// Isolates the distinct real roots of a nonzero polynomial, with
/// multiplicities read off the square-free decomposition.
pub fn isolate_real_roots(p: &IntPolynomial) -> Result<RootIsolation> {
    if p.is_zero() {
        return Err(Error::invalid("cannot isolate roots of the zero polynomial"));
    }
    let mut roots: Vec<(Interval, usize, IntPolynomial)> = Vec::new();
    for (factor, mult) in p.square_free_decomposition() {
        for iv in isolate_square_free(&factor) {
            roots.push((iv, mult, factor.clone()));
        }
    }
    // order by interval position; distinct factors have distinct roots, so
    // overlapping intervals can always be refined apart
    let mut changed = true;
    while changed {
        changed = false;
        roots.sort_by(|a, b| (a.0 .0.clone() + &a.0 .1).cmp(&(b.0 .0.clone() + &b.0 .1)));
        for i in 1..roots.len() {
            let (left, right) = roots.split_at_mut(i);
            let a = &mut left[i - 1];
            let b = &mut right[0];
            if !disjoint(&a.0, &b.0) {
                let wa = width(&a.0);
                let wb = width(&b.0);
                a.0 = refine_step(&a.2, &a.0, &(wa / BigRational::from_integer(4.into())));
                b.0 = refine_step(&b.2, &b.0, &(wb / BigRational::from_integer(4.into())));
                changed = true;
            }
        }
    }
    let mut intervals = Vec::with_capacity(roots.len());
    let mut multiplicities = Vec::with_capacity(roots.len());
    for (iv, m, _) in roots {
        intervals.push(iv);
        multiplicities.push(m);
    }
    Ok(RootIsolation {
        intervals,
        multiplicities,
    })
}

fn disjoint(a: &Interval, b: &Interval) -> bool {
    // open/point intervals: touching endpoints are fine
    a.1 <= b.0 || b.1 <= a.0
}

fn width(iv: &Interval) -> BigRational {
    &iv.1 - &iv.0
}

/// Isolating intervals for all real roots of a square-free polynomial.
pub fn isolate_square_free(p: &IntPolynomial) -> Vec<Interval> {
    if p.degree().map_or(true, |d| d == 0) {
        return Vec::new();
    }
    let chain = SturmChain::new(p);
    let bound = p.cauchy_bound().ceil();
    let lo = -bound.clone();
    let hi = bound;
    let mut out = Vec::new();
    let total = chain.count_half_open(&lo, &hi);
    if total == 0 {
        return out;
    }
    let mut stack = vec![(lo, hi, total)];
    while let Some((a, b, n)) = stack.pop() {
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((a, b));
            continue;
        }
        let mid = (&a + &b) / BigRational::from_integer(2.into());
        if p.sign_at(&mid) == 0 {
            // exact rational root at the midpoint: emit a point interval and
            // carve out a root-free neighbourhood before recursing
            let mut delta = (&b - &a) / BigRational::from_integer(4.into());
            loop {
                let l = &mid - &delta;
                let r = &mid + &delta;
                if p.sign_at(&l) != 0
                    && p.sign_at(&r) != 0
                    && chain.count_half_open(&l, &r) == 1
                {
                    let n_left = chain.count_half_open(&a, &l);
                    let n_right = chain.count_half_open(&r, &b);
                    stack.push((a, l, n_left));
                    stack.push((r, b, n_right));
                    break;
                }
                delta /= BigRational::from_integer(2.into());
            }
            out.push((mid.clone(), mid));
        } else {
            let n_left = chain.count_half_open(&a, &mid);
            stack.push((a, mid.clone(), n_left));
            stack.push((mid, b, n - n_left));
        }
    }
    out.sort_by(|x, y| (x.0.clone() + &x.1).cmp(&(y.0.clone() + &y.1)));
    out
}

/// One refinement pass: narrows an isolating interval of a square-free `p`
/// below `target` width by bisection with a dyadically rounded Newton step
/// whenever it is safe.
pub fn refine_step(p: &IntPolynomial, iv: &Interval, target: &BigRational) -> Interval {
    let (mut lo, mut hi) = iv.clone();
    if lo == hi {
        return (lo, hi);
    }
    let two = BigRational::from_integer(2.into());
    let dp = p.derivative();
    let mut s_lo = p.sign_at(&lo);
    debug_assert!(s_lo != 0 && p.sign_at(&hi) != 0);
    while &hi - &lo > *target {
        // try a Newton step from the midpoint, rounded outward to dyadics
        let mid = (&lo + &hi) / &two;
        let v = p.eval_rat(&mid);
        if v.is_zero() {
            return (mid.clone(), mid);
        }
        let mut stepped = false;
        let dv = dp.eval_rat(&mid);
        if !dv.is_zero() {
            let newton = &mid - &v / &dv;
            if newton > lo && newton < hi {
                let bits = dyadic_bits(&(&hi - &lo)) * 2 + 4;
                let (nlo, nhi) = dyadic_bracket(&newton, bits);
                if nlo > lo && nhi < hi && &nhi - &nlo < (&hi - &lo) / &two {
                    let s_nlo = p.sign_at(&nlo);
                    let s_nhi = p.sign_at(&nhi);
                    if s_nlo == 0 {
                        return (nlo.clone(), nlo);
                    }
                    if s_nhi == 0 {
                        return (nhi.clone(), nhi);
                    }
                    if s_nlo != s_nhi {
                        lo = nlo;
                        hi = nhi;
                        s_lo = s_nlo;
                        stepped = true;
                    } else if s_nlo == s_lo {
                        lo = nlo;
                        s_lo = s_nlo;
                        stepped = true;
                    } else {
                        hi = nhi;
                        stepped = true;
                    }
                }
            }
        }
        if !stepped {
            let s_mid = p.sign_at(&mid);
            if s_mid == 0 {
                return (mid.clone(), mid);
            }
            if s_mid == s_lo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }
    (lo, hi)
}

/// Number of bits needed so that `2^-bits` is below `w`.
fn dyadic_bits(w: &BigRational) -> usize {
    let mut bits = 0usize;
    let mut scale = BigRational::one();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    while &scale > w && bits < 4096 {
        scale *= &half;
        bits += 1;
    }
    bits
}

/// The dyadic pair `(floor(x * 2^bits) / 2^bits, +2^-bits)` bracketing `x`.
fn dyadic_bracket(x: &BigRational, bits: usize) -> (BigRational, BigRational) {
    let scale = BigInt::one() << bits;
    let scaled = x * BigRational::from_integer(scale.clone());
    let fl = scaled.floor().to_integer();
    let lo = BigRational::new(fl.clone(), scale.clone());
    let hi = BigRational::new(fl + BigInt::one(), scale);
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn contains(iv: &Interval, lo: i64, hi: i64) -> bool {
        iv.0 >= rat(lo) && iv.1 <= rat(hi)
    }

    #[test]
    fn cubic_family_root_layout() {
        // x^3 - 3x + 1: one root in each of (-2,-1), (0,1), (1,2)
        let phi = p(&[1, -3, 0, 1]);
        let iso = isolate_real_roots(&phi).unwrap();
        assert_eq!(iso.len(), 3);
        assert!(iso.multiplicities.iter().all(|&m| m == 1));
        let refined: Vec<Interval> = iso
            .intervals
            .iter()
            .map(|iv| refine_step(&phi, iv, &BigRational::new(1.into(), 64.into())))
            .collect();
        assert!(contains(&refined[0], -2, -1));
        assert!(contains(&refined[1], 0, 1));
        assert!(contains(&refined[2], 1, 2));
    }

    #[test]
    fn no_real_roots() {
        let iso = isolate_real_roots(&p(&[1, 0, 1])).unwrap();
        assert!(iso.is_empty());
    }

    #[test]
    fn repeated_root_multiplicity() {
        // (x-1)^2
        let iso = isolate_real_roots(&p(&[1, -2, 1])).unwrap();
        assert_eq!(iso.len(), 1);
        assert_eq!(iso.multiplicities, vec![2]);
        // refinement pins the root down to the exact rational point 1
        let iv = refine_step(
            &p(&[-1, 1]),
            &iso.intervals[0],
            &BigRational::new(1.into(), 1024.into()),
        );
        assert_eq!(iv.0, rat(1));
        assert_eq!(iv.1, rat(1));
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert!(isolate_real_roots(&IntPolynomial::zero()).is_err());
    }

    #[test]
    fn sign_table_of_the_cubic_family() {
        // signs of x^3 - 3a^2 x + 1 at -a, 0, 1, a for a = 1..6
        for a in 1i64..=6 {
            let phi = p(&[1, -3 * a * a, 0, 1]);
            assert_eq!(phi.sign_at(&rat(-a)), 1);
            assert_eq!(phi.sign_at(&rat(0)), 1);
            assert_eq!(phi.sign_at(&rat(1)), -1);
            assert_eq!(phi.sign_at(&rat(a)), -1);
        }
    }

    #[test]
    fn count_matches_isolation() {
        let polys = [
            p(&[1, -3, 0, 1]),
            p(&[1, 0, 1]),
            p(&[-1, -1, 1]),
            p(&[-2, 0, 1]).mul(&p(&[-3, 0, 1])),
            p(&[0, -1, 0, 1]), // x^3 - x
        ];
        for q in &polys {
            let sf = q.square_free_part();
            let iso = isolate_square_free(&sf);
            assert_eq!(count_real_roots(&sf), iso.len());
        }
    }

    #[test]
    fn open_interval_counts_exclude_endpoints() {
        // x^3 - x has roots -1, 0, 1
        let q = p(&[0, -1, 0, 1]);
        assert_eq!(count_roots_open(&q, &rat(-1), &rat(1)), 1);
        assert_eq!(count_roots_open(&q, &rat(-2), &rat(2)), 3);
        assert_eq!(count_roots_open(&q, &rat(0), &rat(1)), 0);
    }

    #[test]
    fn refine_converges() {
        let phi = p(&[1, -3, 0, 1]);
        let iso = isolate_real_roots(&phi).unwrap();
        let tol = BigRational::new(1.into(), BigInt::from(1_000_000_000_000i64));
        for iv in &iso.intervals {
            let r = refine_step(&phi, iv, &tol);
            assert!(&r.1 - &r.0 <= tol);
            // bracket still valid
            if r.0 != r.1 {
                assert_ne!(phi.sign_at(&r.0), phi.sign_at(&r.1));
            }
        }
    }

    #[test]
    fn lehmer_trace_has_four_roots_in_window() {
        // degree-10 palindrome -> degree-5 trace with 4 roots in (-2, 2)
        let lehmer = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let q = crate::num::poly::palindromic_trace(&lehmer).unwrap();
        assert_eq!(q.degree(), Some(5));
        assert_eq!(count_roots_open(&q, &rat(-2), &rat(2)), 4);
        assert_eq!(count_real_roots(&q), 5);
    }
}
