//! Factorization of integer polynomials into irreducibles over Q
//! (Zassenhaus): square-free decomposition, factorization modulo a small
//! prime, quadratic Hensel lifting to a Mignotte-sized modulus, then subset
//! recombination. Degrees are capped; past the cap the question is reported
//! as undecided rather than guessed.

use crate::error::{Error, Result};
use crate::num::poly::IntPolynomial;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Degrees above this bound are rejected (capability error).
pub const DEGREE_BOUND: usize = 24;

/// Irreducible factorization of `p` over the rationals, as primitive
/// integer polynomials with positive leading coefficients; the product over
/// all `(factor, multiplicity)` equals `p` up to sign and content.
pub fn factor_over_integers(p: &IntPolynomial) -> Result<Vec<(IntPolynomial, usize)>> {
    if p.is_zero() {
        return Err(Error::invalid("cannot factor the zero polynomial"));
    }
    let d = p.degree().unwrap();
    if d > DEGREE_BOUND {
        return Err(Error::capability(format!(
            "degree {d} exceeds the factorization bound {DEGREE_BOUND}; irreducibility undecided"
        )));
    }
    let mut out: Vec<(IntPolynomial, usize)> = Vec::new();
    for (sf, mult) in p.square_free_decomposition() {
        let (core, zeros) = sf.strip_zero_roots();
        if zeros > 0 {
            push_factor(&mut out, IntPolynomial::from_i64(&[0, 1]), mult);
        }
        if core.degree().map_or(false, |d| d >= 1) {
            for factor in factor_square_free(&core.primitive_part()) {
                push_factor(&mut out, factor, mult);
            }
        }
    }
    out.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    Ok(out)
}

/// True iff `p` is irreducible over the rationals (constants are not).
pub fn is_irreducible(p: &IntPolynomial) -> Result<bool> {
    let d = match p.degree() {
        None | Some(0) => return Ok(false),
        Some(d) => d,
    };
    let factors = factor_over_integers(p)?;
    Ok(factors.len() == 1 && factors[0].1 == 1 && factors[0].0.degree() == Some(d))
}

fn push_factor(out: &mut Vec<(IntPolynomial, usize)>, f: IntPolynomial, mult: usize) {
    for entry in out.iter_mut() {
        if entry.0 == f {
            entry.1 += mult;
            return;
        }
    }
    out.push((f, mult));
}

/// Factors a primitive square-free polynomial with nonzero constant term.
fn factor_square_free(f: &IntPolynomial) -> Vec<IntPolynomial> {
    let d = f.degree().unwrap();
    if d == 1 {
        return vec![f.primitive_part()];
    }
    // pick a prime keeping f square-free mod p, preferring few modular factors
    let mut best: Option<(u64, Vec<ModPoly>)> = None;
    let mut tried = 0;
    let mut prime = 3u64;
    while tried < 5 {
        if suitable_prime(f, prime) {
            let fp = ModPoly::from_int_poly(f, prime).monic();
            let factors = fp.factor();
            if factors.len() == 1 {
                return vec![f.primitive_part()];
            }
            let better = best
                .as_ref()
                .map_or(true, |(_, cur)| factors.len() < cur.len());
            if better {
                best = Some((prime, factors));
            }
            tried += 1;
        }
        prime = next_prime(prime);
    }
    let (p, modular) = best.expect("some prime is suitable");

    // lift to a modulus beyond twice the Mignotte bound
    let bound = mignotte_bound(f);
    let mut k = 1u32;
    let mut modulus = BigInt::from(p);
    let target = BigInt::from(2) * &bound + 1;
    while modulus < target {
        modulus *= BigInt::from(p);
        k += 1;
    }
    let lifted = hensel_lift(f, &modular, p, k);
    recombine(f, lifted, &modulus)
}

fn suitable_prime(f: &IntPolynomial, p: u64) -> bool {
    if (f.leading_coeff().clone() % BigInt::from(p)).is_zero() {
        return false;
    }
    let fp = ModPoly::from_int_poly(f, p);
    if fp.degree() != f.degree() {
        return false;
    }
    let deriv = fp.derivative();
    if deriv.is_zero() {
        return false;
    }
    fp.gcd(&deriv).degree() == Some(0)
}

fn next_prime(n: u64) -> u64 {
    let mut c = n + 2;
    loop {
        if is_prime_u64(c) {
            return c;
        }
        c += 2;
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Mignotte-style bound on the coefficients of any factor, times `lc(f)`.
fn mignotte_bound(f: &IntPolynomial) -> BigInt {
    let d = f.degree().unwrap() as u32;
    let norm2_sq: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    // ceil(sqrt(norm2_sq)) + 1
    let norm2 = norm2_sq.sqrt() + 1;
    (BigInt::one() << (d + 1)) * norm2 * f.leading_coeff().abs()
}

/// Subset recombination of lifted modular factors.
fn recombine(
    f: &IntPolynomial,
    mut lifted: Vec<IntPolynomial>,
    modulus: &BigInt,
) -> Vec<IntPolynomial> {
    let mut remaining = f.primitive_part();
    let mut found: Vec<IntPolynomial> = Vec::new();
    let mut size = 1usize;
    'outer: while 2 * size <= lifted.len() {
        let indices: Vec<usize> = (0..lifted.len()).collect();
        for subset in subsets_of(&indices, size) {
            let mut cand = IntPolynomial::constant(remaining.leading_coeff());
            for &i in &subset {
                cand = cand.mul(&lifted[i]);
                cand = symmetric_mod(&cand, modulus);
            }
            let cand = cand.primitive_part();
            if cand.degree() == Some(0) {
                continue;
            }
            if let Some(quot) = remaining.div_exact(&cand) {
                found.push(cand);
                remaining = quot.primitive_part();
                let keep: Vec<IntPolynomial> = lifted
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g.clone())
                    .collect();
                lifted = keep;
                continue 'outer;
            }
        }
        size += 1;
    }
    if remaining.degree().map_or(false, |d| d >= 1) {
        found.push(remaining);
    }
    found
}

fn subsets_of(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(size);
    fn rec(items: &[usize], size: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for i in start..items.len() {
            current.push(items[i]);
            rec(items, size, i + 1, current, out);
            current.pop();
        }
    }
    rec(items, size, 0, &mut current, &mut out);
    out
}

/// Reduces all coefficients into the symmetric range `(-m/2, m/2]`.
fn symmetric_mod(f: &IntPolynomial, m: &BigInt) -> IntPolynomial {
    let half = m / BigInt::from(2);
    IntPolynomial::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let mut r = c.mod_floor(m);
                if r > half {
                    r -= m;
                }
                r
            })
            .collect(),
    )
}

// ---------------------------------------------------------------------------
// Hensel lifting
// ---------------------------------------------------------------------------

/// Lifts the factorization `f = lc(f) * prod(factors) mod p` to monic
/// integer polynomials congruent to the true factors mod `p^k`.
fn hensel_lift(f: &IntPolynomial, factors: &[ModPoly], p: u64, k: u32) -> Vec<IntPolynomial> {
    let modulus = BigInt::from(p).pow(k);
    if factors.len() == 1 {
        // f itself is the lift; normalize monic mod p^k
        let inv = mod_inverse(&f.leading_coeff(), &modulus);
        let monic = symmetric_mod(&f.scale(&inv), &modulus);
        return vec![monic];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    // group products mod p, with lc folded into the left factor
    let lc_p = (f.leading_coeff().mod_floor(&BigInt::from(p)))
        .to_u64()
        .unwrap();
    let mut g0 = ModPoly::constant(lc_p, p);
    for fac in left {
        g0 = g0.mul(fac);
    }
    let mut h0 = ModPoly::constant(1, p);
    for fac in right {
        h0 = h0.mul(fac);
    }
    let (g, h) = lift_pair(f, &g0, &h0, p, k);
    let mut out = hensel_lift(&g, left, p, k);
    out.extend(hensel_lift(&h, right, p, k));
    out
}

/// Quadratic Hensel lifting of a coprime pair: from `f = g0*h0 mod p`
/// (with `lc(g0) = lc(f) mod p`, `h0` monic) to `f = g*h mod p^k`.
fn lift_pair(
    f: &IntPolynomial,
    g0: &ModPoly,
    h0: &ModPoly,
    p: u64,
    k: u32,
) -> (IntPolynomial, IntPolynomial) {
    // Bezout: s*g0 + t*h0 = 1 mod p
    let (s0, t0) = g0.bezout(h0);
    let mut g = g0.to_int_poly_symmetric();
    let mut h = h0.to_int_poly_symmetric();
    let mut s = s0.to_int_poly_symmetric();
    let mut t = t0.to_int_poly_symmetric();
    let mut m = BigInt::from(p);
    let target = BigInt::from(p).pow(k);
    while m < target {
        let m2 = &m * &m;
        // e = f - g*h
        let e = symmetric_mod(&f.sub(&g.mul(&h)), &m2);
        // (q, r) = divmod(s*e, h), h monic
        let se = symmetric_mod(&s.mul(&e), &m2);
        let (q, r) = monic_divmod(&se, &h, &m2);
        let g_new = symmetric_mod(&g.add(&t.mul(&e)).add(&q.mul(&g)), &m2);
        let h_new = symmetric_mod(&h.add(&r), &m2);
        // lift the Bezout pair as well
        let b = symmetric_mod(&s.mul(&g_new).add(&t.mul(&h_new)).sub(&IntPolynomial::one()), &m2);
        let sb = symmetric_mod(&s.mul(&b), &m2);
        let (c, dd) = monic_divmod(&sb, &h_new, &m2);
        let s_new = symmetric_mod(&s.sub(&dd), &m2);
        let t_new = symmetric_mod(&t.sub(&t.mul(&b)).sub(&c.mul(&g_new)), &m2);
        g = g_new;
        h = h_new;
        s = s_new;
        t = t_new;
        m = m2;
    }
    (symmetric_mod(&g, &target), symmetric_mod(&h, &target))
}

/// Division with remainder by a monic divisor, coefficients mod `m`.
fn monic_divmod(f: &IntPolynomial, div: &IntPolynomial, m: &BigInt) -> (IntPolynomial, IntPolynomial) {
    debug_assert!(div.leading_coeff().is_one());
    let dd = div.degree().unwrap();
    let mut rem = f.clone();
    let mut quot_coeffs: Vec<BigInt> = Vec::new();
    loop {
        let dr = match rem.degree() {
            Some(d) if d >= dd => d,
            _ => break,
        };
        let c = rem.leading_coeff();
        let shift = dr - dd;
        rem = symmetric_mod(&rem.sub(&div.scale(&c).shift_up(shift)), m);
        if quot_coeffs.len() < shift + 1 {
            quot_coeffs.resize(shift + 1, BigInt::zero());
        }
        quot_coeffs[shift] = c;
    }
    (
        symmetric_mod(&IntPolynomial::new(quot_coeffs), m),
        rem,
    )
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

// ---------------------------------------------------------------------------
// Arithmetic over F_p
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
struct ModPoly {
    coeffs: Vec<u64>,
    p: u64,
}

impl ModPoly {
    fn new(mut coeffs: Vec<u64>, p: u64) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { coeffs, p }
    }

    fn constant(c: u64, p: u64) -> Self {
        Self::new(vec![c], p)
    }

    fn x(p: u64) -> Self {
        Self::new(vec![0, 1], p)
    }

    fn from_int_poly(f: &IntPolynomial, p: u64) -> Self {
        let pb = BigInt::from(p);
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().unwrap())
            .collect();
        Self::new(coeffs, p)
    }

    fn to_int_poly_symmetric(&self) -> IntPolynomial {
        let half = self.p / 2;
        IntPolynomial::new(
            self.coeffs
                .iter()
                .map(|&c| {
                    if c > half {
                        BigInt::from(c) - BigInt::from(self.p)
                    } else {
                        BigInt::from(c)
                    }
                })
                .collect(),
        )
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    fn mulmod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn inv_scalar(&self, a: u64) -> u64 {
        // Fermat: a^(p-2) mod p
        let mut result = 1u64;
        let mut base = a % self.p;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mulmod(result, base);
            }
            base = self.mulmod(base, base);
            e >>= 1;
        }
        result
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for k in 0..n {
            let a = self.coeffs.get(k).copied().unwrap_or(0);
            let b = other.coeffs.get(k).copied().unwrap_or(0);
            out[k] = (a + self.p - b) % self.p;
        }
        Self::new(out, self.p)
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(vec![], self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + self.mulmod(a, b)) % self.p;
            }
        }
        Self::new(out, self.p)
    }

    fn scale(&self, c: u64) -> Self {
        Self::new(self.coeffs.iter().map(|&a| self.mulmod(a, c)).collect(), self.p)
    }

    fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.inv_scalar(self.lead());
        self.scale(inv)
    }

    fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::new(vec![], self.p);
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| self.mulmod(c, (k as u64) % self.p))
                .collect(),
            self.p,
        )
    }

    fn divmod(&self, div: &Self) -> (Self, Self) {
        let dd = div.degree().expect("division by zero");
        let inv_lead = self.inv_scalar(div.lead());
        let mut rem = self.clone();
        let mut quot = vec![0u64; self.coeffs.len().saturating_sub(dd)];
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let c = self.mulmod(rem.lead(), inv_lead);
            let shift = dr - dd;
            let mut sub = vec![0u64; shift];
            sub.extend(div.coeffs.iter().map(|&a| self.mulmod(a, c)));
            rem = rem.sub(&Self::new(sub, self.p));
            quot[shift] = c;
        }
        (Self::new(quot, self.p), rem)
    }

    fn rem(&self, div: &Self) -> Self {
        self.divmod(div).1
    }

    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Extended Euclid: returns `(s, t)` with `s*self + t*other = 1`;
    /// requires coprimality.
    fn bezout(&self, other: &Self) -> (Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::constant(1, p), Self::new(vec![], p));
        let (mut t0, mut t1) = (Self::new(vec![], p), Self::constant(1, p));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        debug_assert_eq!(r0.degree(), Some(0));
        let inv = self.inv_scalar(r0.lead());
        (s0.scale(inv), t0.scale(inv))
    }

    fn pow_mod(&self, mut e: u64, modulus: &Self) -> Self {
        let mut base = self.rem(modulus);
        let mut acc = Self::constant(1, self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            e >>= 1;
        }
        acc
    }

    /// Full factorization of a monic square-free polynomial over F_p into
    /// monic irreducibles (distinct-degree then equal-degree splitting).
    fn factor(&self) -> Vec<ModPoly> {
        let mut out = Vec::new();
        let mut f = self.monic();
        // strip roots at x = 0
        while !f.is_zero() && f.coeffs.first() == Some(&0) {
            out.push(Self::x(self.p));
            f = Self::new(f.coeffs[1..].to_vec(), self.p);
        }
        if f.degree().map_or(true, |d| d == 0) {
            return out;
        }
        // distinct-degree
        let mut h = Self::x(self.p); // x^(p^d) mod f, iterated
        let mut d = 0usize;
        let mut rest = f.clone();
        while rest.degree().map_or(false, |deg| deg >= 1) {
            d += 1;
            if 2 * d > rest.degree().unwrap() {
                out.push(rest.monic());
                break;
            }
            h = h.pow_mod(self.p, &rest);
            let g = h.sub(&Self::x(self.p)).gcd(&rest);
            if g.degree().map_or(false, |deg| deg >= 1) {
                out.extend(equal_degree_split(&g, d));
                rest = rest.divmod(&g).0.monic();
                h = h.rem(&rest);
            }
        }
        out
    }
}

/// Cantor-Zassenhaus equal-degree splitting: factors a monic square-free
/// product of degree-`d` irreducibles over F_p (p odd). Deterministically
/// seeded so results are reproducible.
fn equal_degree_split(f: &ModPoly, d: usize) -> Vec<ModPoly> {
    let deg = f.degree().unwrap();
    if deg == d {
        return vec![f.monic()];
    }
    let p = f.p;
    // (p^d - 1) / 2 can exceed u64 for larger p^d; exponentiate with BigInt
    let exp = (BigInt::from(p).pow(d as u32) - 1) / BigInt::from(2);
    let mut seed = 0x9e3779b97f4a7c15u64 ^ (deg as u64) << 8 ^ d as u64;
    loop {
        // pseudo-random candidate of degree < deg
        let mut coeffs = Vec::with_capacity(deg);
        for _ in 0..deg {
            seed = seed
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            coeffs.push((seed >> 33) % p);
        }
        let a = ModPoly::new(coeffs, p);
        if a.degree().map_or(true, |da| da == 0) {
            continue;
        }
        let b = pow_mod_big(&a, &exp, f);
        let candidate = b.sub(&ModPoly::constant(1, p)).gcd(f);
        if let Some(dc) = candidate.degree() {
            if dc >= 1 && dc < deg {
                let rest = f.divmod(&candidate).0.monic();
                let mut out = equal_degree_split(&candidate, d);
                out.extend(equal_degree_split(&rest, d));
                return out;
            }
        }
    }
}

fn pow_mod_big(a: &ModPoly, e: &BigInt, modulus: &ModPoly) -> ModPoly {
    let mut acc = ModPoly::constant(1, a.p);
    let mut base = a.rem(modulus);
    let bits = e.bits();
    for i in (0..bits).rev() {
        acc = acc.mul(&acc).rem(modulus);
        if e.bit(i) {
            acc = acc.mul(&base).rem(modulus);
        }
    }
    let _ = &mut base;
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    fn check_product(f: &IntPolynomial, factors: &[(IntPolynomial, usize)]) {
        let mut prod = IntPolynomial::one();
        for (q, m) in factors {
            prod = prod.mul(&q.pow(*m));
        }
        assert_eq!(prod.primitive_part(), f.primitive_part(), "product mismatch for {f}");
    }

    #[test]
    fn irreducible_cubic() {
        let phi = p(&[1, -3, 0, 1]);
        let factors = factor_over_integers(&phi).unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0], (phi.clone(), 1));
        assert!(is_irreducible(&phi).unwrap());
    }

    #[test]
    fn squared_cubic() {
        let phi = p(&[1, -3, 0, 1]);
        let factors = factor_over_integers(&phi.mul(&phi)).unwrap();
        assert_eq!(factors, vec![(phi, 2)]);
    }

    #[test]
    fn difference_of_squares() {
        let f = p(&[-1, 0, 1]);
        let factors = factor_over_integers(&f).unwrap();
        assert_eq!(
            factors,
            vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1)]
        );
        check_product(&f, &factors);
    }

    #[test]
    fn lehmer_polynomial_is_irreducible() {
        let lehmer = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        assert!(is_irreducible(&lehmer).unwrap());
    }

    #[test]
    fn mixed_product_recovered() {
        // (x^2+1)(x^2-2)(x-3)^2 * 6
        let f = p(&[1, 0, 1])
            .mul(&p(&[-2, 0, 1]))
            .mul(&p(&[-3, 1]).pow(2))
            .scale(&BigInt::from(6));
        let factors = factor_over_integers(&f).unwrap();
        check_product(&f, &factors);
        assert_eq!(factors.len(), 3);
        let mults: Vec<usize> = factors.iter().map(|(_, m)| *m).collect();
        assert_eq!(mults.iter().sum::<usize>(), 4);
    }

    #[test]
    fn cyclotomic_like_products() {
        // x^6 - 1 = (x-1)(x+1)(x^2+x+1)(x^2-x+1)
        let f = p(&[-1, 0, 0, 0, 0, 0, 1]);
        let factors = factor_over_integers(&f).unwrap();
        assert_eq!(factors.len(), 4);
        check_product(&f, &factors);
    }

    #[test]
    fn zero_roots_and_constants() {
        // 12 x^3 (x^2 - 2)
        let f = p(&[-2, 0, 1]).mul(&p(&[0, 0, 0, 12]));
        let factors = factor_over_integers(&f).unwrap();
        check_product(&f, &factors);
        assert!(factors.iter().any(|(q, m)| q == &p(&[0, 1]) && *m == 3));
        assert!(factor_over_integers(&IntPolynomial::zero()).is_err());
    }

    #[test]
    fn degree_cap() {
        let mut f = IntPolynomial::one();
        for k in 1..=13 {
            f = f.mul(&p(&[k, 1]));
        }
        // degree 13 still fine
        assert!(factor_over_integers(&f).is_ok());
        let mut g = IntPolynomial::one();
        for k in 1..=25 {
            g = g.mul(&p(&[k, 1]));
        }
        let err = factor_over_integers(&g).unwrap_err();
        assert!(matches!(err, Error::Capability(_)));
        assert!(err.to_string().contains("undecided"));
    }

    #[test]
    fn graeffe_cubic_is_irreducible() {
        // minimal polynomial of the squared roots: x^3 - 6x^2 + 9x - 1
        assert!(is_irreducible(&p(&[-1, 9, -6, 1])).unwrap());
    }

    #[test]
    fn big_coefficient_quadratics() {
        // (a x - b)(c x - d) with fairly large entries
        let f = p(&[7, 1000003]).mul(&p(&[-999983, 11]));
        let factors = factor_over_integers(&f).unwrap();
        assert_eq!(factors.len(), 2);
        check_product(&f, &factors);
    }
}
