//! Multivariate rational functions over Q in the three free variables
//! `(z, w, gamma)`, with gcd-reduced canonical form, and the constructive
//! rationality certificate: solving the linearized relation for `t` and
//! substituting back into the quintic yields the exact zero function.

use crate::error::{Error, Result};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

pub const VAR_NAMES: [&str; 3] = ["z", "w", "gamma"];

/// Sparse polynomial in `z, w, gamma` over exact rationals; exponent
/// vectors are compared lexicographically.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<[u32; 3], BigRational>,
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mut vars = String::new();
                for (k, &exp) in e.iter().enumerate() {
                    if exp == 1 {
                        vars.push_str(&format!("*{}", VAR_NAMES[k]));
                    } else if exp > 1 {
                        vars.push_str(&format!("*{}^{}", VAR_NAMES[k], exp));
                    }
                }
                format!("({c}){vars}")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl MPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert([0; 3], c);
        }
        MPoly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(n.into()))
    }

    /// Variable `k` (0 = z, 1 = w, 2 = gamma).
    pub fn var(k: usize) -> Self {
        let mut e = [0u32; 3];
        e[k] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, BigRational::one());
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| *e == [0; 3])
    }

    fn insert(&mut self, e: [u32; 3], c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(*e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]];
                out.insert(e, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(e, t)| (*e, t * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, point: &[BigRational; 3]) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for k in 0..3 {
                for _ in 0..e[k] {
                    term *= &point[k];
                }
            }
            acc += term;
        }
        acc
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    fn leading(&self) -> Option<(&[u32; 3], &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Exact division under the lexicographic order; `None` when `other`
    /// does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let (lead_e, lead_c) = other.leading().unwrap();
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while let Some((e, c)) = rem.leading().map(|(e, c)| (*e, c.clone())) {
            if e.iter().zip(lead_e.iter()).any(|(a, b)| a < b) {
                return None;
            }
            let qe = [e[0] - lead_e[0], e[1] - lead_e[1], e[2] - lead_e[2]];
            let qc = c / lead_c;
            let mut t = MPoly::zero();
            t.insert(qe, qc);
            rem = rem.sub(&t.mul(other));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Canonical scaling: leading rational coefficient 1.
    pub fn lex_monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(&(BigRational::one() / c)),
            None => Self::zero(),
        }
    }

    /// Viewed as a univariate polynomial in `var`, the coefficient list in
    /// ascending degree (coefficients are polynomials in the other
    /// variables).
    fn as_univariate(&self, var: usize) -> Vec<MPoly> {
        let d = self.degree_in(var) as usize;
        let mut out = vec![MPoly::zero(); d + 1];
        for (e, c) in &self.terms {
            let mut rest = *e;
            rest[var] = 0;
            out[e[var] as usize].insert(rest, c.clone());
        }
        out
    }

    fn from_univariate(coeffs: &[MPoly], var: usize) -> MPoly {
        let mut out = MPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            let mut xk = MPoly::zero();
            let mut e = [0u32; 3];
            e[var] = k as u32;
            xk.insert(e, BigRational::one());
            out = out.add(&c.mul(&xk));
        }
        out
    }

    /// Multivariate gcd by primitive pseudo-remainder sequences, recursing
    /// on the number of variables. Canonical up to the lex-monic scaling.
    pub fn gcd(&self, other: &Self) -> Self {
        let g = gcd_inner(self, other);
        g.lex_monic()
    }
}

fn gcd_inner(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one();
    }
    // pick the outermost variable occurring in either operand
    let var = (0..3)
        .rev()
        .find(|&v| a.degree_in(v) > 0 || b.degree_in(v) > 0)
        .expect("nonconstant operands");
    if a.degree_in(var) == 0 || b.degree_in(var) == 0 {
        // one operand is free of the main variable: gcd divides the other's
        // content
        let (free, bound) = if a.degree_in(var) == 0 { (a, b) } else { (b, a) };
        let content = content_in(bound, var);
        return gcd_inner(free, &content);
    }
    let ca = content_in(a, var);
    let cb = content_in(b, var);
    let content_gcd = gcd_inner(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    // primitive PRS in `var`
    let (mut f, mut g) = if pa.degree_in(var) >= pb.degree_in(var) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    loop {
        let r = pseudo_rem_in(&f, &g, var);
        if r.is_zero() {
            let prim = g
                .div_exact(&content_in(&g, var))
                .expect("content divides");
            return content_gcd.mul(&prim);
        }
        if r.degree_in(var) == 0 {
            // gcd is free of var: it divides both contents, already handled
            return content_gcd;
        }
        f = g;
        g = r.div_exact(&content_in(&r, var)).expect("content divides");
    }
}

/// GCD of the univariate coefficients (a polynomial in the remaining
/// variables).
fn content_in(p: &MPoly, var: usize) -> MPoly {
    let coeffs = p.as_univariate(var);
    let mut acc = MPoly::zero();
    for c in &coeffs {
        if !c.is_zero() {
            acc = gcd_inner(&acc, c);
        }
    }
    if acc.is_zero() {
        MPoly::one()
    } else {
        acc.lex_monic()
    }
}

/// Pseudo-remainder of `f` by `g` in the given variable.
fn pseudo_rem_in(f: &MPoly, g: &MPoly, var: usize) -> MPoly {
    let gc = g.as_univariate(var);
    let dg = gc.len() - 1;
    let lead_g = gc[dg].clone();
    let mut fc = f.as_univariate(var);
    loop {
        let df = fc.len() - 1;
        if fc.iter().all(|c| c.is_zero()) || df < dg {
            break;
        }
        let lead_f = fc[df].clone();
        // lead_g * f - lead_f * x^(df-dg) * g
        let mut new_fc: Vec<MPoly> = fc.iter().map(|c| c.mul(&lead_g)).collect();
        for (k, gk) in gc.iter().enumerate() {
            let idx = df - dg + k;
            new_fc[idx] = new_fc[idx].sub(&lead_f.mul(gk));
        }
        // trim
        while new_fc.len() > 1 && new_fc.last().map_or(false, |c| c.is_zero()) {
            new_fc.pop();
        }
        fc = new_fc;
        if fc.len() - 1 < dg {
            break;
        }
    }
    MPoly::from_univariate(&fc, var)
}

/// A reduced rational function in `(z, w, gamma)`.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction3 {
    num: MPoly,
    den: MPoly,
}

impl fmt::Debug for RationalFunction3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl RationalFunction3 {
    pub fn new(num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::invalid("rational function with zero denominator"));
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: MPoly, den: MPoly) -> Self {
        if num.is_zero() {
            return RationalFunction3 {
                num,
                den: MPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        // canonical: lex-leading coefficient of the denominator is 1
        let lead = den
            .leading()
            .map(|(_, c)| c.clone())
            .expect("nonzero denominator");
        let inv = BigRational::one() / lead;
        RationalFunction3 {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(p: MPoly) -> Self {
        RationalFunction3 {
            num: p,
            den: MPoly::one(),
        }
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::reduced(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::reduced(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::reduced(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    /// Evaluates at a rational point; `None` when the denominator vanishes.
    pub fn eval(&self, point: &[BigRational; 3]) -> Option<BigRational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point) / d)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ParametrizationReport {
    pub denominator_nonzero: bool,
    pub residual_zero: bool,
    pub section_zero: bool,
    pub residual: String,
}

impl ParametrizationReport {
    pub fn ok(&self) -> bool {
        self.denominator_nonzero && self.residual_zero && self.section_zero
    }
}

/// Builds `t` from the linearized relation
/// `(w^3 - 1)(t + 1) = (z^3 - 1) * gamma * (gamma (t - 1) + 2)`,
/// sets `s = gamma (t - 1) + 1`, and verifies that
/// `(w^3 - 1)(t^2 - 1) - (z^3 - 1)(s^2 - 1)` is the exact zero function.
pub fn verify_parametrization() -> Result<ParametrizationReport> {
    let z = MPoly::var(0);
    let w = MPoly::var(1);
    let gamma = MPoly::var(2);
    let one = MPoly::one();
    let a = w.pow(3).sub(&one); // w^3 - 1
    let b = z.pow(3).sub(&one); // z^3 - 1

    // t * (A - B g^2) = -A - B g^2 + 2 B g
    let den_t = a.sub(&b.mul(&gamma.pow(2)));
    let denominator_nonzero = !den_t.is_zero();
    if !denominator_nonzero {
        return Err(Error::Internal(
            "linear solve denominator (w^3-1) - (z^3-1) gamma^2 vanished".into(),
        ));
    }
    let num_t = a
        .neg()
        .sub(&b.mul(&gamma.pow(2)))
        .add(&b.mul(&gamma).scale(&BigRational::from_integer(2.into())));
    let t = RationalFunction3::new(num_t, den_t)?;
    // s = gamma (t - 1) + 1
    let one_rf = RationalFunction3::from_poly(MPoly::one());
    let gamma_rf = RationalFunction3::from_poly(gamma);
    let s = gamma_rf.mul(&t.sub(&one_rf)).add(&one_rf);

    // (w^3-1)(t^2-1) - (z^3-1)(s^2-1)
    let a_rf = RationalFunction3::from_poly(a.clone());
    let b_rf = RationalFunction3::from_poly(b.clone());
    let residual = a_rf
        .mul(&t.mul(&t).sub(&one_rf))
        .sub(&b_rf.mul(&s.mul(&s).sub(&one_rf)));

    // the obvious section s = t = 1 kills both sides
    let zero_section = a.mul(&MPoly::zero()).sub(&b.mul(&MPoly::zero()));

    Ok(ParametrizationReport {
        denominator_nonzero,
        residual_zero: residual.is_zero(),
        section_zero: zero_section.is_zero(),
        residual: format!("{residual:?}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn gcd_reduction_basics() {
        let z = MPoly::var(0);
        let w = MPoly::var(1);
        // (z+w)(z-w) / (z+w) -> (z-w)
        let num = z.add(&w).mul(&z.sub(&w));
        let den = z.add(&w);
        let f = RationalFunction3::new(num, den).unwrap();
        assert_eq!(f.den(), &MPoly::one());
        assert_eq!(f.num(), &z.sub(&w));
        // zero denominator rejected
        assert!(RationalFunction3::new(z, MPoly::zero()).is_err());
    }

    #[test]
    fn gcd_with_content() {
        let z = MPoly::var(0);
        let g = MPoly::var(2);
        // gcd(g*(z+1)^2, g^2*(z+1)) = g*(z+1), up to scaling
        let a = g.mul(&z.add(&MPoly::one()).pow(2));
        let b = g.pow(2).mul(&z.add(&MPoly::one()));
        let d = a.gcd(&b);
        let expected = g.mul(&z.add(&MPoly::one()));
        assert_eq!(d, expected.lex_monic());
    }

    #[test]
    fn arithmetic_and_eval() {
        let z = MPoly::var(0);
        let w = MPoly::var(1);
        let f = RationalFunction3::new(z.clone(), w.clone()).unwrap(); // z/w
        let g = RationalFunction3::new(w.clone(), z.clone()).unwrap(); // w/z
        let sum = f.add(&g); // (z^2 + w^2) / (zw)
        let p = [rat(2, 1), rat(3, 1), rat(0, 1)];
        assert_eq!(sum.eval(&p).unwrap(), rat(13, 6));
        let prod = f.mul(&g);
        assert!(prod.sub(&RationalFunction3::from_poly(MPoly::one())).is_zero());
    }

    #[test]
    fn parametrization_certificate() {
        let report = verify_parametrization().unwrap();
        assert!(report.denominator_nonzero);
        assert!(report.residual_zero, "residual: {}", report.residual);
        assert!(report.section_zero);
        assert!(report.ok());
    }

    #[test]
    fn parametrization_spot_checks() {
        // evaluate t and s at rational points and check the quintic
        // numerically, exactly as a pre-build oracle would
        let z = MPoly::var(0);
        let w = MPoly::var(1);
        let gamma = MPoly::var(2);
        let one = MPoly::one();
        let a = w.pow(3).sub(&one);
        let b = z.pow(3).sub(&one);
        let den_t = a.sub(&b.mul(&gamma.pow(2)));
        let num_t = a
            .neg()
            .sub(&b.mul(&gamma.pow(2)))
            .add(&b.mul(&gamma).scale(&BigRational::from_integer(2.into())));
        let points = [
            [rat(2, 1), rat(3, 1), rat(1, 2)],
            [rat(-1, 2), rat(5, 3), rat(7, 4)],
            [rat(3, 7), rat(-2, 5), rat(11, 3)],
            [rat(4, 1), rat(4, 1), rat(-3, 2)],
            [rat(-5, 4), rat(9, 8), rat(2, 9)],
        ];
        for p in &points {
            let dt = den_t.eval(p);
            if dt.is_zero() {
                continue;
            }
            let t = num_t.eval(p) / dt;
            let s = &p[2] * (&t - BigRational::one()) + BigRational::one();
            let lhs = a.eval(p) * (&t * &t - BigRational::one());
            let rhs = b.eval(p) * (&s * &s - BigRational::one());
            assert_eq!(lhs, rhs, "at {p:?}");
        }
    }
}
