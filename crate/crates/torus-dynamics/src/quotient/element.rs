//! Normal-form elements of `Q(w)[y1,y2,y3,x1,x2,x3] / (y_k^2 - x_k^3 + 1)`.
//!
//! The three relations are used left to right as rewrite rules
//! `x_k^3 -> y_k^2 + 1`, so every element has a unique representative with
//! all x-exponents at most 2; equality is comparison of coefficient maps.

use crate::quotient::cyclo::CycloRational;
use std::collections::BTreeMap;
use std::fmt;

/// A reduced monomial: x-exponents capped at 2, y-exponents free.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial {
    pub x: [u8; 3],
    pub y: [u32; 3],
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        x: [0; 3],
        y: [0; 3],
    };

    pub fn total_degree(&self) -> u32 {
        self.x.iter().map(|&e| e as u32).sum::<u32>() + self.y.iter().sum::<u32>()
    }

    pub fn x_degree(&self) -> u32 {
        self.x.iter().map(|&e| e as u32).sum()
    }

    pub fn y_degree(&self) -> u32 {
        self.y.iter().sum()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (k, &e) in self.y.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("y{}", k + 1)),
                _ => parts.push(format!("y{}^{}", k + 1, e)),
            }
        }
        for (k, &e) in self.x.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("x{}", k + 1)),
                _ => parts.push(format!("x{}^{}", k + 1, e)),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// An element in normal form; the zero element has an empty term map.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QuotientElement {
    terms: BTreeMap<Monomial, CycloRational>,
}

impl fmt::Debug for QuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if *m == Monomial::ONE {
                    format!("({c})")
                } else {
                    format!("({c})*{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl QuotientElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(CycloRational::one())
    }

    pub fn constant(c: CycloRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::ONE, c);
        }
        QuotientElement { terms }
    }

    /// The variable `x_{k+1}` (`k` is 0-based).
    pub fn x(k: usize) -> Self {
        let mut m = Monomial::ONE;
        m.x[k] = 1;
        Self::from_monomial(m, CycloRational::one())
    }

    /// The variable `y_{k+1}` (`k` is 0-based).
    pub fn y(k: usize) -> Self {
        let mut m = Monomial::ONE;
        m.y[k] = 1;
        Self::from_monomial(m, CycloRational::one())
    }

    fn from_monomial(m: Monomial, c: CycloRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        QuotientElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CycloRational)> {
        self.terms.iter()
    }

    /// The term with the largest monomial in the fixed monomial order.
    pub fn leading_term(&self) -> Option<(Monomial, CycloRational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c.clone()))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn max_total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    fn insert(&mut self, m: Monomial, c: CycloRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        QuotientElement {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &CycloRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QuotientElement {
            terms: self
                .terms
                .iter()
                .map(|(m, t)| (*m, t.mul(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1.mul(c2);
                let y = [
                    m1.y[0] + m2.y[0],
                    m1.y[1] + m2.y[1],
                    m1.y[2] + m2.y[2],
                ];
                let x = [
                    m1.x[0] as u32 + m2.x[0] as u32,
                    m1.x[1] as u32 + m2.x[1] as u32,
                    m1.x[2] as u32 + m2.x[2] as u32,
                ];
                out = out.add(&reduce_raw_monomial(x, y, c));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The diagonal symmetry `g^k`: `x_j -> w^k x_j`, `y_j -> (-1)^k y_j`.
    pub fn act(&self, k: i64) -> Self {
        let k = k.rem_euclid(6);
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let omega_factor = CycloRational::omega_pow(k * m.x_degree() as i64);
            let sign = if (k * m.y_degree() as i64) % 2 == 0 {
                CycloRational::one()
            } else {
                CycloRational::from_int(-1)
            };
            out.insert(*m, c.mul(&omega_factor).mul(&sign));
        }
        out
    }
}

/// Normal form of a raw term list: monomials with unbounded x-exponents and
/// cyclotomic-rational coefficients, reduced by `x_k^3 -> y_k^2 + 1`.
pub fn normal_form(raw: &[(CycloRational, [u32; 3], [u32; 3])]) -> QuotientElement {
    let mut out = QuotientElement::zero();
    for (c, x, y) in raw {
        out = out.add(&reduce_raw_monomial(*x, *y, c.clone()));
    }
    out
}

/// Reduces one raw monomial: each `x_k^(3q+r)` becomes `(y_k^2 + 1)^q x_k^r`.
fn reduce_raw_monomial(x: [u32; 3], y: [u32; 3], c: CycloRational) -> QuotientElement {
    let mut out = QuotientElement::from_monomial(
        Monomial {
            x: [(x[0] % 3) as u8, (x[1] % 3) as u8, (x[2] % 3) as u8],
            y,
        },
        c,
    );
    for k in 0..3 {
        let q = x[k] / 3;
        for _ in 0..q {
            // multiply by (y_k^2 + 1)
            let mut ysq = Monomial::ONE;
            ysq.y[k] = 2;
            let factor = QuotientElement::from_monomial(ysq, CycloRational::one())
                .add(&QuotientElement::one());
            out = out.mul(&factor);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> CycloRational {
        CycloRational::from_int(n)
    }

    #[test]
    fn cube_reduction() {
        // x1^3 -> y1^2 + 1
        let e = normal_form(&[(c(1), [3, 0, 0], [0, 0, 0])]);
        let expected = QuotientElement::y(0)
            .pow(2)
            .add(&QuotientElement::one());
        assert_eq!(e, expected);
        // x1^4 -> x1*y1^2 + x1
        let e = normal_form(&[(c(1), [4, 0, 0], [0, 0, 0])]);
        let expected = QuotientElement::x(0).mul(&QuotientElement::y(0).pow(2))
            .add(&QuotientElement::x(0));
        assert_eq!(e, expected);
        // y1^2 * x2^3 -> y1^2*y2^2 + y1^2
        let e = normal_form(&[(c(1), [0, 3, 0], [2, 0, 0])]);
        let y1sq = QuotientElement::y(0).pow(2);
        let expected = y1sq.mul(&QuotientElement::y(1).pow(2)).add(&y1sq);
        assert_eq!(e, expected);
    }

    #[test]
    fn normal_form_is_idempotent_and_multiplicative() {
        let e1 = normal_form(&[(c(2), [5, 1, 0], [1, 0, 3]), (c(-1), [0, 4, 2], [0, 1, 0])]);
        // feed the reduced terms back in as raw terms
        let raw: Vec<(CycloRational, [u32; 3], [u32; 3])> = e1
            .terms()
            .map(|(m, c)| {
                (
                    c.clone(),
                    [m.x[0] as u32, m.x[1] as u32, m.x[2] as u32],
                    m.y,
                )
            })
            .collect();
        assert_eq!(normal_form(&raw), e1);
        // ring homomorphism on a product
        let a = normal_form(&[(c(1), [2, 0, 0], [0, 1, 0])]);
        let b = normal_form(&[(c(1), [2, 0, 0], [1, 0, 0])]);
        let prod_then_reduce = normal_form(&[(c(1), [4, 0, 0], [1, 1, 0])]);
        assert_eq!(a.mul(&b), prod_then_reduce);
    }

    #[test]
    fn action_basics() {
        let x1 = QuotientElement::x(0);
        assert_eq!(x1.act(1), x1.scale(&CycloRational::omega()));
        // y1*y2 is fixed (two sign flips)
        let y1y2 = QuotientElement::y(0).mul(&QuotientElement::y(1));
        assert_eq!(y1y2.act(1), y1y2);
        // x1*x2*x3 is fixed (w^3 = 1)
        let xxx = QuotientElement::x(0)
            .mul(&QuotientElement::x(1))
            .mul(&QuotientElement::x(2));
        assert_eq!(xxx.act(1), xxx);
        // y1 flips under g^3 and g
        let y1 = QuotientElement::y(0);
        assert_eq!(y1.act(3), y1.neg());
        assert_eq!(y1.act(1), y1.neg());
        // g^6 = id on a messy element
        let e = normal_form(&[(c(3), [2, 1, 0], [1, 0, 2]), (c(-5), [0, 0, 1], [2, 1, 1])]);
        assert_eq!(e.act(6), e);
        assert_eq!(e.act(1).act(1).act(1).act(1).act(1).act(1), e);
        // g^2 and g^3 commute
        assert_eq!(e.act(2).act(3), e.act(3).act(2));
    }

    #[test]
    fn action_respects_the_relation() {
        // act must send x_k^3 and y_k^2 + 1 to the same element
        let lhs = normal_form(&[(c(1), [3, 0, 0], [0, 0, 0])]).act(1);
        let rhs = QuotientElement::y(0).pow(2).add(&QuotientElement::one()).act(1);
        assert_eq!(lhs, rhs);
    }
}
