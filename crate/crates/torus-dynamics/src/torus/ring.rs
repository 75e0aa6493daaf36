//! Elements `a + b*mu` of the rational integers, the Gaussian integers
//! (`mu = i`, `i^2 = -1`) or the Eisenstein integers (`mu = w`,
//! `w^2 = -1 - w`).

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RingTag {
    /// Plain rational integers.
    Integer,
    /// Gaussian integers, `i^2 = -1`.
    Gaussian,
    /// Eisenstein integers, `w^2 = -1 - w` with `w` a primitive cube root
    /// of unity.
    Eisenstein,
}

impl RingTag {
    /// CLI names: `z`, `zi`, `zw`.
    pub fn parse(s: &str) -> Result<RingTag> {
        match s {
            "z" => Ok(RingTag::Integer),
            "zi" => Ok(RingTag::Gaussian),
            "zw" => Ok(RingTag::Eisenstein),
            other => Err(Error::invalid(format!(
                "unknown ring {other:?}; expected z, zi or zw"
            ))),
        }
    }

    pub fn cli_name(&self) -> &'static str {
        match self {
            RingTag::Integer => "z",
            RingTag::Gaussian => "zi",
            RingTag::Eisenstein => "zw",
        }
    }

    pub fn generator_symbol(&self) -> Option<char> {
        match self {
            RingTag::Integer => None,
            RingTag::Gaussian => Some('i'),
            RingTag::Eisenstein => Some('w'),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    a: BigInt,
    b: BigInt,
    tag: RingTag,
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tag.generator_symbol() {
            None => write!(f, "{}", self.a),
            Some(sym) => {
                if self.b.is_zero() {
                    write!(f, "{}", self.a)
                } else if self.a.is_zero() {
                    write!(f, "{}*{}", self.b, sym)
                } else if self.b.is_negative() {
                    write!(f, "{}{}*{}", self.a, self.b, sym)
                } else {
                    write!(f, "{}+{}*{}", self.a, self.b, sym)
                }
            }
        }
    }
}

impl RingElement {
    pub fn new(a: BigInt, b: BigInt, tag: RingTag) -> Result<Self> {
        if tag == RingTag::Integer && !b.is_zero() {
            return Err(Error::invalid(
                "ring z has no adjoined generator; imaginary part must be 0",
            ));
        }
        Ok(RingElement { a, b, tag })
    }

    pub fn from_int(a: i64, tag: RingTag) -> Self {
        RingElement {
            a: BigInt::from(a),
            b: BigInt::zero(),
            tag,
        }
    }

    pub fn from_parts(a: i64, b: i64, tag: RingTag) -> Result<Self> {
        Self::new(BigInt::from(a), BigInt::from(b), tag)
    }

    pub fn zero(tag: RingTag) -> Self {
        Self::from_int(0, tag)
    }

    pub fn one(tag: RingTag) -> Self {
        Self::from_int(1, tag)
    }

    /// The adjoined generator itself; `None` over the rational integers.
    pub fn generator(tag: RingTag) -> Option<Self> {
        match tag {
            RingTag::Integer => None,
            _ => Some(RingElement {
                a: BigInt::zero(),
                b: BigInt::one(),
                tag,
            }),
        }
    }

    pub fn tag(&self) -> RingTag {
        self.tag
    }

    pub fn re(&self) -> &BigInt {
        &self.a
    }

    pub fn im(&self) -> &BigInt {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    fn check_tag(&self, other: &Self) {
        assert_eq!(self.tag, other.tag, "mixed ring tags in arithmetic");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_tag(other);
        RingElement {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            tag: self.tag,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_tag(other);
        RingElement {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            tag: self.tag,
        }
    }

    pub fn neg(&self) -> Self {
        RingElement {
            a: -&self.a,
            b: -&self.b,
            tag: self.tag,
        }
    }

    /// Multiplication with the tag's reduction rule applied.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_tag(other);
        let (a1, b1, a2, b2) = (&self.a, &self.b, &other.a, &other.b);
        let (a, b) = match self.tag {
            RingTag::Integer => (a1 * a2, BigInt::zero()),
            // (a1 + b1 i)(a2 + b2 i) = a1 a2 - b1 b2 + (a1 b2 + a2 b1) i
            RingTag::Gaussian => (a1 * a2 - b1 * b2, a1 * b2 + a2 * b1),
            // w^2 = -1 - w:
            // (a1 + b1 w)(a2 + b2 w) = a1 a2 - b1 b2 + (a1 b2 + a2 b1 - b1 b2) w
            RingTag::Eisenstein => {
                let cross = a1 * b2 + a2 * b1;
                (a1 * a2 - b1 * b2, cross - b1 * b2)
            }
        };
        RingElement { a, b, tag: self.tag }
    }

    /// Conjugate: `i -> -i`, `w -> w^2 = -1-w`.
    pub fn conj(&self) -> Self {
        match self.tag {
            RingTag::Integer => self.clone(),
            RingTag::Gaussian => RingElement {
                a: self.a.clone(),
                b: -&self.b,
                tag: self.tag,
            },
            RingTag::Eisenstein => RingElement {
                a: &self.a - &self.b,
                b: -&self.b,
                tag: self.tag,
            },
        }
    }

    /// Field norm, always a nonnegative rational integer.
    pub fn norm(&self) -> BigInt {
        match self.tag {
            RingTag::Integer => &self.a * &self.a,
            RingTag::Gaussian => &self.a * &self.a + &self.b * &self.b,
            RingTag::Eisenstein => &self.a * &self.a - &self.a * &self.b + &self.b * &self.b,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// Inverse of a unit.
    pub fn unit_inverse(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::invalid(format!("{self} is not a unit")));
        }
        Ok(self.conj())
    }

    /// Exact division; `None` when `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        self.check_tag(other);
        if other.is_zero() {
            return None;
        }
        let n = other.norm();
        let num = self.mul(&other.conj());
        let (qa, ra) = num_integer::Integer::div_rem(&num.a, &n);
        let (qb, rb) = num_integer::Integer::div_rem(&num.b, &n);
        if ra.is_zero() && rb.is_zero() {
            Some(RingElement {
                a: qa,
                b: qb,
                tag: self.tag,
            })
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: i64, b: i64) -> RingElement {
        RingElement::from_parts(a, b, RingTag::Eisenstein).unwrap()
    }

    fn gi(a: i64, b: i64) -> RingElement {
        RingElement::from_parts(a, b, RingTag::Gaussian).unwrap()
    }

    #[test]
    fn eisenstein_reduction() {
        // w * w = -1 - w
        let omega = RingElement::generator(RingTag::Eisenstein).unwrap();
        assert_eq!(omega.mul(&omega), w(-1, -1));
        // w^3 = 1
        assert_eq!(omega.mul(&omega).mul(&omega), w(1, 0));
        // (-w)^6 = 1 and no smaller power
        let m = omega.neg();
        let mut acc = RingElement::one(RingTag::Eisenstein);
        let mut first_one = 0;
        for k in 1..=6 {
            acc = acc.mul(&m);
            if acc.is_one() && first_one == 0 {
                first_one = k;
            }
        }
        assert_eq!(first_one, 6);
    }

    #[test]
    fn gaussian_reduction() {
        let i = RingElement::generator(RingTag::Gaussian).unwrap();
        assert_eq!(i.mul(&i), gi(-1, 0));
        assert_eq!(i.mul(&i).mul(&i).mul(&i), gi(1, 0));
    }

    #[test]
    fn norms_are_nonnegative_integers() {
        assert_eq!(w(2, 3).norm(), BigInt::from(4 - 6 + 9));
        assert_eq!(gi(2, 3).norm(), BigInt::from(13));
        assert_eq!(
            RingElement::from_int(-5, RingTag::Integer).norm(),
            BigInt::from(25)
        );
        // multiplicativity
        let (x, y) = (w(2, -1), w(-3, 4));
        assert_eq!(x.mul(&y).norm(), x.norm() * y.norm());
    }

    #[test]
    fn units_and_inverses() {
        let units = [w(1, 0), w(-1, 0), w(0, 1), w(0, -1), w(-1, -1), w(1, 1)];
        for u in &units {
            assert!(u.is_unit(), "{u} should be a unit");
            assert!(u.mul(&u.unit_inverse().unwrap()).is_one());
        }
        assert!(!w(2, 0).is_unit());
        assert!(w(2, 0).unit_inverse().is_err());
    }

    #[test]
    fn exact_division() {
        let x = w(2, -1).mul(&w(-3, 4));
        assert_eq!(x.div_exact(&w(2, -1)), Some(w(-3, 4)));
        assert_eq!(w(1, 0).div_exact(&w(2, 0)), None);
    }

    #[test]
    fn integer_tag_rejects_imaginary() {
        assert!(RingElement::from_parts(1, 2, RingTag::Integer).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(w(1, 2).to_string(), "1+2*w");
        assert_eq!(w(1, -2).to_string(), "1-2*w");
        assert_eq!(w(0, 1).to_string(), "1*w");
        assert_eq!(gi(3, 0).to_string(), "3");
        assert_eq!(RingElement::from_int(-7, RingTag::Integer).to_string(), "-7");
    }
}
