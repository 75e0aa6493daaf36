//! The field Q(w) with `w^2 = -1 - w` (primitive cube root of unity),
//! represented as `a + b*w` over exact rationals.

use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct CycloRational {
    a: BigRational,
    b: BigRational,
}

impl fmt::Display for CycloRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*w", self.b)
        } else {
            write!(f, "{}+{}*w", self.a, self.b)
        }
    }
}

impl fmt::Debug for CycloRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl CycloRational {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        CycloRational { a, b }
    }

    pub fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Self::new(BigRational::one(), BigRational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    pub fn omega() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    /// `w^k` for any integer `k` (reduced mod 3).
    pub fn omega_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => Self::one(),
            1 => Self::omega(),
            _ => Self::new(
                BigRational::from_integer((-1).into()),
                BigRational::from_integer((-1).into()),
            ),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.a + &other.a, &self.b + &other.b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(&self.a - &other.a, &self.b - &other.b)
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.a.clone(), -self.b.clone())
    }

    /// `(a1 + b1 w)(a2 + b2 w)` reduced by `w^2 = -1 - w`.
    pub fn mul(&self, other: &Self) -> Self {
        let cross = &self.a * &other.b + &self.b * &other.a;
        let bb = &self.b * &other.b;
        Self::new(&self.a * &other.a - &bb, cross - bb)
    }

    /// Conjugate `w -> w^2`.
    pub fn conj(&self) -> Self {
        Self::new(&self.a - &self.b, -self.b.clone())
    }

    /// Field norm `a^2 - ab + b^2`, zero only at zero.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero in Q(w)");
        let n = self.norm();
        let c = self.conj();
        Self::new(c.a / &n, c.b / &n)
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_is_a_cube_root_of_unity() {
        let w = CycloRational::omega();
        assert_eq!(w.mul(&w), CycloRational::omega_pow(2));
        assert_eq!(w.mul(&w).mul(&w), CycloRational::one());
        // 1 + w + w^2 = 0
        assert!(CycloRational::one()
            .add(&w)
            .add(&CycloRational::omega_pow(2))
            .is_zero());
    }

    #[test]
    fn field_inverse() {
        let x = CycloRational::new(
            BigRational::new(3.into(), 2.into()),
            BigRational::new((-1).into(), 5.into()),
        );
        assert_eq!(x.mul(&x.inv()), CycloRational::one());
        let w = CycloRational::omega();
        assert_eq!(w.inv(), CycloRational::omega_pow(2));
    }
}
