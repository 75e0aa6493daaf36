//! Exact symbolic verification for the quotient of the triple product of
//! cubic curves `y^2 = x^3 - 1` by the order-6 diagonal action: the
//! 13-generator invariant ring, the field-generator identities, and the
//! explicit rational parametrization of the quintic model.

pub mod checks;
pub mod cyclo;
pub mod element;
pub mod ratfun;

pub use cyclo::CycloRational;
pub use element::{Monomial, QuotientElement};
pub use ratfun::{MPoly, RationalFunction3};
