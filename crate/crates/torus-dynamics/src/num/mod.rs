//! Exact numerics: integer polynomials, real-root isolation, factorization,
//! unit-disc root counting and certified max-modulus computation.

pub mod discs;
pub mod factor;
pub mod maxmod;
pub mod poly;
pub mod real_algebraic;
pub mod sturm;

pub use poly::IntPolynomial;
pub use real_algebraic::RealAlgebraic;
pub use sturm::{isolate_real_roots, RootIsolation};
