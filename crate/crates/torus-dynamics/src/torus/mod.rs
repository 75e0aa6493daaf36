//! Torus automorphisms as matrices over the rational, Gaussian or Eisenstein
//! integers, and their exact linear algebra: realification to the lattice
//! action, exterior powers, characteristic polynomials, finite-order checks.

pub mod matrix;
pub mod ring;

pub use matrix::{IntegerMatrix, TorusMatrix};
pub use ring::{RingElement, RingTag};
