//! Exact computation of dynamical degrees, topological entropy, primitivity
//! certificates and Salem/Pisot classification for automorphisms of complex
//! tori presented as matrices over the rational, Gaussian or Eisenstein
//! integers, plus symbolic verification of the associated quotient-threefold
//! identities.
//!
//! The runnable examples under `examples/` cover the major capabilities;
//! the `tordyn` binary exposes the same operations as subcommands.

pub mod cli;
pub mod degrees;
pub mod error;
pub mod num;
pub mod parse;
pub mod primitivity;
pub mod quotient;
pub mod report;
pub mod salem;
pub mod scan;
pub mod torus;

pub use degrees::{degree_profile, DegreeProfile};
pub use error::{Error, Result};
pub use num::{IntPolynomial, RealAlgebraic};
pub use primitivity::{certify, PrimitivityCertificate};
pub use salem::{classify, ClassificationEvidence};
pub use torus::{IntegerMatrix, RingElement, RingTag, TorusMatrix};
