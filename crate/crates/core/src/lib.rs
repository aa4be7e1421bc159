//! Exact computational commutative algebra over the rationals (and prime
//! fields): canonical sparse polynomials, Groebner bases, the ideal
//! calculus (colon, saturation, elimination, syzygies, dimension), radical
//! helpers, integral-closedness tests built on generic socles, exact
//! integral closure of monomial ideals via the Newton polyhedron, and
//! Rees-algebra presentations.
//!
//! All arithmetic is exact; resource caps turn runaway computations into
//! errors instead of wrong answers.

pub mod closure;
pub mod error;
pub mod groebner;
pub mod ideal;
pub mod lp;
pub mod matrix;
pub mod monomial;
pub mod monomial_ideal;
pub mod parse;
pub mod poly;
pub mod rees;
pub mod ring;

mod rng;

pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, GroebnerConfig};
pub use ideal::IdealHandle;
pub use matrix::PolyMatrix;
pub use monomial::Monomial;
pub use poly::{Coeff, Polynomial};
pub use ring::{MonomialOrder, Ring};
