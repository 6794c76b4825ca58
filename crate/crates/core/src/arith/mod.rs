//! Exact coefficient domains and polynomial arithmetic.

pub mod modp;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod subst;
pub mod univariate;

pub use parse::{parse_elem, parse_fixture, parse_laurent, parse_poly, print_fixture};
pub use poly::{LaurentPoly, Monomial, MultiPoly, PolyOp};
pub use ring::{
    CoefficientDomain, CyclotomicResidue, Field, Integers, PrimeField, PrimeSquareField, QuadElem,
    QuadraticField, Rationals, Ring,
};
pub use subst::{content_primitive, reciprocal_lift, stretch};
pub use univariate::UniPoly;
