//! Resultants, exact division and gcds over the integers.

mod gcd;
mod modular;
mod sylvester;

use crate::arith::{Integers, MultiPoly, Ring};
use crate::error::{Error, Result};

pub use gcd::{gcd_bivariate, poly_gcd};
pub use sylvester::SylvesterMatrix;

/// How [`resultant_with`] computes the determinant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ResultantAlgorithm {
    /// Evaluation at many points modulo word-sized primes, interpolation,
    /// and Chinese remaindering.
    #[default]
    Modular,
    /// Fraction-free elimination on the Sylvester matrix.
    Bareiss,
}

/// Re-expresses both inputs over a common variable list: the longer list
/// when it contains the other, otherwise `f`'s followed by `g`'s new names.
pub fn align<R: Ring>(f: &MultiPoly<R>, g: &MultiPoly<R>) -> Result<(MultiPoly<R>, MultiPoly<R>)> {
    if f.ring() != g.ring() {
        return Err(Error::DomainMismatch(
            f.ring().domain().to_string(),
            g.ring().domain().to_string(),
        ));
    }
    let contains = |a: &[String], b: &[String]| b.iter().all(|v| a.contains(v));
    let vars: Vec<String> = if contains(f.vars(), g.vars()) {
        f.vars().to_vec()
    } else if contains(g.vars(), f.vars()) {
        g.vars().to_vec()
    } else {
        let mut v = f.vars().to_vec();
        v.extend(g.vars().iter().filter(|x| !f.vars().contains(x)).cloned());
        v
    };
    Ok((f.with_vars(&vars)?, g.with_vars(&vars)?))
}

fn prepare(
    f: &MultiPoly<Integers>,
    g: &MultiPoly<Integers>,
    var: &str,
) -> Result<(MultiPoly<Integers>, MultiPoly<Integers>, usize)> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (f, g) = align(f, g)?;
    let k = f.var_index(var)?;
    f.require_polynomial()?;
    g.require_polynomial()?;
    if f.degree_in(k) == Some(0) && g.degree_in(k) == Some(0) {
        return Err(Error::DegreeZero(var.to_string()));
    }
    Ok((f, g, k))
}

/// Resultant with respect to `var`, as the determinant of the Sylvester
/// matrix, so that `resultant(X - u, X - v, X) = u - v`. The result is over
/// the remaining variables. One input may be free of `var`: then the
/// result is that input raised to the other's degree.
pub fn resultant(
    f: &MultiPoly<Integers>,
    g: &MultiPoly<Integers>,
    var: &str,
) -> Result<MultiPoly<Integers>> {
    resultant_with(f, g, var, ResultantAlgorithm::Modular)
}

pub fn resultant_with(
    f: &MultiPoly<Integers>,
    g: &MultiPoly<Integers>,
    var: &str,
    algorithm: ResultantAlgorithm,
) -> Result<MultiPoly<Integers>> {
    let (f, g, k) = prepare(f, g, var)?;
    match algorithm {
        ResultantAlgorithm::Modular => modular::resultant_modular(&f, &g, k),
        ResultantAlgorithm::Bareiss => SylvesterMatrix::new(&f, &g, k)?.determinant(),
    }
}

/// Outcome of an exact-division query.
#[derive(Clone, Debug, PartialEq)]
pub enum Division<R: Ring> {
    Quotient(MultiPoly<R>),
    Refused,
}

impl<R: Ring> Division<R> {
    pub fn quotient(self) -> Option<MultiPoly<R>> {
        match self {
            Division::Quotient(q) => Some(q),
            Division::Refused => None,
        }
    }

    pub fn is_refused(&self) -> bool {
        matches!(self, Division::Refused)
    }
}

/// Divides `dividend` by `divisor` exactly, or refuses.
pub fn divides<R: Ring>(divisor: &MultiPoly<R>, dividend: &MultiPoly<R>) -> Result<Division<R>> {
    if divisor.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (d, n) = align(divisor, dividend)?;
    Ok(match n.div_exact(&d)? {
        Some(q) => Division::Quotient(q),
        None => Division::Refused,
    })
}
