//! Alexander polynomials of cyclic branched covers as resultants against
//! `1 + v + ... + v^(d-1)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rayon::prelude::*;

use crate::arith::{parse_poly, Integers, Monomial, MultiPoly};
use crate::elim::{divides, resultant};
use crate::error::{Error, Result};

/// Alexander polynomial of the knotted component, in `v`.
pub const COMPONENT_ALEXANDER: &str = "v^4 - 5*v^3 + 7*v^2 - 5*v + 1";

/// `1 + v + ... + v^(d-1)` in the given variable.
fn geometric_sum(d: u64, var: &str) -> MultiPoly<Integers> {
    let mut out = MultiPoly::zero(Integers, &[var]);
    for i in 0..d {
        out.add_term(Monomial::new(vec![i as i32]), BigInt::one());
    }
    out
}

fn check_two_vars(delta: &MultiPoly<Integers>) -> Result<()> {
    if delta.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if delta.nvars() != 2 {
        return Err(Error::InvalidArgument(format!(
            "expected a polynomial in two variables, got [{}]",
            delta.vars().join(" ")
        )));
    }
    delta.require_polynomial()
}

/// Product of `delta(u, zeta)` over the `d`-th roots of unity other than 1,
/// for `delta` in `(u, v)`; the result is in `u`.
pub fn branched_cover_alexander(
    delta: &MultiPoly<Integers>,
    d: u64,
) -> Result<MultiPoly<Integers>> {
    if d == 0 {
        return Err(Error::InvalidArgument(
            "cover degree must be at least 1".into(),
        ));
    }
    check_two_vars(delta)?;
    let u = delta.vars()[0].clone();
    let v = delta.vars()[1].clone();
    if d == 1 {
        return Ok(MultiPoly::one(Integers, &[u]));
    }
    let sum = geometric_sum(d, &v);
    let out = if delta.degree_in(1) == Some(0) {
        delta.drop_var(1).pow(d as u32 - 1)
    } else {
        resultant(&sum, delta, &v)?
    };
    out.with_vars(&[u])
}

/// Product over the nontrivial `d`-th roots of unity of `zeta (zeta - 2)
/// (zeta^3 - zeta + 1)`, the leading `u`-coefficient of the cover polynomial
/// for the bundled link.
pub fn leading_coeff_product(d: u64) -> Result<BigInt> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("need d >= 2, got {d}")));
    }
    let sum = geometric_sum(d, "v");
    let mut acc = BigInt::one();
    for text in ["v", "v - 2", "v^3 - v + 1"] {
        let g = parse_poly(text, &["v"], Integers)?;
        acc *= resultant(&sum, &g, "v")?.constant_term();
    }
    Ok(acc)
}

/// True iff `f = ±u^k` with `k >= 0`.
pub fn is_trivial_alexander(f: &MultiPoly<Integers>) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(f.len() == 1
        && f.terms()
            .all(|(m, c)| c.abs().is_one() && m.exps().iter().all(|&e| e >= 0)))
}

/// One cover degree's summary.
#[derive(Clone, Debug, PartialEq)]
pub struct CoverAlexander {
    pub d: u64,
    pub poly: MultiPoly<Integers>,
    pub degree: i32,
    pub lead: BigInt,
    pub trivial: bool,
}

impl CoverAlexander {
    pub fn compute(delta: &MultiPoly<Integers>, d: u64) -> Result<Self> {
        let poly = branched_cover_alexander(delta, d)?;
        let degree = poly.degree_in(0).unwrap_or(0);
        let lead = poly.coeff(&[degree]);
        let trivial = is_trivial_alexander(&poly)?;
        Ok(CoverAlexander {
            d,
            poly,
            degree,
            lead,
            trivial,
        })
    }

    /// Even covers make sense arithmetically, but the preimage of the
    /// knotted component is then disconnected.
    pub fn is_even(&self) -> bool {
        self.d.is_multiple_of(2)
    }

    pub fn line(&self) -> String {
        let mut s = format!(
            "ALEX d={} degree={} lead={} trivial={}",
            self.d,
            self.degree,
            self.lead,
            if self.trivial { "yes" } else { "no" }
        );
        if self.is_even() {
            s.push_str(" note=even-d");
        }
        s
    }
}

impl fmt::Display for CoverAlexander {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.line())
    }
}

/// Cover summaries for several degrees, in the given order.
pub fn cover_table(delta: &MultiPoly<Integers>, ds: &[u64]) -> Result<Vec<CoverAlexander>> {
    ds.par_iter()
        .map(|&d| CoverAlexander::compute(delta, d))
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct TorresCheck {
    /// `delta(1, v)`.
    pub at_one: MultiPoly<Integers>,
    /// `delta(1, v) / (v + 1)`, if exact.
    pub quotient: Option<MultiPoly<Integers>>,
}

impl TorresCheck {
    pub fn matches(&self, expected: &MultiPoly<Integers>) -> bool {
        self.quotient.as_ref() == Some(expected)
    }
}

/// Divides `delta(1, v)` by `v + 1`; linking number two makes this exact
/// with quotient the Alexander polynomial of the second component.
pub fn torres_check(delta: &MultiPoly<Integers>) -> Result<TorresCheck> {
    check_two_vars(delta)?;
    let u = delta.vars()[0].clone();
    let v = delta.vars()[1].clone();
    let at_one = delta.substitute(&u, &BigInt::one())?;
    let linear = parse_poly(&format!("{v} + 1"), &[v.as_str()], Integers)?;
    let quotient = divides(&linear, &at_one)?.quotient();
    Ok(TorresCheck { at_one, quotient })
}
