//! Structural substitutions: stretching one variable, the reciprocal lift
//! `f(t, Y) -> X^k f(X + 1/X, Y)`, and integer content.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{Monomial, MultiPoly};
use super::ring::{Integers, Ring};
use crate::error::{Error, Result};

/// Replaces `var` by `var^m`.
pub fn stretch<R: Ring>(f: &MultiPoly<R>, var: &str, m: u32) -> Result<MultiPoly<R>> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "stretch factor must be at least 1".into(),
        ));
    }
    let i = f.var_index(var)?;
    let mut out = f.zero_like();
    for (mono, c) in f.terms() {
        let mut e = mono.exps().to_vec();
        e[i] *= m as i32;
        out.add_term(Monomial::new(e), c.clone());
    }
    Ok(out)
}

/// `X^t_deg * f(X + 1/X, Y)` for `f` in the variables `(t, Y)`; the result
/// is over `(X, Y)` and palindromic of degree `2 * t_deg` in `X`.
pub fn reciprocal_lift<R: Ring>(f: &MultiPoly<R>, t_deg: u32) -> Result<MultiPoly<R>> {
    if f.nvars() != 2 {
        return Err(Error::InvalidArgument(format!(
            "reciprocal lift expects two variables, got [{}]",
            f.vars().join(" ")
        )));
    }
    f.require_polynomial()?;
    let deg = f.degree_in(0).unwrap_or(0);
    if deg > t_deg as i32 {
        return Err(Error::Precondition(format!(
            "lift degree {t_deg} is below the degree {deg} in `{}`",
            f.vars()[0]
        )));
    }
    let ring = f.ring().clone();
    let vars = ["X".to_string(), f.vars()[1].clone()];
    // (X^2 + 1)^k, the cleared form of (X + 1/X)^k.
    let base = MultiPoly::from_terms(
        ring.clone(),
        &vars,
        [(vec![2, 0], ring.one()), (vec![0, 0], ring.one())],
    )?;
    let mut powers = vec![MultiPoly::one(ring.clone(), &vars)];
    for k in 1..=deg.max(0) as usize {
        powers.push(&powers[k - 1] * &base);
    }
    let coeffs = f.coeffs_in(0)?;
    let mut out = MultiPoly::zero(ring, &vars);
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let cy = c.with_vars(&vars)?;
        let shift = [t_deg as i32 - k as i32, 0];
        out = &out + &(&powers[k] * &cy).shift(&shift);
    }
    Ok(out)
}

/// Splits `f` into a positive integer content and a primitive part that
/// carries the sign.
pub fn content_primitive(f: &MultiPoly<Integers>) -> Result<(BigInt, MultiPoly<Integers>)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut g = BigInt::zero();
    for (_, c) in f.terms() {
        g = g.gcd(c);
        if g.is_one() {
            return Ok((g, f.clone()));
        }
    }
    let g = g.abs();
    let prim = f.map_coeffs(Integers, |c| c / &g);
    Ok((g, prim))
}
