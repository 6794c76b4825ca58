use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::arith::{Integers, MultiPoly};
use crate::error::{Error, Result};

use super::align;

/// Greatest common divisor over the integers by recursive primitive
/// remainder sequences. Integer content is kept, and the sign is chosen so
/// the leading canonical coefficient is positive.
pub fn poly_gcd(f: &MultiPoly<Integers>, g: &MultiPoly<Integers>) -> Result<MultiPoly<Integers>> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (f, g) = align(f, g)?;
    f.require_polynomial()?;
    g.require_polynomial()?;
    Ok(normalize_sign(gcd_rec(&f, &g)))
}

/// [`poly_gcd`] restricted to inputs in at most two variables.
pub fn gcd_bivariate(
    f: &MultiPoly<Integers>,
    g: &MultiPoly<Integers>,
) -> Result<MultiPoly<Integers>> {
    let (fa, ga) = align(f, g)?;
    let mut occurring = fa.occurring_vars();
    occurring.extend(ga.occurring_vars());
    occurring.sort_unstable();
    occurring.dedup();
    if occurring.len() > 2 {
        return Err(Error::InvalidArgument(format!(
            "{} variables occur; at most two are supported",
            occurring.len()
        )));
    }
    poly_gcd(&fa, &ga)
}

fn normalize_sign(f: MultiPoly<Integers>) -> MultiPoly<Integers> {
    match f.leading_coeff() {
        Some(c) if c.is_negative() => -f,
        _ => f,
    }
}

fn gcd_rec(f: &MultiPoly<Integers>, g: &MultiPoly<Integers>) -> MultiPoly<Integers> {
    if f.is_zero() {
        return g.clone();
    }
    if g.is_zero() {
        return f.clone();
    }
    let mut vars = f.occurring_vars();
    vars.extend(g.occurring_vars());
    vars.sort_unstable();
    vars.dedup();
    let Some(&v) = vars.first() else {
        let c = f.constant_term().gcd(&g.constant_term());
        return f.constant_like(c);
    };
    let cf = content_in(f, v);
    let cg = content_in(g, v);
    let c = gcd_rec(&cf, &cg);
    if f.degree_in(v) == Some(0) || g.degree_in(v) == Some(0) {
        return c;
    }
    let pf = exact(f, &cf);
    let pg = exact(g, &cg);
    let (mut a, mut b) = if pf.degree_in(v) >= pg.degree_in(v) {
        (pf, pg)
    } else {
        (pg, pf)
    };
    loop {
        let r = prem(&a, &b, v);
        if r.is_zero() {
            break;
        }
        if r.degree_in(v) == Some(0) {
            return c;
        }
        a = b;
        b = primitive_in(&r, v);
    }
    let h = primitive_in(&b, v);
    &c * &h
}

fn exact(f: &MultiPoly<Integers>, d: &MultiPoly<Integers>) -> MultiPoly<Integers> {
    f.div_exact(d)
        .expect("compatible operands")
        .expect("content divides exactly")
}

/// gcd of the coefficients with respect to variable `v`.
fn content_in(f: &MultiPoly<Integers>, v: usize) -> MultiPoly<Integers> {
    let coeffs = f.coeffs_in(v).expect("polynomial input");
    let mut acc = f.zero_like();
    for c in coeffs.iter().rev() {
        if c.is_zero() {
            continue;
        }
        acc = gcd_rec(&acc, c);
        if acc.is_constant() && is_unit(&acc.constant_term()) {
            break;
        }
    }
    acc
}

fn is_unit(c: &BigInt) -> bool {
    c.abs() == BigInt::from(1)
}

fn primitive_in(f: &MultiPoly<Integers>, v: usize) -> MultiPoly<Integers> {
    let c = content_in(f, v);
    exact(f, &c)
}

/// Pseudo-remainder of `a` by `b` in variable `v`.
fn prem(a: &MultiPoly<Integers>, b: &MultiPoly<Integers>, v: usize) -> MultiPoly<Integers> {
    let db = b.degree_in(v).unwrap_or(0);
    let lb = b.leading_coeff_in(v).expect("polynomial input");
    let da = a.degree_in(v).unwrap_or(0);
    let mut r = a.clone();
    let mut steps = 0;
    while !r.is_zero() && r.degree_in(v).unwrap_or(0) >= db {
        let dr = r.degree_in(v).unwrap();
        let lr = r.leading_coeff_in(v).expect("polynomial input");
        let mut shift = vec![0; r.nvars()];
        shift[v] = dr - db;
        r = &(&r * &lb) - &(&lr * &b.shift(&shift));
        steps += 1;
    }
    let extra = (da - db + 1 - steps).max(0) as u32;
    if extra > 0 {
        r = &r * &lb.pow(extra);
    }
    r
}
