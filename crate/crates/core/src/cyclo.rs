//! Cyclotomic polynomials, norms from resultants, and unit tests for
//! `2cos(2pi/d) - c`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::modp::prime_factors_u64;
use crate::arith::{Integers, Monomial, MultiPoly};
use crate::elim::resultant;
use crate::error::{Error, Result};
use crate::words::symmetrize;

/// Index `d >= 1` of a cyclotomic polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclotomicIndex(u64);

impl CyclotomicIndex {
    pub fn new(d: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidArgument(
                "cyclotomic index must be at least 1".into(),
            ));
        }
        Ok(CyclotomicIndex(d))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn divisors(self) -> Vec<u64> {
        (1..=self.0).filter(|e| self.0.is_multiple_of(*e)).collect()
    }

    /// Euler's totient, the degree of the cyclotomic polynomial.
    pub fn totient(self) -> u64 {
        let mut n = self.0;
        for q in prime_factors_u64(self.0) {
            n = n / q * (q - 1);
        }
        n
    }
}

type Dense = Arc<Vec<BigInt>>;

fn cache() -> &'static Mutex<HashMap<u64, Dense>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Dense>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Exact quotient of `num` by a monic `den`, both low degree first.
fn div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut q = vec![BigInt::zero(); num.len() - dd];
    for k in (dd..num.len()).rev() {
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        for (j, a) in den.iter().enumerate() {
            rem[k - dd + j] -= &c * a;
        }
        q[k - dd] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    q
}

fn mul_dense(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn cyclotomic_dense(d: u64) -> Dense {
    if let Some(c) = cache().lock().expect("cache lock").get(&d) {
        return c.clone();
    }
    let mut num = vec![BigInt::zero(); d as usize + 1];
    num[0] = -BigInt::one();
    num[d as usize] = BigInt::one();
    let mut den = vec![BigInt::one()];
    for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
        den = mul_dense(&den, &cyclotomic_dense(e));
    }
    let phi = Arc::new(div_monic(&num, &den));
    cache().lock().expect("cache lock").insert(d, phi.clone());
    phi
}

fn to_poly(c: &[BigInt], var: &str) -> MultiPoly<Integers> {
    let mut out = MultiPoly::zero(Integers, &[var]);
    for (i, a) in c.iter().enumerate() {
        out.add_term(Monomial::new(vec![i as i32]), a.clone());
    }
    out
}

/// The `d`-th cyclotomic polynomial in `x`, from `x^d - 1 = prod_{e | d} Phi_e`.
pub fn cyclotomic(d: u64) -> Result<MultiPoly<Integers>> {
    cyclotomic_in(d, "x")
}

pub fn cyclotomic_in(d: u64, var: &str) -> Result<MultiPoly<Integers>> {
    CyclotomicIndex::new(d)?;
    Ok(to_poly(&cyclotomic_dense(d), var))
}

/// Product of `g` over the primitive `d`-th roots of unity, as the
/// resultant of the cyclotomic polynomial with `g`.
pub fn norm_of(g: &MultiPoly<Integers>, d: u64) -> Result<BigInt> {
    CyclotomicIndex::new(d)?;
    let occurring = g.occurring_vars();
    if occurring.len() > 1 {
        return Err(Error::InvalidArgument(format!(
            "expected a univariate polynomial, got [{}]",
            g.vars().join(" ")
        )));
    }
    if g.is_zero() {
        return Ok(BigInt::zero());
    }
    g.require_polynomial()?;
    let var = occurring
        .first()
        .map(|&i| g.vars()[i].clone())
        .unwrap_or_else(|| "x".into());
    let g1 = g.with_vars(std::slice::from_ref(&var))?;
    let phi = cyclotomic_in(d, &var)?;
    Ok(resultant(&phi, &g1, &var)?.constant_term())
}

/// True iff `d` is a power of a single prime.
pub fn prime_power(d: u64) -> Result<bool> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!(
            "prime_power needs d >= 2, got {d}"
        )));
    }
    Ok(prime_factors_u64(d).len() == 1)
}

/// Minimal polynomial of `2cos(2pi/d)` in `X`, for `d >= 3`.
pub fn real_cyclotomic(d: u64) -> Result<MultiPoly<Integers>> {
    if d < 3 {
        return Err(Error::InvalidArgument(format!("need d >= 3, got {d}")));
    }
    let phi = cyclotomic_dense(d);
    let half = (phi.len() as i32 - 1) / 2;
    let mut laurent = MultiPoly::zero(Integers, &["x"]);
    for (i, a) in phi.iter().enumerate() {
        laurent.add_term(Monomial::new(vec![i as i32 - half]), a.clone());
    }
    symmetrize(&laurent)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitVerdict {
    pub expression: String,
    /// Norm from the real subfield `Q(2cos(2pi/d))` down to the rationals.
    pub norm: BigInt,
    /// Norm from the full cyclotomic field: the square of `norm`.
    pub full_norm: BigInt,
    pub is_unit: bool,
}

fn shift_label(d: u64, c: i64) -> String {
    match c {
        0 => format!("2cos(2pi/{d})"),
        c if c < 0 => format!("2cos(2pi/{d}) + {}", c.unsigned_abs()),
        c => format!("2cos(2pi/{d}) - {c}"),
    }
}

/// Unit status of `2cos(2pi/d) - c` for `d >= 3`.
pub fn unit_2cos_shift(d: u64, c: i64) -> Result<UnitVerdict> {
    if d < 3 {
        return Err(Error::InvalidArgument(format!("need d >= 3, got {d}")));
    }
    let x = |e: i32, k: i64| (vec![e], BigInt::from(k));
    let quad = MultiPoly::from_terms(Integers, &["x"], [x(2, 1), x(1, -c), x(0, 1)])?;
    let mono = MultiPoly::from_terms(Integers, &["x"], [x(1, 1)])?;
    // zeta^2 - c zeta + 1 = zeta (zeta + 1/zeta - c)
    let (full, rem) = norm_of(&quad, d)?.div_rem(&norm_of(&mono, d)?);
    debug_assert!(rem.is_zero());
    let psi = real_cyclotomic(d)?;
    let n = psi.degree_in(0).unwrap_or(0);
    let value = psi.evaluate(&[BigInt::from(c)])?;
    let norm = if n % 2 == 0 { value } else { -value };
    if &norm * &norm != full.abs() {
        return Err(Error::Precondition(format!(
            "norms of {} disagree: {norm} squared is not {full}",
            shift_label(d, c)
        )));
    }
    Ok(UnitVerdict {
        expression: shift_label(d, c),
        is_unit: norm.abs().is_one(),
        norm,
        full_norm: full,
    })
}

/// Unit status of `s + 1` and `s - 2` at `s = 2cos(2pi/n)`, where `n = d`
/// for odd `d` and `n = 2d` for even `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitReport {
    pub d: u64,
    pub order: u64,
    pub s_plus_1: UnitVerdict,
    pub s_minus_2: UnitVerdict,
}

impl UnitReport {
    /// Integrality is obstructed unless both are units. The converse is
    /// conditional on irreducibility, which is not checked here.
    pub fn obstructed(&self) -> bool {
        !(self.s_plus_1.is_unit && self.s_minus_2.is_unit)
    }

    pub fn conclusion(&self) -> &'static str {
        if self.obstructed() {
            "integral trace obstructed"
        } else {
            "integral trace not obstructed (conditional)"
        }
    }

    pub fn line(&self) -> String {
        format!(
            "UNITS d={} order={} s_plus_1={} s_minus_2={} obstruction={}",
            self.d,
            self.order,
            self.s_plus_1.norm,
            self.s_minus_2.norm,
            if self.obstructed() { "yes" } else { "no" }
        )
    }
}

impl fmt::Display for UnitReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.line())
    }
}

pub fn m137_unit_report(d: u64) -> Result<UnitReport> {
    if d < 3 {
        return Err(Error::InvalidArgument(format!("need d >= 3, got {d}")));
    }
    let order = if d % 2 == 1 { d } else { 2 * d };
    Ok(UnitReport {
        d,
        order,
        s_plus_1: unit_2cos_shift(order, -1)?,
        s_minus_2: unit_2cos_shift(order, 2)?,
    })
}
