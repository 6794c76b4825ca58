//! Exact coefficient domains.
//!
//! A domain is a small value (it may carry a modulus or a discriminant) and
//! elements are plain data; all arithmetic goes through the domain, so a
//! polynomial always knows how to combine its own coefficients.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modp;
use crate::error::{Error, Result};

/// Runtime tag naming a coefficient domain, as written in fixture headers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientDomain {
    Integers,
    Rationals,
    PrimeField(u64),
    QuadraticField(i64),
    /// `F_p` together with a distinguished element of multiplicative order `order`.
    CyclotomicResidue {
        p: u64,
        order: u64,
    },
    /// `F_p(sqrt(delta))` for a quadratic non-residue `delta`.
    PrimeSquare {
        p: u64,
        delta: u64,
    },
}

impl fmt::Display for CoefficientDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientDomain::Integers => write!(f, "Z"),
            CoefficientDomain::Rationals => write!(f, "Q"),
            CoefficientDomain::PrimeField(p) => write!(f, "Fp:{p}"),
            CoefficientDomain::QuadraticField(d) => write!(f, "Quad:{d}"),
            CoefficientDomain::CyclotomicResidue { p, order } => write!(f, "Cyc:{p}:{order}"),
            CoefficientDomain::PrimeSquare { p, delta } => write!(f, "Fp2:{p}:{delta}"),
        }
    }
}

impl FromStr for CoefficientDomain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("unrecognised domain `{s}`"));
        let s = s.trim();
        match s {
            "Z" => return Ok(CoefficientDomain::Integers),
            "Q" => return Ok(CoefficientDomain::Rationals),
            _ => {}
        }
        let mut parts = s.split(':');
        let head = parts.next().ok_or_else(bad)?;
        let nums: Vec<&str> = parts.collect();
        match (head, nums.as_slice()) {
            ("Fp", [p]) => Ok(CoefficientDomain::PrimeField(p.parse().map_err(|_| bad())?)),
            ("Quad", [d]) => Ok(CoefficientDomain::QuadraticField(
                d.parse().map_err(|_| bad())?,
            )),
            ("Cyc", [p, d]) => Ok(CoefficientDomain::CyclotomicResidue {
                p: p.parse().map_err(|_| bad())?,
                order: d.parse().map_err(|_| bad())?,
            }),
            ("Fp2", [p, d]) => Ok(CoefficientDomain::PrimeSquare {
                p: p.parse().map_err(|_| bad())?,
                delta: d.parse().map_err(|_| bad())?,
            }),
            _ => Err(bad()),
        }
    }
}

/// A commutative ring with exact arithmetic.
pub trait Ring: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Send + Sync;

    fn domain(&self) -> CoefficientDomain;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;

    /// Multiplicative inverse when it exists in the ring.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Canonical text form, parseable back through the expression grammar.
    fn format(&self, a: &Self::Elem) -> String;

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `a / b` when `b` divides `a` in the ring.
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// True when the element prints with a leading minus sign that the
    /// expression printer may hoist into a binary operator.
    fn is_negative(&self, _a: &Self::Elem) -> bool {
        false
    }

    /// A square root of the integer `d`, when the ring has a designated one.
    fn sqrt_int(&self, _d: &BigInt) -> Option<Self::Elem> {
        None
    }
}

/// Rings in which every nonzero element is invertible.
pub trait Field: Ring {}

// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn domain(&self) -> CoefficientDomain {
        CoefficientDomain::Integers
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn from_bigint(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn inv(&self, a: &BigInt) -> Option<BigInt> {
        if a.is_one() || *a == -BigInt::one() {
            Some(a.clone())
        } else {
            None
        }
    }
    fn div_exact(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        if b.is_zero() {
            return None;
        }
        let (q, r) = a.div_rem(b);
        r.is_zero().then_some(q)
    }
    fn format(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn is_negative(&self, a: &BigInt) -> bool {
        a.is_negative()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn domain(&self) -> CoefficientDomain {
        CoefficientDomain::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn format(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
}

impl Field for Rationals {}

// ---------------------------------------------------------------------------

/// The prime field `F_p` with `p < 2^63`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !modp::is_prime_u64(p) || p >= 1 << 63 {
            return Err(Error::InvalidArgument(format!(
                "{p} is not a supported prime"
            )));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
}

fn bigint_mod_u64(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

impl Ring for PrimeField {
    type Elem = u64;

    fn domain(&self) -> CoefficientDomain {
        CoefficientDomain::PrimeField(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        modp::add_mod(*a, *b, self.p)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        modp::sub_mod(*a, *b, self.p)
    }
    fn neg(&self, a: &u64) -> u64 {
        modp::sub_mod(0, *a, self.p)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        modp::mul_mod(*a, *b, self.p)
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        bigint_mod_u64(n, self.p)
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        modp::inv_mod(*a, self.p)
    }
    fn pow(&self, a: &u64, e: u64) -> u64 {
        modp::pow_mod(*a, e, self.p)
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
}

impl Field for PrimeField {}

/// `F_p` with a chosen element of exact multiplicative order `order`; the
/// residue-field image of a primitive root of unity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclotomicResidue {
    field: PrimeField,
    order: u64,
    root: u64,
}

impl CyclotomicResidue {
    /// Uses `g^((p-1)/order)` for the smallest generator `g`.
    pub fn new(p: u64, order: u64) -> Result<Self> {
        let field = PrimeField::new(p)?;
        if order == 0 || !(p - 1).is_multiple_of(order) {
            return Err(Error::InvalidArgument(format!(
                "no element of order {order} in F_{p}"
            )));
        }
        let root = modp::pow_mod(modp::primitive_root(p), (p - 1) / order, p);
        Ok(CyclotomicResidue { field, order, root })
    }

    pub fn with_root(p: u64, order: u64, root: u64) -> Result<Self> {
        let field = PrimeField::new(p)?;
        if modp::multiplicative_order(root, p) != Some(order) {
            return Err(Error::InvalidArgument(format!(
                "{root} does not have order {order} modulo {p}"
            )));
        }
        Ok(CyclotomicResidue { field, order, root })
    }

    pub fn root(&self) -> u64 {
        self.root
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }
}

impl Ring for CyclotomicResidue {
    type Elem = u64;

    fn domain(&self) -> CoefficientDomain {
        CoefficientDomain::CyclotomicResidue {
            p: self.field.p,
            order: self.order,
        }
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        self.field.add(a, b)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        self.field.sub(a, b)
    }
    fn neg(&self, a: &u64) -> u64 {
        self.field.neg(a)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.field.mul(a, b)
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        self.field.from_bigint(n)
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        self.field.inv(a)
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
}

impl Field for CyclotomicResidue {}

/// The quadratic extension `F_p(sqrt(delta))`, elements `a + b*sqrt(delta)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeSquareField {
    p: u64,
    delta: u64,
}

impl PrimeSquareField {
    pub fn new(p: u64, delta: u64) -> Result<Self> {
        PrimeField::new(p)?;
        let delta = delta % p;
        if p == 2 || delta == 0 || modp::pow_mod(delta, (p - 1) / 2, p) == 1 {
            return Err(Error::InvalidArgument(format!(
                "{delta} is not a quadratic non-residue modulo {p}"
            )));
        }
        Ok(PrimeSquareField { p, delta })
    }

    /// The embedding of `F_p`.
    pub fn base(&self, a: u64) -> (u64, u64) {
        (a % self.p, 0)
    }

    pub fn sqrt_delta(&self) -> (u64, u64) {
        (0, 1)
    }
}

impl Ring for PrimeSquareField {
    type Elem = (u64, u64);

    fn domain(&self) -> CoefficientDomain {
        CoefficientDomain::PrimeSquare {
            p: self.p,
            delta: self.delta,
        }
    }
    fn zero(&self) -> (u64, u64) {
        (0, 0)
    }
    fn one(&self) -> (u64, u64) {
        (1, 0)
    }
    fn is_zero(&self, a: &(u64, u64)) -> bool {
        *a == (0, 0)
    }
    fn add(&self, a: &(u64, u64), b: &(u64, u64)) -> (u64, u64) {
        (
            modp::add_mod(a.0, b.0, self.p),
            modp::add_mod(a.1, b.1, self.p),
        )
    }
    fn sub(&self, a: &(u64, u64), b: &(u64, u64)) -> (u64, u64) {
        (
            modp::sub_mod(a.0, b.0, self.p),
            modp::sub_mod(a.1, b.1, self.p),
        )
    }
    fn neg(&self, a: &(u64, u64)) -> (u64, u64) {
        self.sub(&(0, 0), a)
    }
    fn mul(&self, a: &(u64, u64), b: &(u64, u64)) -> (u64, u64) {
        let p = self.p;
        let re = modp::add_mod(
            modp::mul_mod(a.0, b.0, p),
            modp::mul_mod(modp::mul_mod(a.1, b.1, p), self.delta, p),
            p,
        );
        let im = modp::add_mod(modp::mul_mod(a.0, b.1, p), modp::mul_mod(a.1, b.0, p), p);
        (re, im)
    }
    fn from_bigint(&self, n: &BigInt) -> (u64, u64) {
        (bigint_mod_u64(n, self.p), 0)
    }
    fn inv(&self, a: &(u64, u64)) -> Option<(u64, u64)> {
        // (a0 + a1 w)^-1 = (a0 - a1 w) / (a0^2 - delta a1^2)
        let p = self.p;
        let norm = modp::sub_mod(
            modp::mul_mod(a.0, a.0, p),
            modp::mul_mod(self.delta, modp::mul_mod(a.1, a.1, p), p),
            p,
        );
        let ni = modp::inv_mod(norm, p)?;
        Some((
            modp::mul_mod(a.0, ni, p),
            modp::mul_mod(modp::sub_mod(0, a.1, p), ni, p),
        ))
    }
    fn format(&self, a: &(u64, u64)) -> String {
        format!("({}+{}*sqrt({}))", a.0, a.1, self.delta)
    }
    fn sqrt_int(&self, d: &BigInt) -> Option<(u64, u64)> {
        (bigint_mod_u64(d, self.p) == self.delta).then_some((0, 1))
    }
}

impl Field for PrimeSquareField {}

// ---------------------------------------------------------------------------

/// An element `(r + s*sqrt(D)) / q` of a quadratic field, in lowest terms
/// with `q > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadElem {
    r: BigInt,
    s: BigInt,
    q: BigInt,
}

impl QuadElem {
    /// Normalizes to lowest terms with positive denominator.
    pub fn new(r: BigInt, s: BigInt, q: BigInt) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        let g = r.gcd(&s).gcd(&q);
        let sign = if q.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let g = g * sign;
        Ok(QuadElem {
            r: &r / &g,
            s: &s / &g,
            q: &q / &g,
        })
    }

    pub fn from_int(n: BigInt) -> Self {
        QuadElem {
            r: n,
            s: BigInt::zero(),
            q: BigInt::one(),
        }
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }
    pub fn s(&self) -> &BigInt {
        &self.s
    }
    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn is_rational(&self) -> bool {
        self.s.is_zero()
    }
}

/// `Q(sqrt(D))` for a squarefree integer `D` other than 0 and 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadraticField {
    d: i64,
}

fn is_squarefree(n: i64) -> bool {
    let n = n.unsigned_abs();
    let mut q = 2u64;
    while q * q <= n {
        if n.is_multiple_of(q * q) {
            return false;
        }
        q += 1;
    }
    true
}

impl QuadraticField {
    pub fn new(d: i64) -> Result<Self> {
        if d == 0 || d == 1 || !is_squarefree(d) {
            return Err(Error::InvalidArgument(format!(
                "{d} is not a squarefree discriminant other than 0, 1"
            )));
        }
        Ok(QuadraticField { d })
    }

    pub fn discriminant(&self) -> i64 {
        self.d
    }

    /// `(r + s*sqrt(D)) / q`.
    pub fn elem(&self, r: i64, s: i64, q: i64) -> Result<QuadElem> {
        QuadElem::new(r.into(), s.into(), q.into())
    }

    pub fn conjugate(&self, a: &QuadElem) -> QuadElem {
        QuadElem {
            r: a.r.clone(),
            s: -&a.s,
            q: a.q.clone(),
        }
    }

    fn norm_parts(a: &QuadElem) -> (BigInt, BigInt) {
        (a.r.clone(), a.q.clone())
    }
}

impl Ring for QuadraticField {
    type Elem = QuadElem;

    fn domain(&self) -> CoefficientDomain {
        CoefficientDomain::QuadraticField(self.d)
    }
    fn zero(&self) -> QuadElem {
        QuadElem::from_int(BigInt::zero())
    }
    fn one(&self) -> QuadElem {
        QuadElem::from_int(BigInt::one())
    }
    fn is_zero(&self, a: &QuadElem) -> bool {
        a.r.is_zero() && a.s.is_zero()
    }
    fn add(&self, a: &QuadElem, b: &QuadElem) -> QuadElem {
        QuadElem::new(
            &a.r * &b.q + &b.r * &a.q,
            &a.s * &b.q + &b.s * &a.q,
            &a.q * &b.q,
        )
        .expect("nonzero denominator")
    }
    fn sub(&self, a: &QuadElem, b: &QuadElem) -> QuadElem {
        self.add(a, &self.neg(b))
    }
    fn neg(&self, a: &QuadElem) -> QuadElem {
        QuadElem {
            r: -&a.r,
            s: -&a.s,
            q: a.q.clone(),
        }
    }
    fn mul(&self, a: &QuadElem, b: &QuadElem) -> QuadElem {
        let d = BigInt::from(self.d);
        QuadElem::new(
            &a.r * &b.r + &a.s * &b.s * d,
            &a.r * &b.s + &a.s * &b.r,
            &a.q * &b.q,
        )
        .expect("nonzero denominator")
    }
    fn from_bigint(&self, n: &BigInt) -> QuadElem {
        QuadElem::from_int(n.clone())
    }
    fn inv(&self, a: &QuadElem) -> Option<QuadElem> {
        if self.is_zero(a) {
            return None;
        }
        // q (r - s w) / (r^2 - D s^2)
        let (r, q) = Self::norm_parts(a);
        let den = &r * &r - BigInt::from(self.d) * &a.s * &a.s;
        Some(QuadElem::new(&q * &r, -(&q * &a.s), den).expect("norm of nonzero element"))
    }
    fn format(&self, a: &QuadElem) -> String {
        if a.s.is_zero() {
            return if a.q.is_one() {
                a.r.to_string()
            } else {
                format!("{}/{}", a.r, a.q)
            };
        }
        let surd = format!("sqrt({})", self.d);
        let s_abs = a.s.abs();
        let s_part = if s_abs.is_one() {
            surd
        } else {
            format!("{s_abs}*{surd}")
        };
        let inner = if a.r.is_zero() {
            if a.s.is_negative() {
                format!("-{s_part}")
            } else {
                s_part
            }
        } else {
            let op = if a.s.is_negative() { '-' } else { '+' };
            format!("{}{op}{s_part}", a.r)
        };
        if a.q.is_one() {
            format!("({inner})")
        } else {
            format!("({inner})/{}", a.q)
        }
    }
    fn is_negative(&self, a: &QuadElem) -> bool {
        a.s.is_zero() && a.r.is_negative()
    }
    fn sqrt_int(&self, d: &BigInt) -> Option<QuadElem> {
        (*d == BigInt::from(self.d)).then(|| QuadElem {
            r: BigInt::zero(),
            s: BigInt::one(),
            q: BigInt::one(),
        })
    }
}

impl Field for QuadraticField {}
