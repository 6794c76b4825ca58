//! Integrality verdicts, factorization checks, and the census-manifold and
//! knot-table checks.

mod knots;
mod m137;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{parse_poly, Integers, Monomial, MultiPoly, QuadElem, QuadraticField, Ring};
use crate::elim::divides;
use crate::error::{Error, Result};

pub use knots::{KnotRow, KnotTable, KNOT_COUNTS};
pub use m137::{m137_checks, parse_matrices, M137Report, MatrixFixture};

/// Claimed factors of `R(-2, Y)`, with multiplicities.
pub const R_AT_MINUS_TWO: &[(&str, u32)] = &[
    ("Y^9 + 15*Y^8 + 104*Y^7 + 435*Y^6 + 1205*Y^5 + 2285*Y^4 + 2956*Y^3 + 2506*Y^2 + 1257*Y + 283", 2),
    ("2*Y^2 - 5*Y + 4", 1),
    ("4*Y^2 - 17*Y + 22", 1),
    ("4*Y^2 - 11*Y + 8", 1),
];

/// Claimed factors of `R1(2, Y)`, with multiplicities.
pub const R1_AT_TWO: &[(&str, u32)] = &[
    ("Y^3 + 2*Y^2 - 4*Y - 16", 2),
    ("Y^4 - 2*Y^3 - 4*Y^2 + 8*Y + 16", 2),
    ("8*Y^4 - 52*Y^3 + 132*Y^2 - 153*Y + 68", 1),
];

/// Primitive integer minimal polynomial in `Y` with positive leading
/// coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct MinimalPolynomial(MultiPoly<Integers>);

impl MinimalPolynomial {
    pub fn poly(&self) -> &MultiPoly<Integers> {
        &self.0
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.0
            .leading_coeff()
            .cloned()
            .expect("nonzero minimal polynomial")
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_one()
    }

    /// Evaluates at a field element.
    pub fn annihilates(&self, field: &QuadraticField, e: &QuadElem) -> bool {
        let v = self
            .0
            .evaluate_in(field, |c| field.from_bigint(c), std::slice::from_ref(e))
            .expect("one variable");
        field.is_zero(&v)
    }
}

impl fmt::Display for MinimalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn primitive_positive(terms: Vec<(i32, BigInt)>) -> MinimalPolynomial {
    let g = terms.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
    let lead_neg = terms
        .iter()
        .max_by_key(|(e, _)| *e)
        .is_some_and(|(_, c)| c.is_negative());
    let g = if lead_neg { -g } else { g };
    let mut p = MultiPoly::zero(Integers, &["Y"]);
    for (e, c) in terms {
        p.add_term(Monomial::new(vec![e]), c / &g);
    }
    MinimalPolynomial(p)
}

/// Minimal polynomial over the rationals of `(r + s sqrt(D)) / q`.
pub fn minimal_polynomial(field: &QuadraticField, e: &QuadElem) -> MinimalPolynomial {
    let (r, s, q) = (e.r(), e.s(), e.q());
    if s.is_zero() {
        return primitive_positive(vec![(1, q.clone()), (0, -r)]);
    }
    // (qY - r)^2 - s^2 D
    let d = BigInt::from(field.discriminant());
    primitive_positive(vec![(2, q * q), (1, -(q * r) * 2), (0, r * r - s * s * d)])
}

/// Prime factors by trial division, ascending.
fn prime_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        if (&n % &p).is_zero() {
            out.push(p.clone());
            while (&n % &p).is_zero() {
                n /= &p;
            }
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push(n);
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct IntegralityVerdict {
    pub element: String,
    pub minpoly: MinimalPolynomial,
    pub integral: bool,
    /// Primes dividing the leading coefficient of the minimal polynomial.
    pub primes: Vec<BigInt>,
}

impl IntegralityVerdict {
    pub fn line(&self) -> String {
        let primes: Vec<String> = self.primes.iter().map(BigInt::to_string).collect();
        format!(
            "INTEGRALITY {} minpoly={} integral={} primes={{{}}}",
            self.element,
            self.minpoly,
            if self.integral { "yes" } else { "no" },
            primes.join(",")
        )
    }
}

impl fmt::Display for IntegralityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.line())
    }
}

/// Integral iff the minimal polynomial is monic; otherwise the primes
/// dividing its leading coefficient certify non-integrality.
pub fn integrality(field: &QuadraticField, e: &QuadElem) -> IntegralityVerdict {
    let minpoly = minimal_polynomial(field, e);
    let primes = prime_divisors(&minpoly.leading_coeff());
    IntegralityVerdict {
        element: field.format(e),
        integral: primes.is_empty(),
        minpoly,
        primes,
    }
}

/// Outcome of the unit-leading-coefficient argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecializationVerdict {
    AllRootsIntegral,
    NoConclusion(String),
}

impl fmt::Display for SpecializationVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecializationVerdict::AllRootsIntegral => f.write_str("all roots integral"),
            SpecializationVerdict::NoConclusion(_) => f.write_str("no conclusion"),
        }
    }
}

/// For `f` in `(t, Y)` with integer coefficients, specialized at an
/// algebraic integer `t0`: when the leading `Y`-coefficient is `±t^k` and
/// `t0` is a unit (or `k = 0`), every root in `Y` is an algebraic integer.
pub fn integral_specialization_verdict(
    f: &MultiPoly<Integers>,
    t0_unit: bool,
) -> Result<SpecializationVerdict> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.nvars() != 2 {
        return Err(Error::InvalidArgument(format!(
            "expected a polynomial in (t, Y), got [{}]",
            f.vars().join(" ")
        )));
    }
    f.require_polynomial()?;
    let lead = f.leading_coeff_in(1)?;
    let single = lead.len() == 1 && lead.terms().all(|(_, c)| c.abs().is_one());
    if !single {
        return Ok(SpecializationVerdict::NoConclusion(format!(
            "leading coefficient {lead} is not a unit times a power of {}",
            f.vars()[0]
        )));
    }
    let k = lead.degree_in(0).unwrap_or(0);
    if k == 0 || t0_unit {
        Ok(SpecializationVerdict::AllRootsIntegral)
    } else {
        Ok(SpecializationVerdict::NoConclusion(format!(
            "leading coefficient {lead} and the specialization point is not a unit"
        )))
    }
}

/// Comparison of a claimed product with a target polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorizationCheck {
    pub product: MultiPoly<Integers>,
    /// `Some(1)` or `Some(-1)` when `target = sign * product`.
    pub sign: Option<i32>,
    /// `target - product` on a mismatch.
    pub residual: Option<MultiPoly<Integers>>,
    /// `target / product` on a mismatch where the division is exact.
    pub cofactor: Option<MultiPoly<Integers>>,
}

impl FactorizationCheck {
    pub fn matches(&self) -> bool {
        self.sign.is_some()
    }
}

pub fn verify_factorization(
    factors: &[(MultiPoly<Integers>, u32)],
    target: &MultiPoly<Integers>,
) -> Result<FactorizationCheck> {
    let mut product = target.constant_like(BigInt::one());
    for (f, k) in factors {
        product = product.try_mul(&f.pow(*k))?;
    }
    let sign = if product == *target {
        Some(1)
    } else if -&product == *target {
        Some(-1)
    } else {
        None
    };
    let (residual, cofactor) = if sign.is_some() {
        (None, None)
    } else {
        let q = if product.is_zero() {
            None
        } else {
            divides(&product, target)?.quotient()
        };
        (Some(target.try_sub(&product)?), q)
    };
    Ok(FactorizationCheck {
        product,
        sign,
        residual,
        cofactor,
    })
}

/// Parses a factor list given as text in the variable `var`.
pub fn parse_factors(
    factors: &[(&str, u32)],
    var: &str,
) -> Result<Vec<(MultiPoly<Integers>, u32)>> {
    factors
        .iter()
        .map(|(t, k)| Ok((parse_poly(t, &[var], Integers)?, *k)))
        .collect()
}
