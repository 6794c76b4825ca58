use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::arith::modp::{
    is_prime_u64, large_primes, multiplicative_order, pow_mod, primitive_root,
};
use crate::arith::{Integers, MultiPoly, PrimeField, Ring, UniPoly};
use crate::elim::poly_gcd;
use crate::error::{Error, Result};

use super::cert::{IrreducibilityCertificate, Method, SpecializationIdeal, Verdict, Witness};
use super::ffield::is_irreducible;

pub const DEFAULT_PRIME_BUDGET: u64 = 10_000;
pub const DEFAULT_MAX_ATTEMPTS: usize = 25;

/// Indices of the specialized variable and the surviving one.
fn split_vars(f: &MultiPoly<Integers>, var: &str) -> Result<(usize, usize)> {
    if f.nvars() != 2 {
        return Err(Error::InvalidArgument(format!(
            "expected a polynomial in two variables, got [{}]",
            f.vars().join(" ")
        )));
    }
    let spec = f.var_index(var)?;
    f.require_polynomial()?;
    Ok((spec, 1 - spec))
}

/// Coefficients in the surviving variable as univariate polynomials in the
/// specialized one, reduced mod `p`.
fn reduced_coeffs(
    f: &MultiPoly<Integers>,
    spec: usize,
    main: usize,
    p: u64,
) -> Vec<UniPoly<PrimeField>> {
    let field = PrimeField::new(p).expect("prime modulus");
    let deg = f.degree_in(main).unwrap_or(0).max(0) as usize;
    let dspec = f.degree_in(spec).unwrap_or(0).max(0) as usize;
    let mut dense = vec![vec![0u64; dspec + 1]; deg + 1];
    for (m, c) in f.terms() {
        let e = m.exps();
        dense[e[main] as usize][e[spec] as usize] = field.from_bigint(c);
    }
    dense.into_iter().map(|c| UniPoly::new(field, c)).collect()
}

/// Checks that the coefficients of `f` in its `main` variable have no
/// common factor: integer content 1 and no common factor in the other
/// variable.
pub fn check_content(f: &MultiPoly<Integers>, main: usize) -> Result<()> {
    match common_factor(f, main)? {
        None => Ok(()),
        Some(g) => Err(Error::Precondition(format!(
            "coefficients in {} share the factor {g}",
            f.vars()[main]
        ))),
    }
}

/// The common factor of the coefficients of `f` in its `main` variable,
/// when it is not constant. Integer content other than 1 is an error.
fn common_factor(f: &MultiPoly<Integers>, main: usize) -> Result<Option<MultiPoly<Integers>>> {
    let mut g = BigInt::zero();
    for (_, c) in f.terms() {
        g = g.gcd(c);
    }
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !g.is_one() {
        return Err(Error::Precondition(format!("integer content {g} is not 1")));
    }
    let coeffs: Vec<MultiPoly<Integers>> = f
        .coeffs_in(main)?
        .into_iter()
        .filter(|c| !c.is_zero())
        .collect();
    if coeffs.iter().any(|c| c.is_constant()) {
        return Ok(None);
    }
    let spec = 1 - main;
    // A prime not dividing the leading coefficient of some coefficient
    // cannot lower the degree of their common factor.
    for p in large_primes().take(4) {
        let pb = BigInt::from(p);
        let keeps_degree = coeffs.iter().any(|c| {
            let lc = c.leading_coeff_in(spec).expect("polynomial input");
            !lc.constant_term().mod_floor(&pb).is_zero()
        });
        if !keeps_degree {
            continue;
        }
        let red = reduced_coeffs(f, spec, main, p);
        let mut acc = UniPoly::zero(PrimeField::new(p)?);
        for c in red.iter().filter(|c| !c.is_zero()) {
            acc = acc.gcd(c);
            if acc.degree() == Some(0) {
                return Ok(None);
            }
        }
        break;
    }
    let mut acc = coeffs[0].zero_like();
    for c in &coeffs {
        acc = poly_gcd(&acc, c)?;
    }
    Ok((!acc.is_constant()).then_some(acc))
}

enum Outcome {
    Irreducible,
    Reducible,
    DegreeDrop(usize),
}

/// Reduction of `f` at `spec = a` modulo `p`, tested for irreducibility.
fn try_point(f: &MultiPoly<Integers>, spec: usize, main: usize, a: u64, p: u64) -> Outcome {
    let field = PrimeField::new(p).expect("prime modulus");
    let deg = f.degree_in(main).unwrap_or(0).max(0) as usize;
    let mut c = vec![0u64; deg + 1];
    for (m, k) in f.terms() {
        let e = m.exps();
        let v = field.mul(&field.from_bigint(k), &pow_mod(a % p, e[spec] as u64, p));
        let slot = &mut c[e[main] as usize];
        *slot = field.add(slot, &v);
    }
    let u = UniPoly::new(field, c);
    match u.degree() {
        Some(d) if d == deg => {
            if is_irreducible(&u) {
                Outcome::Irreducible
            } else {
                Outcome::Reducible
            }
        }
        other => Outcome::DegreeDrop(other.unwrap_or(0)),
    }
}

/// A non-constant common factor of the coefficients splits `f` whenever
/// `f` also has positive degree in `main`.
fn refute_by_content(
    f: &MultiPoly<Integers>,
    main: usize,
    cert: &mut IrreducibilityCertificate,
) -> Result<bool> {
    let Some(g) = common_factor(f, main)? else {
        return Ok(false);
    };
    if f.degree_in(main).unwrap_or(0) < 1 {
        return Ok(false);
    }
    cert.witness = Witness::None;
    cert.verdict = Verdict::Refuted;
    cert.trail.push(format!(
        "coefficients in {} share the factor {g}",
        f.vars()[main]
    ));
    Ok(true)
}

fn residue(a: i64, p: u64) -> u64 {
    a.rem_euclid(p as i64) as u64
}

/// Certificate of irreducibility over the rationals from one ideal
/// `(var - a, p)`.
pub fn specialize_irreducible_q(
    f: &MultiPoly<Integers>,
    ideal: &SpecializationIdeal,
    name: &str,
) -> Result<IrreducibilityCertificate> {
    let (spec, main) = split_vars(f, ideal.var())?;
    let mut cert = IrreducibilityCertificate::new(f, name, Method::Specialization);
    cert.witness = Witness::Ideal(ideal.clone());
    if refute_by_content(f, main, &mut cert)? {
        return Ok(cert);
    }
    match try_point(
        f,
        spec,
        main,
        residue(ideal.point(), ideal.prime()),
        ideal.prime(),
    ) {
        Outcome::Irreducible => cert.verdict = Verdict::Certified,
        Outcome::Reducible => cert.trail.push(format!("{ideal}: reduction factors")),
        Outcome::DegreeDrop(k) => {
            return Err(Error::Precondition(format!(
                "degree in {} drops from {} to {k} modulo {ideal}",
                f.vars()[main],
                f.degree_in(main).unwrap_or(0)
            )))
        }
    }
    Ok(cert)
}

/// First ideal `(var - a, p)` in candidate order (points outer, primes
/// inner) whose reduction keeps full degree and is irreducible.
pub fn find_certificate(
    f: &MultiPoly<Integers>,
    name: &str,
    var: &str,
    points: &[i64],
    primes: &[u64],
) -> Result<IrreducibilityCertificate> {
    let pairs: Vec<(i64, u64)> = points
        .iter()
        .flat_map(|&a| primes.iter().map(move |&p| (a, p)))
        .collect();
    find_certificate_in(f, name, var, &pairs)
}

/// [`find_certificate`] over an explicit ordered list of `(a, p)` pairs.
pub fn find_certificate_in(
    f: &MultiPoly<Integers>,
    name: &str,
    var: &str,
    pairs: &[(i64, u64)],
) -> Result<IrreducibilityCertificate> {
    if pairs.is_empty() {
        return Err(Error::InvalidArgument("empty candidate list".into()));
    }
    if let Some(&(_, p)) = pairs.iter().find(|(_, p)| !is_prime_u64(*p)) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let (spec, main) = split_vars(f, var)?;
    let mut cert = IrreducibilityCertificate::new(f, name, Method::Specialization);
    if refute_by_content(f, main, &mut cert)? {
        return Ok(cert);
    }
    let chunk = 4 * rayon::current_num_threads().max(1);
    for block in pairs.chunks(chunk) {
        let outcomes: Vec<Outcome> = block
            .par_iter()
            .map(|&(a, p)| try_point(f, spec, main, residue(a, p), p))
            .collect();
        for (&(a, p), outcome) in block.iter().zip(outcomes) {
            let ideal = SpecializationIdeal::new(var, a, p)?;
            match outcome {
                Outcome::Irreducible => {
                    cert.witness = Witness::Ideal(ideal);
                    cert.verdict = Verdict::Certified;
                    return Ok(cert);
                }
                Outcome::Reducible => cert.trail.push(format!("{ideal}: reduction factors")),
                Outcome::DegreeDrop(k) => cert.trail.push(format!("{ideal}: degree drops to {k}")),
            }
        }
    }
    Ok(cert)
}

/// Irreducibility of `f(zeta_d, Y)` over the `d`-th cyclotomic field, for
/// `f` in `(X, Y)` and odd `d >= 3`, from a prime `p = 1 mod d` and an
/// element of order `d` in `F_p` at which the reduction stays irreducible.
/// Exhausting the search is inconclusive, never a refutation.
pub fn certify_root_of_unity_specialization(
    f: &MultiPoly<Integers>,
    name: &str,
    d: u64,
    p_budget: u64,
) -> Result<IrreducibilityCertificate> {
    certify_root_of_unity_with(f, name, d, p_budget, DEFAULT_MAX_ATTEMPTS)
}

pub fn certify_root_of_unity_with(
    f: &MultiPoly<Integers>,
    name: &str,
    d: u64,
    p_budget: u64,
    max_attempts: usize,
) -> Result<IrreducibilityCertificate> {
    if d < 3 || d.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "d = {d} must be odd and at least 3"
        )));
    }
    let var = f.vars().first().cloned().unwrap_or_default();
    let (spec, main) = split_vars(f, &var)?;
    let lead = f.leading_coeff().ok_or(Error::ZeroPolynomial)?.abs();
    let mut cert = IrreducibilityCertificate::new(f, name, Method::RootOfUnity(d));
    let mut attempts = 0;
    let mut p = 2 * d + 1;
    while p <= p_budget && attempts < max_attempts {
        if !is_prime_u64(p) {
            p += 2 * d;
            continue;
        }
        if (&lead % p).is_zero() {
            cert.trail
                .push(format!("p={p}: divides the leading coefficient"));
            p += 2 * d;
            continue;
        }
        let base = pow_mod(primitive_root(p), (p - 1) / d, p);
        if multiplicative_order(base, p) != Some(d) {
            cert.trail.push(format!("p={p}: no element of order {d}"));
            p += 2 * d;
            continue;
        }
        for k in (1..d).filter(|k| k.gcd(&d) == 1) {
            if attempts >= max_attempts {
                break;
            }
            attempts += 1;
            let c = pow_mod(base, k, p);
            let witness = Witness::RootOfUnity { d, p, c };
            match try_point(f, spec, main, c, p) {
                Outcome::Irreducible => {
                    cert.witness = witness;
                    cert.verdict = Verdict::Certified;
                    return Ok(cert);
                }
                Outcome::Reducible => cert.trail.push(format!("{witness}: reduction factors")),
                Outcome::DegreeDrop(k) => {
                    cert.trail.push(format!("{witness}: degree drops to {k}"))
                }
            }
        }
        p += 2 * d;
    }
    cert.trail.push(format!(
        "stopped after {attempts} attempts, next prime candidate {p}, budget {p_budget}"
    ));
    Ok(cert)
}
