use crate::arith::modp::prime_factors_u64;
use crate::arith::{MultiPoly, PrimeField, UniPoly};
use crate::error::{Error, Result};

/// Deterministic irreducibility over `F_p` of a polynomial in which at most
/// one variable occurs. Constants are units, hence not irreducible.
pub fn fp_irreducible(f: &MultiPoly<PrimeField>) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    f.require_polynomial()?;
    let occurring = f.occurring_vars();
    if occurring.len() > 1 {
        return Err(Error::InvalidArgument(format!(
            "expected a univariate polynomial, {} variables occur",
            occurring.len()
        )));
    }
    let keep = occurring.first().copied().unwrap_or(0);
    let mut u = f.clone();
    for i in (0..f.nvars()).rev() {
        if i != keep {
            u = u.drop_var(i);
        }
    }
    Ok(is_irreducible(&UniPoly::from_multi(&u)?))
}

/// Distinct-degree ladder: `f` of degree n is irreducible iff
/// `x^(p^n) = x mod f` and `gcd(x^(p^(n/q)) - x, f) = 1` for each prime `q | n`.
pub fn is_irreducible(f: &UniPoly<PrimeField>) -> bool {
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let f = f.monic();
    let p = f.ring().modulus() as u128;
    let x = UniPoly::x(*f.ring());
    // frob[k] = x^(p^k) mod f
    let mut frob = Vec::with_capacity(n + 1);
    frob.push(x.rem(&f));
    for k in 1..=n {
        let next = frob[k - 1].pow_mod(p, &f);
        frob.push(next);
    }
    if frob[n] != x.rem(&f) {
        return false;
    }
    prime_factors_u64(n as u64).into_iter().all(|q| {
        let h = frob[n / q as usize].sub(&x);
        let g = h.gcd(&f);
        g.degree() == Some(0)
    })
}
